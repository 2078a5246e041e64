#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ssperm/bijections.hpp"
#include "ssperm/enumeration.hpp"

using namespace ssperm;

namespace {

Permutation P(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }
const Permutation kPat231 = P({2, 3, 1});

FullBinaryTree fig1_tree() { return FullBinaryTree::parse("((()())((()())()))(()())"); }
PlaneTree fig2_tree() { return PlaneTree::parse("(()(()))()((())(()))"); }

}  // namespace

TEST_CASE("f: base cases and worked pairs") {
    CHECK(f_involution(Permutation()) == Permutation());
    CHECK(f_involution(P({1})) == P({1}));
    CHECK(f_involution(P({2, 1})) == P({1, 2}));
    CHECK(f_involution(P({1, 2})) == P({2, 1}));
    CHECK(f_involution(P({2, 1, 3})) == P({3, 1, 2}));
    CHECK(f_involution(P({3, 1, 2})) == P({2, 1, 3}));
    CHECK_THROWS_AS(f_involution(P({2, 3, 1})), std::domain_error);
}

TEST_CASE("f: involution, closure and six-statistic transport") {
    // The harness checks the full eight-coordinate claim and reports the
    // lmin/rmin counterexamples it finds; these six transport exactly.
    for (int n = 0; n <= 7; ++n) {
        for (const Permutation& pi : avoiders(n, kPat231)) {
            const Permutation im = f_involution(pi);
            CHECK(avoids(im, kPat231));
            CHECK(f_involution(im) == pi);
            CHECK(mnd(pi) == mna(im));
            CHECK(mna(pi) == mnd(im));
            CHECK(asc(pi) == des(im));
            CHECK(des(pi) == asc(im));
            CHECK(ldr(pi) == rar(im));
            CHECK(rar(pi) == ldr(im));
        }
    }
    // the smallest permutation where the claimed lmin/rmin pairing breaks
    const Permutation fixed = P({1, 3, 2});
    CHECK(f_involution(fixed) == fixed);
    CHECK(lmin(fixed) != rmin(fixed));
}

TEST_CASE("block decompositions") {
    const BlockDecomposition r = rmax_blocks(P({2, 1, 4, 3}));
    REQUIRE(r.delimiters == std::vector<int>{4, 3});
    REQUIRE(r.blocks.size() == 2);
    CHECK(r.blocks[0] == std::vector<int>{2, 1});
    CHECK(r.blocks[1].empty());

    const BlockDecomposition l = lmin_blocks(P({4, 1, 3, 2}));
    REQUIRE(l.delimiters == std::vector<int>{4, 1});
    REQUIRE(l.blocks.size() == 2);
    CHECK(l.blocks[0] == std::vector<int>{3, 2});
    CHECK(l.blocks[1].empty());

    CHECK(rmax_blocks(Permutation()).blocks.empty());
    CHECK_THROWS_AS(rmax_blocks(P({2, 3, 1})), std::domain_error);
}

TEST_CASE("g: worked values and structure") {
    CHECK(g_map(Permutation()) == Permutation());
    CHECK(g_map(P({3, 2, 1})) == P({3, 2, 1}));
    CHECK(g_map(P({2, 1, 3})) == P({1, 3, 2}));
    CHECK(g_map(P({2, 1, 4, 3})) == P({4, 1, 3, 2}));
    CHECK_THROWS_AS(g_map(P({2, 3, 1})), std::domain_error);
    CHECK_THROWS_AS(g_inv(P({2, 3, 1})), std::domain_error);

    for (int n = 0; n <= 7; ++n) {
        std::set<Permutation> images;
        const auto cls = avoiders(n, kPat231);
        for (const Permutation& pi : cls) {
            const Permutation im = g_map(pi);
            CHECK(avoids(im, kPat231));
            CHECK(ldr(im) == rmax(pi));
            CHECK(g_inv(im) == pi);
            images.insert(im);
            // block patterns carried over: red(B_i) = red(A_i)
            const auto rform = rmax_blocks(pi);
            const auto lform = lmin_blocks(im);
            REQUIRE(rform.blocks.size() == lform.blocks.size());
            for (size_t i = 0; i < rform.blocks.size(); ++i)
                CHECK(reduce(std::span<const int>(rform.blocks[i])) ==
                      reduce(std::span<const int>(lform.blocks[i])));
        }
        CHECK(images.size() == cls.size());
    }
}

TEST_CASE("h: worked values and rmax identity") {
    CHECK(h_map(FullBinaryTree::leaf()) == Permutation());
    CHECK(h_map(FullBinaryTree::parse("()()")) == P({1}));
    CHECK(h_map(fig1_tree()).str() == "1,6,3,2,5,4");
    for (int n = 0; n <= 6; ++n)
        for (const FullBinaryTree& t : all_full_binary_trees(n))
            CHECK(lpath(t) == rmax(h_map(t)));
}

TEST_CASE("h-plus: worked values, theorem identity, bijection, inverse") {
    CHECK(h_plus(FullBinaryTree::leaf()) == Permutation());
    CHECK(h_plus(fig1_tree()).str() == "1,6,5,2,4,3");
    CHECK(h_plus_inv(Permutation::parse("1,6,5,2,4,3")) == fig1_tree());
    CHECK_THROWS_AS(h_plus_inv(P({2, 3, 1})), std::domain_error);

    // regression: tree where rearranging only the top-level block loses a
    // non-overlapping descent (X = 2, 10 edges)
    const FullBinaryTree tricky = FullBinaryTree::parse("()((()((()())()))())");
    CHECK(tricky.internal_count() == 5);
    CHECK(x_stat(tricky) == 2);
    CHECK(mnd(h_plus(tricky)) == 2);
    // regression: tree where re-running the rearrangement over an already
    // rearranged block merges two descents (X = 3, 12 edges)
    const FullBinaryTree tricky2 = FullBinaryTree::parse("(((()())((()())()))())()");
    CHECK(tricky2.internal_count() == 6);
    CHECK(x_stat(tricky2) == 3);
    CHECK(mnd(h_plus(tricky2)) == 3);

    for (int n = 0; n <= 7; ++n) {
        std::set<Permutation> images;
        const auto trees = all_full_binary_trees(n);
        for (const FullBinaryTree& t : trees) {
            const Permutation im = h_plus(t);
            CHECK(avoids(im, kPat231));
            CHECK(x_stat(t) == mnd(im));
            CHECK(h_plus_inv(im) == t);
            images.insert(im);
        }
        CHECK(images.size() == trees.size());
    }
}

TEST_CASE("z: worked values") {
    CHECK(z_map(PlaneTree()) == Permutation());
    CHECK(z_map(PlaneTree::parse("()")) == P({1}));
    CHECK(z_map(fig2_tree()).str() == "6,2,1,4,3,5,10,9,8,7");
    CHECK(z_inv(Permutation::parse("6,2,1,4,3,5,10,9,8,7")) == fig2_tree());
    CHECK_THROWS_AS(z_inv(P({2, 3, 1})), std::domain_error);
}

TEST_CASE("z: bijection, statistic transport, parity") {
    for (int n = 0; n <= 7; ++n) {
        std::set<Permutation> images;
        const auto trees = all_plane_trees(n);
        for (const PlaneTree& t : trees) {
            const Permutation im = z_map(t);
            CHECK(avoids(im, kPat231));
            CHECK(marked_count(t) == mnd(im));
            CHECK(z_inv(im) == t);
            images.insert(im);
            if (n >= 1) {
                bool root_has_leaf = false;
                for (const PlaneTree& c : t.children())
                    if (c.is_leaf()) root_has_leaf = true;
                CHECK((ldr(im) % 2 == 1) == root_has_leaf);
            }
        }
        CHECK(images.size() == trees.size());
    }
}

TEST_CASE("traces") {
    Trace trace;
    z_map(fig2_tree(), &trace);
    REQUIRE(!trace.empty());
    CHECK(trace[0].label == "5");  // root has a leaf child and several subtrees
    CHECK(trace[0].output == "6,2,1,4,3,5,10,9,8,7");
    bool saw_case_2 = false;
    for (const TraceStep& s : trace) saw_case_2 = saw_case_2 || s.label == "2";
    CHECK(saw_case_2);

    Trace ftrace;
    f_involution(P({2, 1, 3}), &ftrace);
    CHECK(!ftrace.empty());
    CHECK(ftrace[0].output == "3,1,2");
}
