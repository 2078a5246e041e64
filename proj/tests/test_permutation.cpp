#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ssperm/enumeration.hpp"
#include "ssperm/permutation.hpp"

using namespace ssperm;

namespace {

Permutation P(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }

// Independent containment oracle for length-3 patterns: plain triple loop.
bool contains3_bf(const Permutation& pi, const Permutation& p) {
    const int n = pi.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int a = pi.at(i), b = pi.at(j), c = pi.at(k);
                const int pa = p.at(0), pb = p.at(1), pc = p.at(2);
                if (((a < b) == (pa < pb)) && ((a < c) == (pa < pc)) &&
                    ((b < c) == (pb < pc)))
                    return true;
            }
    return false;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(Permutation::parse("").str() == "");
    CHECK(Permutation::parse("1").str() == "1");
    CHECK(Permutation::parse("6,2,1,4,3,5,10,9,8,7").str() == "6,2,1,4,3,5,10,9,8,7");
    CHECK(Permutation::parse(" 2 , 1 ").str() == "2,1");
    CHECK_THROWS_AS(Permutation::parse("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,3"), std::invalid_argument);  // not onto
    CHECK_THROWS_AS(Permutation::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("0,1"), std::invalid_argument);
}

TEST_CASE("reduce") {
    CHECK(reduce(std::vector<int>{2, 5, 4, 7}) == P({1, 3, 2, 4}));
    CHECK(reduce(Permutation()) == Permutation());
    CHECK(reduce(std::vector<int>{9, 6, 2}) == P({3, 2, 1}));
    CHECK_THROWS_AS(reduce(std::vector<int>{3, 3}), std::invalid_argument);
    // idempotent, and identity on permutations
    for_each_permutation(5, [](const Permutation& pi) {
        CHECK(reduce(pi) == pi);
    });
}

TEST_CASE("reverse and complement") {
    CHECK(reverse(P({3, 1, 4, 2, 5})) == P({5, 2, 4, 1, 3}));
    CHECK(reverse(Permutation()) == Permutation());
    CHECK(reverse(P({1, 2})) == P({2, 1}));
    CHECK(complement(P({3, 1, 4, 2, 5})) == P({3, 5, 2, 4, 1}));
    CHECK(complement(P({1, 2, 3})) == P({3, 2, 1}));
    for_each_permutation(6, [](const Permutation& pi) {
        CHECK(reverse(reverse(pi)) == pi);
        CHECK(complement(complement(pi)) == pi);
    });
}

TEST_CASE("des and asc") {
    CHECK(des(P({5, 6, 2, 4, 1, 3})) == 2);
    CHECK(asc(P({3, 5, 1, 2, 4})) == 3);
    CHECK(des(Permutation::identity(7)) == 0);
    CHECK(des(Permutation()) == 0);
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [n](const Permutation& pi) {
            CHECK(des(pi) + asc(pi) == std::max(n - 1, 0));
        });
}

TEST_CASE("mnd and mna") {
    CHECK(mnd(P({1, 3, 2, 5, 4})) == 2);
    CHECK(mnd(P({3, 2, 1, 5, 4})) == 2);
    CHECK(mnd(Permutation()) == 0);
    CHECK(mnd(P({1})) == 0);
    CHECK(mnd(P({1, 6, 5, 2, 4, 3})) == 2);
    CHECK(mna(P({3, 5, 1, 2, 4})) == 2);

    // dual oracle: run decomposition vs greedy interval scheduling
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [](const Permutation& pi) {
            CHECK(mnd(pi) == mnd_scheduling(pi));
        });
    // symmetry relations
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [](const Permutation& pi) {
            CHECK(mna(pi) == mnd(complement(pi)));
            CHECK(asc(pi) == des(reverse(pi)));
        });
    // mnd <= des <= 2 mnd
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [](const Permutation& pi) {
            CHECK(mnd(pi) <= des(pi));
            CHECK(des(pi) <= 2 * mnd(pi));
        });
}

TEST_CASE("run and extremum statistics") {
    CHECK(lmin(P({5, 2, 3, 4, 1})) == 3);
    CHECK(rmax(P({5, 2, 3, 4, 1})) == 3);
    CHECK(rmin(P({4, 1, 3, 6, 2, 5})) == 3);
    CHECK(ldr(P({5, 2, 6, 3, 4, 1})) == 2);
    CHECK(rar(P({4, 1, 3, 6, 2, 5})) == 2);
    CHECK(ldr(P({1})) == 1);
    CHECK(rar(P({1})) == 1);
    const Permutation eps;
    CHECK(ldr(eps) == 0);
    CHECK(rar(eps) == 0);
    CHECK(lmin(eps) == 0);
    CHECK(rmin(eps) == 0);
    CHECK(rmax(eps) == 0);
    CHECK(des(eps) == 0);
}

TEST_CASE("pattern containment") {
    const Permutation p231 = P({2, 3, 1});
    CHECK(contains(p231, p231));
    CHECK(avoids(Permutation::identity(6), p231));
    CHECK(contains(P({4, 1, 3, 6, 2, 5}), p231));
    const auto occ = find_occurrence(P({4, 1, 3, 6, 2, 5}), p231);
    REQUIRE(occ.has_value());
    CHECK(occ->size() == 3);

    // brute-force oracle over S_6 for every length-3 pattern
    std::vector<Permutation> patterns;
    for_each_permutation(3, [&](const Permutation& p) { patterns.push_back(p); });
    for_each_permutation(6, [&](const Permutation& pi) {
        for (const Permutation& p : patterns)
            CHECK(contains(pi, p) == contains3_bf(pi, p));
    });
}

TEST_CASE("stack sorting") {
    CHECK(stack_sort(Permutation()) == Permutation());
    CHECK(stack_sort(P({1, 3, 2})) == P({1, 2, 3}));
    CHECK(stack_sort(P({2, 3, 1})) == P({2, 1, 3}));
    CHECK(is_stack_sortable(P({1, 3, 2})));
    CHECK_FALSE(is_stack_sortable(P({2, 3, 1})));
    for (int n = 0; n <= 6; ++n) CHECK(is_stack_sortable(Permutation::identity(n)));

    const Permutation p231 = P({2, 3, 1});
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            CHECK(is_stack_sortable(pi) == avoids(pi, p231));
        });
}

TEST_CASE("statistic registry") {
    CHECK(statistic_names().size() == 9);
    for (const std::string& name : statistic_names()) {
        CHECK(statistic_by_name(name) != nullptr);
        CHECK(statistic_by_name(name)(Permutation()) == 0);
    }
    CHECK(statistic_by_name("nope") == nullptr);
    CHECK(statistic_by_name("des")(P({5, 6, 2, 4, 1, 3})) == 2);
}
