#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ssperm/enumeration.hpp"
#include "ssperm/tree.hpp"

using namespace ssperm;

namespace {

const char* kFig1Word = "((()())((()())()))(()())";
const char* kFig2Word = "(()(()))()((())(()))";

FullBinaryTree fig1_tree() {
    using T = FullBinaryTree;
    // root: left = (4-node over two leaves, 3-node(2-node over two leaves, leaf)),
    //       right = node over two leaves
    T n4 = T::branch(T::leaf(), T::leaf());
    T n2 = T::branch(T::leaf(), T::leaf());
    T n3 = T::branch(std::move(n2), T::leaf());
    T n5 = T::branch(std::move(n4), std::move(n3));
    T n1 = T::branch(T::leaf(), T::leaf());
    return T::branch(std::move(n5), std::move(n1));
}

PlaneTree fig2_tree() {
    // root children: [subtree(leaf, path-2), leaf, subtree(path-2, path-2)]
    PlaneTree path2(std::vector<PlaneTree>{PlaneTree(std::vector<PlaneTree>{PlaneTree()})});
    PlaneTree c10(std::vector<PlaneTree>{PlaneTree(), PlaneTree(std::vector<PlaneTree>{PlaneTree()})});
    PlaneTree c5(std::vector<PlaneTree>{
        PlaneTree(std::vector<PlaneTree>{PlaneTree()}),
        PlaneTree(std::vector<PlaneTree>{PlaneTree()})});
    return PlaneTree(std::vector<PlaneTree>{std::move(c10), PlaneTree(), std::move(c5)});
}

}  // namespace

TEST_CASE("plane tree parse and print") {
    CHECK(PlaneTree::parse("") == PlaneTree());
    CHECK(PlaneTree::parse("").edge_count() == 0);
    CHECK(PlaneTree::parse("()").edge_count() == 1);
    // one child of the root carrying two leaf children
    const PlaneTree t = PlaneTree::parse("(()())");
    CHECK(t.edge_count() == 3);
    CHECK(t.children().size() == 1);
    CHECK(t.children()[0].children().size() == 2);
    CHECK(PlaneTree::parse(kFig2Word) == fig2_tree());
    CHECK(fig2_tree().str() == kFig2Word);
    CHECK(fig2_tree().edge_count() == 10);
    CHECK_THROWS_AS(PlaneTree::parse("(("), std::invalid_argument);
    CHECK_THROWS_AS(PlaneTree::parse("())"), std::invalid_argument);
    CHECK_THROWS_AS(PlaneTree::parse(")("), std::invalid_argument);

    // exhaustive round-trip on all plane trees with <= 8 edges
    for (int n = 0; n <= 8; ++n) {
        std::set<std::string> words;
        for (const PlaneTree& pt : all_plane_trees(n)) {
            const std::string w = pt.str();
            CHECK(PlaneTree::parse(w) == pt);
            words.insert(w);
            CHECK(pt.edge_count() == n);
        }
        CHECK(words.size() == all_plane_trees(n).size());
    }
}

TEST_CASE("full binary tree parse, arity, counts") {
    CHECK(FullBinaryTree::parse("") == FullBinaryTree::leaf());
    CHECK(FullBinaryTree::parse("()()").internal_count() == 1);
    CHECK(FullBinaryTree::parse(kFig1Word) == fig1_tree());
    CHECK(fig1_tree().str() == kFig1Word);
    CHECK(fig1_tree().edge_count() == 12);
    CHECK_THROWS_AS(FullBinaryTree::parse("()"), std::invalid_argument);
    CHECK_THROWS_AS(FullBinaryTree::parse("(())"), std::invalid_argument);
    CHECK_THROWS_AS(FullBinaryTree::parse("()()()"), std::invalid_argument);

    for (int n = 0; n <= 6; ++n)
        for (const FullBinaryTree& t : all_full_binary_trees(n)) {
            CHECK(t.internal_count() == n);
            CHECK(t.leaf_count() == n + 1);
            CHECK(t.edge_count() == 2 * n);
            CHECK(FullBinaryTree::parse(t.str()) == t);
        }
}

TEST_CASE("marked vertices") {
    CHECK(marked_count(fig2_tree()) == 4);
    CHECK(marked_count(PlaneTree()) == 0);
    CHECK(marked_count(PlaneTree::parse("()")) == 0);
    CHECK(marked_count(PlaneTree::parse("(())")) == 1);  // path root-a-b
    // root never marked even with a leaf child
    CHECK(marked_count(PlaneTree::parse("()()")) == 0);

    for (int n = 0; n <= 10; ++n)
        for (const PlaneTree& t : all_plane_trees(n)) {
            const int m = marked_count(t);
            CHECK(m >= 0);
            CHECK(m <= n / 2);
        }
}

TEST_CASE("x statistic and lpath") {
    CHECK(x_stat(fig1_tree()) == 2);
    CHECK(x_stat(FullBinaryTree::leaf()) == 0);
    CHECK(x_stat(FullBinaryTree::parse("()()")) == 0);
    CHECK(lpath(fig1_tree()) == 3);
    CHECK(lpath(FullBinaryTree::leaf()) == 0);
    CHECK(lpath(FullBinaryTree::parse("()()")) == 1);

    for (int n = 0; n <= 8; ++n)
        for (const FullBinaryTree& t : all_full_binary_trees(n)) {
            CHECK(x_stat(t) <= n / 2);
            CHECK(lpath(t) >= (n > 0 ? 1 : 0));
            CHECK(lpath(t) <= n);
        }
}

TEST_CASE("preorder labels, binary") {
    const std::vector<int> labels = preorder_labels_binary(fig1_tree());
    REQUIRE(labels.size() == 13);
    CHECK(labels == std::vector<int>{6, 5, 4, 0, 0, 3, 2, 0, 0, 0, 1, 0, 0});
    // right child of the root carries label 1
    CHECK(labels[10] == 1);

    CHECK(preorder_labels_binary(FullBinaryTree::parse("()()")) ==
          std::vector<int>{1, 0, 0});
    // left comb with two internal nodes: root 2, left child 1
    CHECK(preorder_labels_binary(FullBinaryTree::parse("(()())()")) ==
          std::vector<int>{2, 1, 0, 0, 0});
}

TEST_CASE("preorder labels, plane") {
    CHECK(preorder_labels_plane(fig2_tree()) ==
          std::vector<int>{0, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1});
    CHECK(preorder_labels_plane(PlaneTree::parse("()")) == std::vector<int>{0, 1});
    CHECK(preorder_labels_plane(PlaneTree::parse("()()")) == std::vector<int>{0, 2, 1});
}
