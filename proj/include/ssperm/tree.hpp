#pragma once

// Rooted plane trees and full binary trees, their balanced-parentheses text
// format, preorder labelings, and the tree statistics M(T), X(T) and lpath.
//
// Text format: a tree serializes as the concatenation of its children's
// serializations, each wrapped in one pair of parentheses; the root's own
// parentheses are stripped.  The single vertex is the empty word, "()" is the
// single edge, "(())" a path of two edges.

#include <string>
#include <string_view>
#include <vector>

namespace ssperm {

class PlaneTree {
public:
    PlaneTree() = default;  // single vertex
    explicit PlaneTree(std::vector<PlaneTree> children) : children_(std::move(children)) {}

    const std::vector<PlaneTree>& children() const { return children_; }
    bool is_leaf() const { return children_.empty(); }

    int edge_count() const;
    int vertex_count() const { return edge_count() + 1; }

    static PlaneTree parse(std::string_view text);
    std::string str() const;

    bool operator==(const PlaneTree& o) const { return children_ == o.children_; }
    bool operator!=(const PlaneTree& o) const { return !(*this == o); }

private:
    std::vector<PlaneTree> children_;
};

// Number of marked vertices: internal (non-root, non-leaf) vertices with at
// least one leaf child.  The root is never marked.
int marked_count(const PlaneTree& t);

// Labels all non-root vertices n..1 in preorder (leftmost-first, starting at
// the leftmost child of the root).  Returns one entry per vertex in preorder
// over all vertices; the root's entry is 0.
std::vector<int> preorder_labels_plane(const PlaneTree& t);

class FullBinaryTree {
public:
    FullBinaryTree() = default;  // single leaf
    static FullBinaryTree leaf() { return FullBinaryTree(); }
    static FullBinaryTree branch(FullBinaryTree left, FullBinaryTree right);

    bool is_leaf() const { return kids_.empty(); }
    const FullBinaryTree& left() const { return kids_[0]; }
    const FullBinaryTree& right() const { return kids_[1]; }

    int internal_count() const;
    int edge_count() const { return 2 * internal_count(); }
    int leaf_count() const { return internal_count() + 1; }

    static FullBinaryTree parse(std::string_view text);  // enforces 0-or-2 arity
    std::string str() const;

    bool operator==(const FullBinaryTree& o) const { return kids_ == o.kids_; }
    bool operator!=(const FullBinaryTree& o) const { return !(*this == o); }

private:
    std::vector<FullBinaryTree> kids_;  // empty or exactly {left, right}
};

// X(T): delete all right edges; the left edges split into maximal paths of
// lengths l_1..l_t with sum n (half the edge count); X = sum floor(l_i/2).
int x_stat(const FullBinaryTree& t);

// Edge count of the path from the root to the leftmost leaf.
int lpath(const FullBinaryTree& t);

// Labels the non-leaf vertices n..1 in preorder (root gets n).  Returns one
// entry per vertex in preorder over all vertices; leaves get 0.
std::vector<int> preorder_labels_binary(const FullBinaryTree& t);

}  // namespace ssperm
