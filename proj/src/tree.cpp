#include "ssperm/tree.hpp"

#include <stdexcept>

namespace ssperm {

namespace {

// Parses the children list of one vertex; `pos` sits just after the opening
// context.  Returns at end-of-text or at an unmatched ')'.
std::vector<PlaneTree> parse_children(std::string_view text, size_t& pos) {
    std::vector<PlaneTree> children;
    while (pos < text.size() && text[pos] == '(') {
        ++pos;
        std::vector<PlaneTree> sub = parse_children(text, pos);
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("tree text: unbalanced parentheses");
        ++pos;
        children.emplace_back(std::move(sub));
    }
    return children;
}

void print_children(const PlaneTree& t, std::string& out) {
    for (const PlaneTree& c : t.children()) {
        out.push_back('(');
        print_children(c, out);
        out.push_back(')');
    }
}

}  // namespace

int PlaneTree::edge_count() const {
    int n = 0;
    for (const PlaneTree& c : children_) n += 1 + c.edge_count();
    return n;
}

PlaneTree PlaneTree::parse(std::string_view text) {
    size_t pos = 0;
    std::vector<PlaneTree> children = parse_children(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("tree text: unbalanced parentheses");
    return PlaneTree(std::move(children));
}

std::string PlaneTree::str() const {
    std::string out;
    print_children(*this, out);
    return out;
}

int marked_count(const PlaneTree& t) {
    int count = 0;
    // The root itself is skipped; only descend into children.
    auto walk = [&](auto&& self, const PlaneTree& v) -> void {
        for (const PlaneTree& c : v.children()) {
            if (!c.is_leaf()) {
                for (const PlaneTree& gc : c.children())
                    if (gc.is_leaf()) {
                        ++count;
                        break;
                    }
            }
            self(self, c);
        }
    };
    walk(walk, t);
    return count;
}

std::vector<int> preorder_labels_plane(const PlaneTree& t) {
    std::vector<int> labels;
    int next = t.edge_count();
    auto walk = [&](auto&& self, const PlaneTree& v, bool is_root) -> void {
        labels.push_back(is_root ? 0 : next--);
        for (const PlaneTree& c : v.children()) self(self, c, false);
    };
    walk(walk, t, true);
    return labels;
}

FullBinaryTree FullBinaryTree::branch(FullBinaryTree left, FullBinaryTree right) {
    FullBinaryTree t;
    t.kids_.reserve(2);
    t.kids_.push_back(std::move(left));
    t.kids_.push_back(std::move(right));
    return t;
}

int FullBinaryTree::internal_count() const {
    if (is_leaf()) return 0;
    return 1 + kids_[0].internal_count() + kids_[1].internal_count();
}

namespace {

FullBinaryTree to_full_binary(const PlaneTree& t) {
    if (t.is_leaf()) return FullBinaryTree::leaf();
    if (t.children().size() != 2)
        throw std::invalid_argument("full binary tree: every vertex needs 0 or 2 children");
    return FullBinaryTree::branch(to_full_binary(t.children()[0]),
                                  to_full_binary(t.children()[1]));
}

}  // namespace

FullBinaryTree FullBinaryTree::parse(std::string_view text) {
    return to_full_binary(PlaneTree::parse(text));
}

std::string FullBinaryTree::str() const {
    std::string out;
    auto wrap = [&](auto&& self, const FullBinaryTree& v) -> void {
        out.push_back('(');
        if (!v.is_leaf()) {
            self(self, v.left());
            self(self, v.right());
        }
        out.push_back(')');
    };
    if (!is_leaf()) {
        wrap(wrap, left());
        wrap(wrap, right());
    }
    return out;
}

namespace {

// Length of the all-left-edges chain starting at v.
int left_chain(const FullBinaryTree& v) {
    int c = 0;
    const FullBinaryTree* u = &v;
    while (!u->is_leaf()) {
        ++c;
        u = &u->left();
    }
    return c;
}

}  // namespace

int x_stat(const FullBinaryTree& t) {
    // A maximal left path starts at the root or at any right child.
    int total = 0;
    auto walk = [&](auto&& self, const FullBinaryTree& v, bool starts_path) -> void {
        if (v.is_leaf()) return;
        if (starts_path) total += left_chain(v) / 2;
        self(self, v.left(), false);
        self(self, v.right(), true);
    };
    walk(walk, t, true);
    return total;
}

int lpath(const FullBinaryTree& t) { return left_chain(t); }

std::vector<int> preorder_labels_binary(const FullBinaryTree& t) {
    std::vector<int> labels;
    int next = t.internal_count();
    auto walk = [&](auto&& self, const FullBinaryTree& v) -> void {
        if (v.is_leaf()) {
            labels.push_back(0);
            return;
        }
        labels.push_back(next--);
        self(self, v.left());
        self(self, v.right());
    };
    walk(walk, t);
    return labels;
}

}  // namespace ssperm
