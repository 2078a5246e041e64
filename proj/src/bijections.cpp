#include "ssperm/bijections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ssperm {

namespace {

const Permutation& pattern_231() {
    static const Permutation p(std::vector<int>{2, 3, 1});
    return p;
}

void require_231_avoiding(const Permutation& pi, const char* map_name) {
    auto occ = find_occurrence(pi, pattern_231());
    if (!occ) return;
    std::ostringstream os;
    os << map_name << ": input contains 231 at positions ";
    for (size_t i = 0; i < occ->size(); ++i)
        os << (i ? "," : "") << (*occ)[i] + 1;
    os << " (values ";
    for (size_t i = 0; i < occ->size(); ++i)
        os << (i ? "," : "") << pi.at((*occ)[i]);
    os << ")";
    throw std::domain_error(os.str());
}

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

// Order-isomorphic copy of a reduced permutation onto the value range
// offset+1 .. offset+len.  Every block the four maps re-embed ("the largest
// values below n") is a contiguous range, so they all share this helper.
std::vector<int> shift(const std::vector<int>& reduced, int offset) {
    std::vector<int> out;
    out.reserve(reduced.size());
    for (int v : reduced) out.push_back(v + offset);
    return out;
}

std::vector<int> reduce_vec(const std::vector<int>& seq) {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(seq.size());
    for (int v : seq) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return out;
}

int ldr_vec(const std::vector<int>& v) {
    if (v.empty()) return 0;
    size_t i = 1;
    while (i < v.size() && v[i - 1] > v[i]) ++i;
    return static_cast<int>(i);
}

// Assembles the lmin form x_l..x_1 A_1..A_l from the reduced block patterns.
std::vector<int> lmin_assemble(const std::vector<std::vector<int>>& parts) {
    const size_t l = parts.size();
    std::vector<int> xs(l);
    int x = 1;
    for (size_t j = 0; j < l; ++j) {
        xs[j] = x;
        x += static_cast<int>(parts[j].size()) + 1;
    }
    std::vector<int> out(xs.rbegin(), xs.rend());
    for (size_t j = 0; j < l; ++j)
        for (int v : parts[j]) out.push_back(v + xs[j]);
    return out;
}

// Splits an lmin-form permutation back into its reduced block patterns.
std::vector<std::vector<int>> lmin_split(const std::vector<int>& v) {
    if (v.empty()) return {};
    const int n = static_cast<int>(v.size());
    const int l = ldr_vec(v);
    std::vector<int> xs(v.begin(), v.begin() + l);
    std::reverse(xs.begin(), xs.end());  // x_1..x_l
    std::vector<std::vector<int>> parts(static_cast<size_t>(l));
    size_t idx = static_cast<size_t>(l);
    for (int j = 0; j < l; ++j) {
        const int hi = (j + 1 < l) ? xs[static_cast<size_t>(j) + 1] - 1 : n;
        const int count = hi - xs[static_cast<size_t>(j)];
        std::vector<int> seg(v.begin() + static_cast<long>(idx),
                             v.begin() + static_cast<long>(idx) + count);
        idx += static_cast<size_t>(count);
        parts[static_cast<size_t>(j)] = reduce_vec(seg);
    }
    return parts;
}

struct Tracer {
    Trace* trace;
    size_t begin(int depth, std::string label, std::string input) {
        if (!trace) return 0;
        trace->push_back({depth, std::move(label), std::move(input), ""});
        return trace->size() - 1;
    }
    void end(size_t idx, std::string output) {
        if (trace) (*trace)[idx].output = std::move(output);
    }
};

// ---- f ----

std::vector<int> f_rec(const std::vector<int>& v, Tracer tr, int depth) {
    if (v.empty()) return {};
    const int n = static_cast<int>(v.size());
    const size_t idx = tr.begin(depth, "split", vec_str(v));
    const auto pos = std::find(v.begin(), v.end(), n);
    std::vector<int> a(v.begin(), pos);
    std::vector<int> b(pos + 1, v.end());
    std::vector<int> out = f_rec(reduce_vec(b), tr, depth + 1);
    out.push_back(n);
    const int bsz = static_cast<int>(b.size());
    for (int x : shift(f_rec(a, tr, depth + 1), bsz)) out.push_back(x);
    tr.end(idx, vec_str(out));
    return out;
}

// ---- g ----

std::vector<std::vector<int>> rmax_block_vecs(const std::vector<int>& v,
                                              std::vector<int>* delims) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    int best = 0;
    std::vector<char> is_delim(v.size(), 0);
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
        if (v[static_cast<size_t>(i)] > best) {
            best = v[static_cast<size_t>(i)];
            is_delim[static_cast<size_t>(i)] = 1;
        }
    }
    for (size_t i = 0; i < v.size(); ++i) {
        if (is_delim[i]) {
            blocks.push_back(std::move(cur));
            cur.clear();
            if (delims) delims->push_back(v[i]);
        } else {
            cur.push_back(v[i]);
        }
    }
    return blocks;
}

std::vector<int> g_rec(const std::vector<int>& v) {
    if (v.empty()) return {};
    std::vector<std::vector<int>> parts;
    for (const std::vector<int>& b : rmax_block_vecs(v, nullptr))
        parts.push_back(reduce_vec(b));
    return lmin_assemble(parts);
}

std::vector<int> g_inv_rec(const std::vector<int>& v) {
    if (v.empty()) return {};
    const int n = static_cast<int>(v.size());
    std::vector<std::vector<int>> parts = lmin_split(v);
    const int l = static_cast<int>(parts.size());
    std::vector<int> out;
    int base = 0;
    for (int j = 0; j < l; ++j) {
        for (int x : shift(parts[static_cast<size_t>(j)], base)) out.push_back(x);
        base += static_cast<int>(parts[static_cast<size_t>(j)].size());
        out.push_back(n - j);
    }
    return out;
}

// ---- h and h+ ----

std::vector<int> h_rec(const FullBinaryTree& t) {
    if (t.is_leaf()) return {};
    std::vector<int> out = h_rec(t.right());
    const int ir = t.right().internal_count();
    out.push_back(t.internal_count());
    for (int x : shift(h_rec(t.left()), ir)) out.push_back(x);
    return out;
}

std::vector<int> hp_rec(const FullBinaryTree& t, Tracer tr, int depth);

// lmin-form image of the left subtree: one x per left-spine vertex, block
// patterns from the recursively corrected right-spine subtrees.
std::vector<int> hp_spine(const FullBinaryTree& s, Tracer tr, int depth) {
    std::vector<std::vector<int>> parts;
    const FullBinaryTree* u = &s;
    while (!u->is_leaf()) {
        parts.push_back(hp_rec(u->right(), tr, depth + 1));
        u = &u->left();
    }
    return lmin_assemble(parts);
}

std::vector<int> hp_rec(const FullBinaryTree& t, Tracer tr, int depth) {
    if (t.is_leaf()) return {};
    const size_t idx = tr.begin(depth, "node", t.str());
    std::vector<int> out = hp_rec(t.right(), tr, depth + 1);
    const int ir = t.right().internal_count();
    out.push_back(t.internal_count());
    for (int x : shift(hp_spine(t.left(), tr, depth), ir)) out.push_back(x);
    tr.end(idx, vec_str(out));
    return out;
}

FullBinaryTree hp_inv_rec(const std::vector<int>& v) {
    if (v.empty()) return FullBinaryTree::leaf();
    const int n = static_cast<int>(v.size());
    const auto pos = std::find(v.begin(), v.end(), n);
    std::vector<int> a(v.begin(), pos);
    std::vector<int> c(pos + 1, v.end());
    FullBinaryTree right = hp_inv_rec(a);
    FullBinaryTree left = FullBinaryTree::leaf();
    std::vector<std::vector<int>> parts = lmin_split(reduce_vec(c));
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        left = FullBinaryTree::branch(std::move(left), hp_inv_rec(*it));
    return FullBinaryTree::branch(std::move(left), std::move(right));
}

// ---- z ----

bool has_leaf_child(const std::vector<PlaneTree>& children) {
    for (const PlaneTree& c : children)
        if (c.is_leaf()) return true;
    return false;
}

std::vector<int> z_rec(const PlaneTree& t, Tracer tr, int depth) {
    const int n = t.edge_count();
    if (n == 0) return {};
    const std::vector<PlaneTree>& ch = t.children();
    const char* label = nullptr;
    std::vector<int> out;
    if (ch.size() == 1) {
        const PlaneTree& a = ch[0];
        if (!has_leaf_child(a.children())) {
            label = "1";
            const size_t idx = tr.begin(depth, label, t.str());
            out = z_rec(a, tr, depth + 1);
            out.push_back(n);
            tr.end(idx, vec_str(out));
            return out;
        }
        label = "2";
        const size_t idx = tr.begin(depth, label, t.str());
        out.push_back(n);
        for (int x : z_rec(a, tr, depth + 1)) out.push_back(x);
        tr.end(idx, vec_str(out));
        return out;
    }
    const PlaneTree& r1 = ch[0];
    std::vector<PlaneTree> rest(ch.begin() + 1, ch.end());
    const bool rest_leaf = has_leaf_child(rest);
    if (r1.is_leaf() && !rest_leaf) {
        // case (3): drop the leftmost leaf, n goes first
        const size_t idx = tr.begin(depth, "3", t.str());
        out.push_back(n);
        for (int x : z_rec(PlaneTree(std::move(rest)), tr, depth + 1)) out.push_back(x);
        tr.end(idx, vec_str(out));
        return out;
    }
    // cases (4) and (5): split off the leftmost subtree B, z(A) n Z(B)
    label = rest_leaf ? "5" : "4";
    const size_t idx = tr.begin(depth, label, t.str());
    PlaneTree a(std::move(rest));
    const int asz = a.edge_count();
    out = z_rec(a, tr, depth + 1);
    out.push_back(n);
    for (int x : shift(z_rec(r1, tr, depth + 1), asz)) out.push_back(x);
    tr.end(idx, vec_str(out));
    return out;
}

PlaneTree tree_above(PlaneTree a) {
    std::vector<PlaneTree> ch;
    ch.push_back(std::move(a));
    return PlaneTree(std::move(ch));
}

PlaneTree prepend_subtree(const PlaneTree& a, PlaneTree b) {
    std::vector<PlaneTree> ch;
    ch.reserve(a.children().size() + 1);
    ch.push_back(std::move(b));
    for (const PlaneTree& c : a.children()) ch.push_back(c);
    return PlaneTree(std::move(ch));
}

PlaneTree z_inv_rec(const std::vector<int>& v, Tracer tr, int depth) {
    if (v.empty()) return PlaneTree();
    const int n = static_cast<int>(v.size());
    const auto pos = std::find(v.begin(), v.end(), n);
    std::vector<int> before(v.begin(), pos);
    std::vector<int> after(pos + 1, v.end());
    if (after.empty()) {
        // n last: case (1) when ldr of the prefix is even, else the
        // degenerate case (5) with a one-vertex leftmost subtree.
        const bool even = ldr_vec(before) % 2 == 0;
        const size_t idx = tr.begin(depth, even ? "1" : "5", vec_str(v));
        PlaneTree a = z_inv_rec(before, tr, depth + 1);
        PlaneTree out = even ? tree_above(std::move(a))
                             : prepend_subtree(a, PlaneTree());
        tr.end(idx, out.str());
        return out;
    }
    if (before.empty()) {
        // n first: case (2) when ldr of the rest is odd, else case (3).
        const bool odd = ldr_vec(after) % 2 == 1;
        const size_t idx = tr.begin(depth, odd ? "2" : "3", vec_str(v));
        PlaneTree a = z_inv_rec(after, tr, depth + 1);
        PlaneTree out = odd ? tree_above(std::move(a))
                            : prepend_subtree(a, PlaneTree());
        tr.end(idx, out.str());
        return out;
    }
    const size_t idx = tr.begin(depth, "4/5", vec_str(v));
    PlaneTree a = z_inv_rec(before, tr, depth + 1);
    PlaneTree b = z_inv_rec(reduce_vec(after), tr, depth + 1);
    PlaneTree out = prepend_subtree(a, std::move(b));
    tr.end(idx, out.str());
    return out;
}

}  // namespace

BlockDecomposition rmax_blocks(const Permutation& pi) {
    require_231_avoiding(pi, "rmax_blocks");
    BlockDecomposition d;
    d.blocks = rmax_block_vecs(pi.values(), &d.delimiters);
    return d;
}

BlockDecomposition lmin_blocks(const Permutation& pi) {
    require_231_avoiding(pi, "lmin_blocks");
    BlockDecomposition d;
    if (pi.empty()) return d;
    const int n = pi.size();
    const int l = ldr(pi);
    std::vector<int> xs;  // x_1..x_l
    for (int i = l - 1; i >= 0; --i) xs.push_back(pi.at(i));
    for (int i = l - 1; i >= 0; --i) d.delimiters.push_back(xs[static_cast<size_t>(i)]);
    size_t idx = static_cast<size_t>(l);
    for (int j = 0; j < l; ++j) {
        const int hi = (j + 1 < l) ? xs[static_cast<size_t>(j) + 1] - 1 : n;
        const int count = hi - xs[static_cast<size_t>(j)];
        std::vector<int> seg;
        for (int k = 0; k < count; ++k)
            seg.push_back(pi.at(static_cast<int>(idx) + k));
        idx += static_cast<size_t>(count);
        d.blocks.push_back(std::move(seg));
    }
    return d;
}

Permutation f_involution(const Permutation& pi, Trace* trace) {
    require_231_avoiding(pi, "f");
    return Permutation(f_rec(pi.values(), Tracer{trace}, 0));
}

Permutation g_map(const Permutation& pi, Trace* trace) {
    require_231_avoiding(pi, "g");
    Tracer tr{trace};
    const size_t idx = tr.begin(0, "rebuild", pi.str());
    Permutation out(g_rec(pi.values()));
    tr.end(idx, out.str());
    return out;
}

Permutation g_inv(const Permutation& pi, Trace* trace) {
    require_231_avoiding(pi, "g-inv");
    Tracer tr{trace};
    const size_t idx = tr.begin(0, "rebuild", pi.str());
    Permutation out(g_inv_rec(pi.values()));
    tr.end(idx, out.str());
    return out;
}

Permutation h_map(const FullBinaryTree& t, Trace* trace) {
    Tracer tr{trace};
    const size_t idx = tr.begin(0, "node", t.str());
    Permutation out(h_rec(t));
    tr.end(idx, out.str());
    return out;
}

Permutation h_plus(const FullBinaryTree& t, Trace* trace) {
    return Permutation(hp_rec(t, Tracer{trace}, 0));
}

FullBinaryTree h_plus_inv(const Permutation& pi, Trace* trace) {
    require_231_avoiding(pi, "h-plus-inv");
    Tracer tr{trace};
    const size_t idx = tr.begin(0, "node", pi.str());
    FullBinaryTree out = hp_inv_rec(pi.values());
    tr.end(idx, out.str());
    return out;
}

Permutation z_map(const PlaneTree& t, Trace* trace) {
    return Permutation(z_rec(t, Tracer{trace}, 0));
}

PlaneTree z_inv(const Permutation& pi, Trace* trace) {
    require_231_avoiding(pi, "z-inv");
    return z_inv_rec(pi.values(), Tracer{trace}, 0);
}

}  // namespace ssperm
