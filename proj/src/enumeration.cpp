#include "ssperm/enumeration.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ssperm/series.hpp"

namespace ssperm {

namespace {

// S_n(231) via the recursive structure pi = A n B with A < B: table built
// bottom-up, entry k holds all 231-avoiders of [k] as raw value vectors.
std::vector<std::vector<std::vector<int>>> avoiders_231_table(int n) {
    std::vector<std::vector<std::vector<int>>> table(static_cast<size_t>(n) + 1);
    table[0] = {{}};
    for (int m = 1; m <= n; ++m) {
        std::vector<std::vector<int>>& out = table[static_cast<size_t>(m)];
        for (int a = 0; a <= m - 1; ++a) {
            const int b = m - 1 - a;
            for (const std::vector<int>& A : table[static_cast<size_t>(a)]) {
                for (const std::vector<int>& B : table[static_cast<size_t>(b)]) {
                    std::vector<int> pi;
                    pi.reserve(static_cast<size_t>(m));
                    pi.insert(pi.end(), A.begin(), A.end());
                    pi.push_back(m);
                    for (int v : B) pi.push_back(v + a);
                    out.push_back(std::move(pi));
                }
            }
        }
    }
    return table;
}

// S_n(321) by backtracking over the next value to append.  A prefix stays
// 321-avoiding iff the new value exceeds every value that already has a
// larger value in front of it; that cutoff updates in O(1).
void gen_321_rec(int n, std::vector<int>& cur, std::vector<char>& used, int cutoff,
                 int max_so_far, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int v = cutoff + 1; v <= n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        used[static_cast<size_t>(v)] = 1;
        cur.push_back(v);
        const int next_cutoff = v < max_so_far ? std::max(cutoff, v) : cutoff;
        gen_321_rec(n, cur, used, next_cutoff, std::max(max_so_far, v), out);
        cur.pop_back();
        used[static_cast<size_t>(v)] = 0;
    }
}

std::vector<std::vector<int>> avoiders_321_vecs(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    gen_321_rec(n, cur, used, 0, 0, out);
    return out;
}

std::vector<Permutation> wrap(std::vector<std::vector<int>> vecs) {
    std::vector<Permutation> out;
    out.reserve(vecs.size());
    for (std::vector<int>& v : vecs) out.emplace_back(std::move(v));
    return out;
}

std::vector<Permutation> transform_all(std::vector<Permutation> perms,
                                       Permutation (*op)(const Permutation&)) {
    for (Permutation& p : perms) p = op(p);
    return perms;
}

}  // namespace

std::vector<Permutation> avoiders(int n, const Permutation& pattern) {
    if (n < 0) throw std::invalid_argument("avoiders: negative length");
    if (pattern.size() == 3) {
        const std::vector<int>& p = pattern.values();
        if (p == std::vector<int>{2, 3, 1}) return wrap(avoiders_231_table(n)[static_cast<size_t>(n)]);
        if (p == std::vector<int>{3, 2, 1}) return wrap(avoiders_321_vecs(n));
        // remaining length-3 patterns by symmetry with the two direct generators
        if (p == std::vector<int>{1, 3, 2})
            return transform_all(avoiders(n, Permutation({2, 3, 1})), &reverse);
        if (p == std::vector<int>{2, 1, 3})
            return transform_all(avoiders(n, Permutation({2, 3, 1})), &complement);
        if (p == std::vector<int>{3, 1, 2})
            return transform_all(transform_all(avoiders(n, Permutation({2, 3, 1})), &complement),
                                 &reverse);
        if (p == std::vector<int>{1, 2, 3})
            return transform_all(avoiders(n, Permutation({3, 2, 1})), &complement);
    }
    return avoiders_filtered(n, pattern);
}

std::vector<Permutation> avoiders_filtered(int n, const Permutation& pattern) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& pi) {
        if (avoids(pi, pattern)) out.push_back(pi);
    });
    return out;
}

std::vector<PlaneTree> all_plane_trees(int edges) {
    // T with n >= 1 edges decomposes as (first-child subtree, rest-of-root).
    std::vector<std::vector<PlaneTree>> table(static_cast<size_t>(edges) + 1);
    table[0] = {PlaneTree()};
    for (int m = 1; m <= edges; ++m) {
        std::vector<PlaneTree>& out = table[static_cast<size_t>(m)];
        for (int c = 0; c <= m - 1; ++c) {
            for (const PlaneTree& first : table[static_cast<size_t>(c)]) {
                for (const PlaneTree& rest : table[static_cast<size_t>(m - 1 - c)]) {
                    std::vector<PlaneTree> children;
                    children.reserve(rest.children().size() + 1);
                    children.push_back(first);
                    for (const PlaneTree& t : rest.children()) children.push_back(t);
                    out.emplace_back(std::move(children));
                }
            }
        }
    }
    return table[static_cast<size_t>(edges)];
}

std::vector<FullBinaryTree> all_full_binary_trees(int internal_nodes) {
    std::vector<std::vector<FullBinaryTree>> table(static_cast<size_t>(internal_nodes) + 1);
    table[0] = {FullBinaryTree::leaf()};
    for (int m = 1; m <= internal_nodes; ++m) {
        std::vector<FullBinaryTree>& out = table[static_cast<size_t>(m)];
        for (int l = 0; l <= m - 1; ++l)
            for (const FullBinaryTree& left : table[static_cast<size_t>(l)])
                for (const FullBinaryTree& right : table[static_cast<size_t>(m - 1 - l)])
                    out.push_back(FullBinaryTree::branch(left, right));
    }
    return table[static_cast<size_t>(internal_nodes)];
}

PermClass PermClass::all() { return PermClass{Kind::All, Permutation()}; }

PermClass PermClass::avoid(Permutation pattern) {
    if (pattern.empty()) throw std::invalid_argument("avoid: pattern must be nonempty");
    return PermClass{Kind::Avoid, std::move(pattern)};
}

PermClass PermClass::parse(std::string_view text) {
    if (text == "all") return all();
    constexpr std::string_view prefix = "avoid:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view spec = text.substr(prefix.size());
        // accept both "231" (single digits) and "2,3,1"
        if (spec.find(',') == std::string_view::npos) {
            std::vector<int> values;
            for (char c : spec) {
                if (c < '1' || c > '9')
                    throw std::invalid_argument("bad pattern digit in class descriptor");
                values.push_back(c - '0');
            }
            return avoid(Permutation(std::move(values)));
        }
        return avoid(Permutation::parse(spec));
    }
    throw std::invalid_argument("unknown class descriptor: " + std::string(text) +
                                " (expected \"all\" or \"avoid:<pattern>\")");
}

std::string PermClass::str() const {
    if (kind == Kind::All) return "all";
    std::string s = "avoid:";
    bool compact = true;
    for (int v : pattern.values()) compact = compact && v <= 9;
    if (compact) {
        for (int v : pattern.values()) s.push_back(static_cast<char>('0' + v));
    } else {
        s += pattern.str();
    }
    return s;
}

void for_each_in_class(const PermClass& cls, int n,
                       const std::function<void(const Permutation&)>& fn) {
    if (cls.kind == PermClass::Kind::All) {
        for_each_permutation(n, fn);
        return;
    }
    for (const Permutation& p : avoiders(n, cls.pattern)) fn(p);
}

std::vector<Int> distribution_row(std::string_view stat, const PermClass& cls, int n) {
    StatFn fn = statistic_by_name(stat);
    if (!fn) throw std::invalid_argument("unknown statistic: " + std::string(stat));
    std::vector<Int> row(1, 0);
    for_each_in_class(cls, n, [&](const Permutation& pi) {
        const int k = fn(pi);
        if (static_cast<size_t>(k) >= row.size()) row.resize(static_cast<size_t>(k) + 1, 0);
        ++row[static_cast<size_t>(k)];
    });
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    return row;
}

std::string DistributionTable::to_csv() const {
    std::ostringstream os;
    os << "n,k,count\n";
    for (const auto& [nk, count] : counts)
        os << nk.first << ',' << nk.second << ',' << count << '\n';
    return os.str();
}

std::string DistributionTable::to_json_string() const {
    // counts as decimal strings: values may exceed what JSON numbers hold exactly
    nlohmann::ordered_json j;
    j["stat"] = stat;
    j["class"] = perm_class;
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto& [nk, count] : counts)
        j["counts"][std::to_string(nk.first)][std::to_string(nk.second)] = count.str();
    return j.dump();
}

DistributionTable distribution_table(std::string_view stat, const PermClass& cls,
                                     int n_lo, int n_hi) {
    DistributionTable table;
    table.stat = std::string(stat);
    table.perm_class = cls.str();
    for (int n = n_lo; n <= n_hi; ++n) {
        const std::vector<Int> row = distribution_row(stat, cls, n);
        for (size_t k = 0; k < row.size(); ++k)
            table.counts[{n, static_cast<int>(k)}] = row[k];
    }
    return table;
}

DistributionTable egf_dnk(int order) {
    DistributionTable table;
    table.stat = "mnd";
    table.perm_class = "all (egf)";
    const auto rows = dnk_rows(order);
    for (int n = 0; n <= order; ++n) {
        const auto& row = rows[static_cast<size_t>(n)];
        for (size_t k = 0; k < row.size(); ++k)
            table.counts[{n, static_cast<int>(k)}] = row[k];
    }
    return table;
}

}  // namespace ssperm
