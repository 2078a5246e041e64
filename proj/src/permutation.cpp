#include "ssperm/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ssperm {

namespace {

void validate_permutation(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : values) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n: value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate_permutation(values_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) return Permutation();
    std::vector<int> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
        if (tok.empty())
            throw std::invalid_argument("empty entry in permutation text");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("invalid character in permutation text: '" +
                                            std::string(1, c) + "'");
            v = v * 10 + (c - '0');
            if (v > 1'000'000) throw std::invalid_argument("permutation entry too large");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Permutation(std::move(values));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    return os.str();
}

Permutation reduce(std::span<const int> seq) {
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("reduce: entries must be distinct");
    std::vector<int> out;
    out.reserve(seq.size());
    for (int v : seq) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

Permutation reduce(const Permutation& pi) { return reduce(std::span<const int>(pi.values())); }

Permutation reverse(const Permutation& pi) {
    std::vector<int> v(pi.values().rbegin(), pi.values().rend());
    return Permutation(std::move(v));
}

Permutation complement(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    for (int x : pi.values()) v.push_back(n + 1 - x);
    return Permutation(std::move(v));
}

int des(const Permutation& pi) {
    int c = 0;
    for (int i = 0; i + 1 < pi.size(); ++i)
        if (pi.at(i) > pi.at(i + 1)) ++c;
    return c;
}

int asc(const Permutation& pi) {
    int c = 0;
    for (int i = 0; i + 1 < pi.size(); ++i)
        if (pi.at(i) < pi.at(i + 1)) ++c;
    return c;
}

namespace {

// Sum of floor(len/2) over maximal runs in the given direction.
int run_halves(const Permutation& pi, bool descending) {
    if (pi.empty()) return 0;
    int total = 0, run = 1;
    for (int i = 1; i < pi.size(); ++i) {
        if ((pi.at(i - 1) > pi.at(i)) == descending)
            ++run;
        else {
            total += run / 2;
            run = 1;
        }
    }
    return total + run / 2;
}

}  // namespace

int mnd(const Permutation& pi) { return run_halves(pi, true); }
int mna(const Permutation& pi) { return run_halves(pi, false); }

int mnd_scheduling(const Permutation& pi) {
    // Greedy interval scheduling: descents occupy {i, i+1}; taking the
    // earliest-ending compatible descent is optimal on a path of intervals.
    int count = 0;
    int blocked_until = -1;  // last index consumed by a chosen descent
    for (int i = 0; i + 1 < pi.size(); ++i) {
        if (pi.at(i) > pi.at(i + 1) && i > blocked_until) {
            ++count;
            blocked_until = i + 1;
        }
    }
    return count;
}

int ldr(const Permutation& pi) {
    if (pi.empty()) return 0;
    int i = 1;
    while (i < pi.size() && pi.at(i - 1) > pi.at(i)) ++i;
    return i;
}

int rar(const Permutation& pi) {
    if (pi.empty()) return 0;
    const int n = pi.size();
    int i = 1;
    while (i < n && pi.at(n - i - 1) < pi.at(n - i)) ++i;
    return i;
}

int lmin(const Permutation& pi) {
    int c = 0, best = pi.size() + 1;
    for (int i = 0; i < pi.size(); ++i) {
        if (pi.at(i) < best) {
            ++c;
            best = pi.at(i);
        }
    }
    return c;
}

int rmin(const Permutation& pi) {
    int c = 0, best = pi.size() + 1;
    for (int i = pi.size() - 1; i >= 0; --i) {
        if (pi.at(i) < best) {
            ++c;
            best = pi.at(i);
        }
    }
    return c;
}

int rmax(const Permutation& pi) {
    int c = 0, best = 0;
    for (int i = pi.size() - 1; i >= 0; --i) {
        if (pi.at(i) > best) {
            ++c;
            best = pi.at(i);
        }
    }
    return c;
}

namespace {

// Depth-first subsequence search.  Chosen values must compare against each
// other exactly as the corresponding pattern entries do.
bool occurrence_dfs(const Permutation& pi, const Permutation& p, int start, int depth,
                    std::vector<int>& chosen) {
    const int k = p.size();
    if (depth == k) return true;
    const int remaining = k - depth;
    for (int i = start; i + remaining <= pi.size(); ++i) {
        bool fits = true;
        for (int j = 0; j < depth && fits; ++j) {
            const bool want_less = p.at(j) < p.at(depth);
            if ((pi.at(chosen[static_cast<size_t>(j)]) < pi.at(i)) != want_less) fits = false;
        }
        if (!fits) continue;
        chosen.push_back(i);
        if (occurrence_dfs(pi, p, i + 1, depth + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_occurrence(const Permutation& pi,
                                                const Permutation& pattern) {
    if (pattern.empty() || pattern.size() > pi.size()) {
        if (pattern.empty()) return std::vector<int>{};
        return std::nullopt;
    }
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(pattern.size()));
    if (occurrence_dfs(pi, pattern, 0, 0, chosen)) return chosen;
    return std::nullopt;
}

bool contains(const Permutation& pi, const Permutation& pattern) {
    return find_occurrence(pi, pattern).has_value();
}

bool avoids(const Permutation& pi, const Permutation& pattern) {
    return !contains(pi, pattern);
}

namespace {

void stack_sort_rec(std::span<const int> seq, std::vector<int>& out) {
    if (seq.empty()) return;
    size_t imax = 0;
    for (size_t i = 1; i < seq.size(); ++i)
        if (seq[i] > seq[imax]) imax = i;
    stack_sort_rec(seq.first(imax), out);
    stack_sort_rec(seq.subspan(imax + 1), out);
    out.push_back(seq[imax]);
}

}  // namespace

Permutation stack_sort(const Permutation& pi) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(pi.size()));
    stack_sort_rec(std::span<const int>(pi.values()), out);
    return Permutation(std::move(out));
}

bool is_stack_sortable(const Permutation& pi) {
    const Permutation sorted = stack_sort(pi);
    for (int i = 0; i < sorted.size(); ++i)
        if (sorted.at(i) != i + 1) return false;
    return true;
}

StatFn statistic_by_name(std::string_view name) {
    if (name == "des") return &des;
    if (name == "asc") return &asc;
    if (name == "mnd") return &mnd;
    if (name == "mna") return &mna;
    if (name == "ldr") return &ldr;
    if (name == "rar") return &rar;
    if (name == "lmin") return &lmin;
    if (name == "rmin") return &rmin;
    if (name == "rmax") return &rmax;
    return nullptr;
}

const std::vector<std::string>& statistic_names() {
    static const std::vector<std::string> names = {"des", "asc", "mnd",  "mna", "ldr",
                                                   "rar", "lmin", "rmin", "rmax"};
    return names;
}

}  // namespace ssperm
