#pragma once

// Exhaustive generators for permutation classes and Catalan tree families,
// plus exact distribution tables.  S_n streams lazily (never materialized);
// pattern classes are Catalan-sized and returned as vectors.  Dedicated
// generators exist for every length-3 pattern (231 via the A n B recursion,
// 321 via backtracking, the other four by reverse/complement symmetry); the
// brute-force filter is kept as an independent oracle.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ssperm/numbers.hpp"
#include "ssperm/permutation.hpp"
#include "ssperm/tree.hpp"

namespace ssperm {

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// All members of S_n(pattern), each exactly once (dedicated generator for
// length-3 patterns, filter otherwise).
std::vector<Permutation> avoiders(int n, const Permutation& pattern);

// Brute-force oracle: filter S_n by containment.
std::vector<Permutation> avoiders_filtered(int n, const Permutation& pattern);

std::vector<PlaneTree> all_plane_trees(int edges);
std::vector<FullBinaryTree> all_full_binary_trees(int internal_nodes);

// Class descriptor: "all" or "avoid:<pattern>", e.g. "avoid:231".
struct PermClass {
    enum class Kind { All, Avoid };
    Kind kind = Kind::All;
    Permutation pattern;

    static PermClass all();
    static PermClass avoid(Permutation pattern);
    static PermClass parse(std::string_view text);  // throws std::invalid_argument
    std::string str() const;
};

void for_each_in_class(const PermClass& cls, int n,
                       const std::function<void(const Permutation&)>& fn);

// Histogram row of a statistic over a class at length n; index k, trailing
// zeros trimmed (a row is never empty; k=0 slot always present).
std::vector<Int> distribution_row(std::string_view stat, const PermClass& cls, int n);

struct DistributionTable {
    std::string stat;
    std::string perm_class;
    std::map<std::pair<int, int>, Int> counts;  // (n, k) -> count

    std::string to_csv() const;          // header "n,k,count", n then k ascending
    std::string to_json_string() const;  // nested {"n": {"k": "count"}}
};

DistributionTable distribution_table(std::string_view stat, const PermClass& cls,
                                     int n_lo, int n_hi);

// D_{n,k} (permutations of [n] with exactly k non-overlapping descents) for
// n <= order, expanded from the exponential generating function.
DistributionTable egf_dnk(int order);

}  // namespace ssperm
