#pragma once

// One-line-notation permutations over [n] and the statistics used throughout:
// des/asc, the non-overlapping variants mnd/mna, run lengths ldr/rar, and the
// extremum counts lmin/rmin/rmax.  All values are immutable; operations are
// pure functions.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssperm {

class Permutation {
public:
    Permutation() = default;  // the empty permutation
    explicit Permutation(std::vector<int> values);  // must be a rearrangement of 1..n

    static Permutation identity(int n);

    // Text format: comma-separated decimal values ("6,2,1,4,3,5,10,9,8,7");
    // the empty permutation serializes as "".
    static Permutation parse(std::string_view text);
    std::string str() const;

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int at(int i) const { return values_[static_cast<size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

// red(x): replace the i-th smallest entry by i.  Entries must be distinct.
Permutation reduce(std::span<const int> seq);
Permutation reduce(const Permutation& pi);

Permutation reverse(const Permutation& pi);
Permutation complement(const Permutation& pi);

int des(const Permutation& pi);
int asc(const Permutation& pi);

// Maximum number of pairwise index-disjoint descents (a descent at i occupies
// positions i and i+1).  Production path: sum of floor(len/2) over maximal
// decreasing runs.  mnd_scheduling is the independent greedy implementation
// (left-to-right interval scheduling over descent positions); the two are
// cross-checked exhaustively by the test suites.
int mnd(const Permutation& pi);
int mnd_scheduling(const Permutation& pi);
int mna(const Permutation& pi);

int ldr(const Permutation& pi);   // length of leftmost decreasing run (0 on empty)
int rar(const Permutation& pi);   // length of rightmost ascending run (0 on empty)
int lmin(const Permutation& pi);  // left-to-right minima
int rmin(const Permutation& pi);  // right-to-left minima
int rmax(const Permutation& pi);  // right-to-left maxima

// Classical pattern containment: some subsequence of pi is order-isomorphic
// to the pattern.  find_occurrence reports the 0-based witness positions.
bool contains(const Permutation& pi, const Permutation& pattern);
bool avoids(const Permutation& pi, const Permutation& pattern);
std::optional<std::vector<int>> find_occurrence(const Permutation& pi,
                                                const Permutation& pattern);

// The stack-sorting operator: S(eps) = eps, S(L n R) = S(L) S(R) n.
Permutation stack_sort(const Permutation& pi);
bool is_stack_sortable(const Permutation& pi);

// Statistic registry for the CLI and the distribution machinery.
using StatFn = int (*)(const Permutation&);
StatFn statistic_by_name(std::string_view name);        // nullptr if unknown
const std::vector<std::string>& statistic_names();      // canonical order

}  // namespace ssperm
