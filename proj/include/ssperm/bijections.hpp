#pragma once

// The four constructive maps on stack-sortable (231-avoiding) permutations:
//   f        involution exchanging descent statistics with ascent statistics
//   g        rmax-form -> lmin-form rearrangement witnessing ldr ~ rmax
//   h, h+    full binary trees with 2n edges  <->  S_n(231)
//   z        rooted plane trees with n edges  <->  S_n(231)
//
// Every map taking a permutation validates 231-avoidance eagerly and throws
// std::domain_error naming the offending occurrence; the recursions silently
// produce garbage on out-of-domain input otherwise.

#include <string>
#include <vector>

#include "ssperm/permutation.hpp"
#include "ssperm/tree.hpp"

namespace ssperm {

// Optional recursion trace, one entry per step, preorder.
struct TraceStep {
    int depth = 0;
    std::string label;   // case id, e.g. "4" for z's case (4), "split" for f
    std::string input;
    std::string output;
};
using Trace = std::vector<TraceStep>;

// Structure of a 231-avoider, both ways:
//   rmax form:  B_1 n B_2 (n-1) ... B_l (n-l+1), delimiters = right-to-left maxima
//   lmin form:  x_l ... x_1 A_1 ... A_l,         delimiters = left-to-right minima
// blocks holds the value segments in order; delimiters as they appear.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> delimiters;
};
BlockDecomposition rmax_blocks(const Permutation& pi);
BlockDecomposition lmin_blocks(const Permutation& pi);

// f(AnB) = f(red(B)) n (f(A))^+ with (f(A))^+ on the largest values below n.
Permutation f_involution(const Permutation& pi, Trace* trace = nullptr);

// g rebuilds the rmax form as the lmin form with red(A_i) = red(B_i), so
// ldr(g(pi)) = rmax(pi).  g_inv is the exact reverse construction.
Permutation g_map(const Permutation& pi, Trace* trace = nullptr);
Permutation g_inv(const Permutation& pi, Trace* trace = nullptr);

// h(T) = h(T_R) n h(T_L)^+ under the decreasing preorder labeling; satisfies
// lpath(T) = rmax(h(T)).
Permutation h_map(const FullBinaryTree& t, Trace* trace = nullptr);

// h+ additionally rearranges the block after each maximum into lmin form
// (g's construction applied along the left spine, with recursively corrected
// sub-blocks), which turns X(T) into mnd.  h_plus_inv is the constructive
// inverse.
Permutation h_plus(const FullBinaryTree& t, Trace* trace = nullptr);
FullBinaryTree h_plus_inv(const Permutation& pi, Trace* trace = nullptr);

// z: the five-case recursion on plane trees; marked_count(T) = mnd(z(T)) and
// ldr(z(T)) is odd exactly when the root of T has a leaf child.
Permutation z_map(const PlaneTree& t, Trace* trace = nullptr);
PlaneTree z_inv(const Permutation& pi, Trace* trace = nullptr);

}  // namespace ssperm
