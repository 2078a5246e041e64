#pragma once

// Exact unbounded-integer combinatorics: binomials, Stirling numbers, Catalan
// and Narayana numbers, Eulerian polynomials, and the two closed-form
// distributions (descents over 321-avoiders; non-overlapping descents over
// stack-sortable permutations).

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace ssperm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(long long n, long long k);  // 0 outside 0 <= k <= n
Int stirling2(int n, int k);             // 0 outside range
Int catalan(int n);                      // throws std::invalid_argument for n < 0

// (1/n) C(n,k) C(n,k+1); 0 outside 1 <= n, 0 <= k <= n-1.
Int narayana(int n, int k);

// Coefficients of A_n(x) = sum_k k! S(n,k) (x-1)^(n-k), index = descent count.
std::vector<Int> eulerian_poly(int n);

// Number of 321-avoiding permutations of length n with k descents:
// (1/(n+1)) C(n+1,k) sum_j C(k+j-1,k-1) C(n+1-k, n-2k-j); the k = 0 row is 1.
Int formula_des_321(int n, int k);

// Number of stack-sortable permutations of length n with mnd = k:
// (1/(n+1)) C(n+1,2k+1) C(n+k,k).
Int formula_mnd_ss(int n, int k);

}  // namespace ssperm
