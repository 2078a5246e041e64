#include "ssperm/numbers.hpp"

#include <stdexcept>

namespace ssperm {

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at each step: r is C(n, i+1) * i! / i!
    }
    return r;
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Int> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<size_t>(j)] = Int(j) * row[static_cast<size_t>(j)] +
                                          row[static_cast<size_t>(j) - 1];
        row[0] = 0;
    }
    return row[static_cast<size_t>(k)];
}

Int catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative index");
    return binomial(2LL * n, n) / (n + 1);
}

Int narayana(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) return 0;
    return binomial(n, k) * binomial(n, k + 1) / n;
}

std::vector<Int> eulerian_poly(int n) {
    if (n < 1) throw std::invalid_argument("eulerian_poly: n must be >= 1");
    // Accumulate k! S(n,k) (x-1)^(n-k) as coefficient vectors in x.
    std::vector<Int> coeffs(static_cast<size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        const Int factor = factorial(k) * stirling2(n, k);
        const int m = n - k;
        for (int j = 0; j <= m; ++j) {
            // (x-1)^m = sum_j C(m,j) x^j (-1)^(m-j)
            Int term = factor * binomial(m, j);
            if ((m - j) % 2 != 0) term = -term;
            coeffs[static_cast<size_t>(j)] += term;
        }
    }
    return coeffs;
}

namespace {

// C(k+j-1, k-1) with the sum-defining convention for k = 0:
// C(-1,-1) = 1 (j = 0) and C(j-1,-1) = 0 for j >= 1.
Int eq1_inner(int k, int j) {
    if (k == 0) return j == 0 ? Int(1) : Int(0);
    return binomial(k + j - 1, k - 1);
}

}  // namespace

Int formula_des_321(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    Int sum = 0;
    for (int j = 0; j <= n - 2 * k; ++j)
        sum += eq1_inner(k, j) * binomial(n + 1 - k, n - 2 * k - j);
    Int total = binomial(n + 1, k) * sum;
    return total / (n + 1);
}

Int formula_mnd_ss(int n, int k) {
    if (n < 1 || k < 0) return 0;
    return binomial(n + 1, 2 * k + 1) * binomial(n + k, k) / (n + 1);
}

}  // namespace ssperm
