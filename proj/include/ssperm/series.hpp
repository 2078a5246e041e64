#pragma once

// Truncated bivariate power series in t (length variable, truncated at a fixed
// order) and x (statistic marker), with exact rational coefficients.  Used to
// expand e^t / (1 - x (1 + (t-1) e^t)), whose coefficient of t^n x^k times n!
// counts permutations with exactly k non-overlapping descents.

#include <vector>

#include "ssperm/numbers.hpp"

namespace ssperm {

class BivariateSeries {
public:
    explicit BivariateSeries(int order);  // zero series truncated at t^order, x^order
    static BivariateSeries one(int order);
    static BivariateSeries exp_t(int order);  // e^t

    int order() const { return order_; }

    const Rational& coeff(int n, int k) const;
    void set_coeff(int n, int k, Rational value);

    BivariateSeries& operator+=(const BivariateSeries& o);
    BivariateSeries& operator-=(const BivariateSeries& o);
    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;  // truncating
    BivariateSeries times_t() const;  // multiply by t
    BivariateSeries times_x() const;  // multiply by x
    BivariateSeries scaled(const Rational& c) const;

private:
    int order_;
    std::vector<std::vector<Rational>> c_;  // c_[n][k]
};

// Rows D_{n,k} for 0 <= n <= order, expanded from the generating function.
// Throws std::logic_error if any scaled coefficient fails to be a
// non-negative integer (an internal-consistency failure).
std::vector<std::vector<Int>> dnk_rows(int order);

}  // namespace ssperm
