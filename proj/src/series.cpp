#include "ssperm/series.hpp"

#include <stdexcept>

namespace ssperm {

BivariateSeries::BivariateSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    c_.assign(static_cast<size_t>(order) + 1,
              std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(0)));
}

BivariateSeries BivariateSeries::one(int order) {
    BivariateSeries s(order);
    s.c_[0][0] = 1;
    return s;
}

BivariateSeries BivariateSeries::exp_t(int order) {
    BivariateSeries s(order);
    for (int n = 0; n <= order; ++n)
        s.c_[static_cast<size_t>(n)][0] = Rational(1, factorial(n));
    return s;
}

const Rational& BivariateSeries::coeff(int n, int k) const {
    return c_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

void BivariateSeries::set_coeff(int n, int k, Rational value) {
    c_[static_cast<size_t>(n)][static_cast<size_t>(k)] = std::move(value);
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    for (int n = 0; n <= order_; ++n)
        for (int k = 0; k <= order_; ++k)
            c_[static_cast<size_t>(n)][static_cast<size_t>(k)] += o.coeff(n, k);
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
    for (int n = 0; n <= order_; ++n)
        for (int k = 0; k <= order_; ++k)
            c_[static_cast<size_t>(n)][static_cast<size_t>(k)] -= o.coeff(n, k);
    return *this;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    BivariateSeries r = *this;
    r += o;
    return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
    BivariateSeries r = *this;
    r -= o;
    return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    BivariateSeries r(order_);
    for (int n1 = 0; n1 <= order_; ++n1) {
        for (int k1 = 0; k1 <= order_; ++k1) {
            const Rational& a = coeff(n1, k1);
            if (a == 0) continue;
            for (int n2 = 0; n1 + n2 <= order_; ++n2) {
                for (int k2 = 0; k1 + k2 <= order_; ++k2) {
                    const Rational& b = o.coeff(n2, k2);
                    if (b == 0) continue;
                    r.c_[static_cast<size_t>(n1 + n2)][static_cast<size_t>(k1 + k2)] += a * b;
                }
            }
        }
    }
    return r;
}

BivariateSeries BivariateSeries::times_t() const {
    BivariateSeries r(order_);
    for (int n = 0; n + 1 <= order_; ++n)
        for (int k = 0; k <= order_; ++k)
            r.c_[static_cast<size_t>(n) + 1][static_cast<size_t>(k)] = coeff(n, k);
    return r;
}

BivariateSeries BivariateSeries::times_x() const {
    BivariateSeries r(order_);
    for (int n = 0; n <= order_; ++n)
        for (int k = 0; k + 1 <= order_; ++k)
            r.c_[static_cast<size_t>(n)][static_cast<size_t>(k) + 1] = coeff(n, k);
    return r;
}

BivariateSeries BivariateSeries::scaled(const Rational& c) const {
    BivariateSeries r = *this;
    for (auto& row : r.c_)
        for (auto& v : row) v *= c;
    return r;
}

std::vector<std::vector<Int>> dnk_rows(int order) {
    const BivariateSeries e = BivariateSeries::exp_t(order);
    // G = 1 + (t - 1) e^t
    BivariateSeries g = BivariateSeries::one(order) + e.times_t() - e;
    // 1/(1 - x G) as the geometric series sum_{m<=order} (x G)^m; x-degree of
    // (x G)^m is at least m, so the truncation is exact up to x^order.
    const BivariateSeries xg = g.times_x();
    BivariateSeries inv = BivariateSeries::one(order);
    for (int m = 0; m < order; ++m)
        inv = inv * xg + BivariateSeries::one(order);
    const BivariateSeries f = e * inv;

    std::vector<std::vector<Int>> rows(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const Int nf = factorial(n);
        std::vector<Int>& row = rows[static_cast<size_t>(n)];
        for (int k = 0; k <= n; ++k) {
            const Rational scaled = f.coeff(n, k) * Rational(nf);
            if (boost::multiprecision::denominator(scaled) != 1)
                throw std::logic_error("dnk_rows: non-integer coefficient at n=" +
                                       std::to_string(n) + " k=" + std::to_string(k));
            Int v = boost::multiprecision::numerator(scaled);
            if (v < 0)
                throw std::logic_error("dnk_rows: negative coefficient at n=" +
                                       std::to_string(n) + " k=" + std::to_string(k));
            row.push_back(std::move(v));
        }
        while (row.size() > 1 && row.back() == 0) row.pop_back();
    }
    return rows;
}

}  // namespace ssperm
