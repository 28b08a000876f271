#pragma once

#include <cstddef>
#include <vector>

#include "freecalc/rational.hpp"

namespace freecalc {

// Truncated power series c_0 + c_1 z + ... + c_L z^L over the rationals.
// Binary operations are exact modulo z^(L+1) with L the smaller operand order.
class SeriesQ {
public:
    SeriesQ() = default;
    explicit SeriesQ(std::vector<Rational> coefficients);

    static SeriesQ constant(const Rational& c, std::size_t order);
    static SeriesQ variable(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    SeriesQ truncated(std::size_t order) const;

    SeriesQ& operator+=(const SeriesQ& other);
    SeriesQ& operator-=(const SeriesQ& other);
    SeriesQ& operator*=(const Rational& scalar);

    friend SeriesQ operator+(SeriesQ a, const SeriesQ& b) { return a += b; }
    friend SeriesQ operator-(SeriesQ a, const SeriesQ& b) { return a -= b; }
    friend SeriesQ operator*(SeriesQ a, const Rational& s) { return a *= s; }
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
    friend bool operator==(const SeriesQ&, const SeriesQ&) = default;

    // 1/f; requires c_0 != 0.
    SeriesQ reciprocal() const;
    // f(g(z)); requires g_0 = 0. Order is min of the two orders.
    SeriesQ compose(const SeriesQ& inner) const;
    // g with f(g(w)) = w; requires c_0 = 0 and c_1 != 0.
    SeriesQ reversion() const;
    // f / z; requires c_0 = 0. Order drops by one.
    SeriesQ divide_by_variable() const;
    // z f; order grows by one.
    SeriesQ multiply_by_variable() const;

private:
    std::vector<Rational> coeffs_{Rational(0)};
};

} // namespace freecalc
