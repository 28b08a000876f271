#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freecalc/rational.hpp"

namespace freecalc {

// Dense univariate polynomial in the time symbol t over the rationals.
// Trailing zero coefficients are never stored; the zero polynomial is empty.
class QtPoly {
public:
    QtPoly() = default;
    QtPoly(const Rational& c); // NOLINT: constants convert implicitly
    QtPoly(int c) : QtPoly(Rational(c)) {} // NOLINT
    explicit QtPoly(std::vector<Rational> coefficients);

    static QtPoly t_power(std::size_t k, const Rational& c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational evaluate(const Rational& t) const;

    QtPoly& operator+=(const QtPoly& o);
    QtPoly& operator-=(const QtPoly& o);
    friend QtPoly operator+(QtPoly a, const QtPoly& b) { return a += b; }
    friend QtPoly operator-(QtPoly a, const QtPoly& b) { return a -= b; }
    friend QtPoly operator-(QtPoly a);
    friend QtPoly operator*(const QtPoly& a, const QtPoly& b);
    friend bool operator==(const QtPoly&, const QtPoly&) = default;

    // e.g. "2*t^2 - t + 1/2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace freecalc
