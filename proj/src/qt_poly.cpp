#include "freecalc/qt_poly.hpp"

#include <sstream>

namespace freecalc {

QtPoly::QtPoly(const Rational& c)
{
    if (sgn(c) != 0) {
        coeffs_.push_back(c);
    }
}

QtPoly::QtPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

QtPoly QtPoly::t_power(std::size_t k, const Rational& c)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return QtPoly(std::move(v));
}

void QtPoly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational QtPoly::evaluate(const Rational& t) const
{
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * t + coeffs_[k];
    }
    return acc;
}

QtPoly& QtPoly::operator+=(const QtPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

QtPoly& QtPoly::operator-=(const QtPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

QtPoly operator-(QtPoly a)
{
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

QtPoly operator*(const QtPoly& a, const QtPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QtPoly(std::move(v));
}

std::string QtPoly::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) {
            continue;
        }
        const Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                out << '-';
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (k == 0 || !unit) {
            out << freecalc::to_string(mag);
        }
        if (k > 0) {
            out << (unit ? "" : "*") << 't';
            if (k > 1) {
                out << '^' << k;
            }
        }
    }
    return out.str();
}

} // namespace freecalc
