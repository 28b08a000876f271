#include "freecalc/series.hpp"

#include <algorithm>

#include "freecalc/error.hpp"

namespace freecalc {

SeriesQ::SeriesQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty()) {
        coeffs_.emplace_back(0);
    }
}

SeriesQ SeriesQ::constant(const Rational& c, std::size_t order)
{
    std::vector<Rational> v(order + 1);
    v[0] = c;
    return SeriesQ(std::move(v));
}

SeriesQ SeriesQ::variable(std::size_t order)
{
    std::vector<Rational> v(order + 1);
    if (order >= 1) {
        v[1] = 1;
    }
    return SeriesQ(std::move(v));
}

SeriesQ SeriesQ::truncated(std::size_t order) const
{
    std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return SeriesQ(std::move(v));
}

SeriesQ& SeriesQ::operator+=(const SeriesQ& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

SeriesQ& SeriesQ::operator-=(const SeriesQ& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

SeriesQ& SeriesQ::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> v(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return SeriesQ(std::move(v));
}

SeriesQ SeriesQ::reciprocal() const
{
    if (sgn(coeffs_[0]) == 0) {
        throw InvalidArgument("reciprocal of a series with zero constant term");
    }
    std::vector<Rational> v(coeffs_.size());
    v[0] = 1 / coeffs_[0];
    for (std::size_t k = 1; k < v.size(); ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += coeffs_[j] * v[k - j];
        }
        v[k] = -acc / coeffs_[0];
    }
    return SeriesQ(std::move(v));
}

SeriesQ SeriesQ::compose(const SeriesQ& inner) const
{
    if (sgn(inner.coeffs_[0]) != 0) {
        throw InvalidArgument("composition requires an inner series without constant term");
    }
    const std::size_t order = std::min(this->order(), inner.order());
    const SeriesQ g = inner.truncated(order);
    // Horner: c_0 + g (c_1 + g (c_2 + ...)).
    SeriesQ acc = SeriesQ::constant(coeffs_[order], order);
    for (std::size_t k = order; k-- > 0;) {
        acc = acc * g;
        acc = acc + SeriesQ::constant(coeffs_[k], order);
    }
    return acc;
}

SeriesQ SeriesQ::reversion() const
{
    if (sgn(coeffs_[0]) != 0 || order() < 1 || sgn(coeffs_[1]) == 0) {
        throw InvalidArgument("compositional inverse requires c_0 = 0 and c_1 != 0");
    }
    const std::size_t order = this->order();
    std::vector<Rational> g(order + 1);
    g[1] = 1 / coeffs_[1];
    // Solve for g_k from [w^k] f(g(w)) = 0, which is linear in g_k with slope c_1.
    for (std::size_t k = 2; k <= order; ++k) {
        const SeriesQ partial = truncated(k).compose(SeriesQ(std::vector<Rational>(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k + 1))));
        g[k] = -partial[k] / coeffs_[1];
    }
    return SeriesQ(std::move(g));
}

SeriesQ SeriesQ::divide_by_variable() const
{
    if (sgn(coeffs_[0]) != 0) {
        throw InvalidArgument("series is not divisible by z");
    }
    if (order() == 0) {
        return SeriesQ(std::vector<Rational>{Rational(0)});
    }
    return SeriesQ(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

SeriesQ SeriesQ::multiply_by_variable() const
{
    std::vector<Rational> v;
    v.reserve(coeffs_.size() + 1);
    v.emplace_back(0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return SeriesQ(std::move(v));
}

} // namespace freecalc
