#include "freecalc/transforms.hpp"

#include <algorithm>

namespace freecalc {

namespace {

// [z^k] of M(z)^s for every s <= n, with M(z) = 1 + sum m_j z^j known up to
// degree n - 1. Entry [s][k].
std::vector<std::vector<Rational>> moment_powers(const std::vector<Rational>& m, std::size_t n)
{
    std::vector<Rational> base(n, Rational(0));
    base[0] = 1;
    for (std::size_t j = 1; j < n && j <= m.size(); ++j) {
        base[j] = m[j - 1];
    }
    std::vector<std::vector<Rational>> powers(n + 1, std::vector<Rational>(n, Rational(0)));
    powers[0][0] = 1;
    for (std::size_t s = 1; s <= n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(powers[s - 1][i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j < n; ++j) {
                powers[s][i + j] += powers[s - 1][i] * base[j];
            }
        }
    }
    return powers;
}

} // namespace

// Decomposing by the block containing 1: m_n = sum_s r_s [z^(n-s)] M(z)^s.
MomentSeq moments_from_cumulants(const CumulantSeq& r)
{
    const std::size_t order = r.order();
    std::vector<Rational> m;
    m.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const auto powers = moment_powers(m, n);
        Rational acc = 0;
        for (std::size_t s = 1; s <= n; ++s) {
            acc += r.values()[s - 1] * powers[s][n - s];
        }
        m.push_back(acc);
    }
    return MomentSeq(std::move(m));
}

CumulantSeq cumulants_from_moments(const MomentSeq& m)
{
    const std::size_t order = m.order();
    std::vector<Rational> r;
    r.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const auto powers = moment_powers(m.values(), n);
        Rational acc = m.values()[n - 1];
        for (std::size_t s = 1; s < n; ++s) {
            acc -= r[s - 1] * powers[s][n - s];
        }
        r.push_back(acc);
    }
    return CumulantSeq(std::move(r));
}

Rational m_pi(const SetPartition& p, const MomentSeq& m)
{
    Rational acc = 1;
    for (const auto& b : p.blocks()) {
        acc *= m.at(b.size());
    }
    return acc;
}

Rational r_pi(const SetPartition& p, const CumulantSeq& r)
{
    Rational acc = 1;
    for (const auto& b : p.blocks()) {
        acc *= r.at(b.size());
    }
    return acc;
}

Rational alternating_moment(const CumulantSeq& x_cumulants, const MomentSeq& y_moments, std::size_t n)
{
    if (n > x_cumulants.order() || n > y_moments.order()) {
        throw InvalidArgument("alternating_moment: n exceeds the truncation order");
    }
    Rational acc = 0;
    enumerate_noncrossing(n, [&](const SetPartition& p) {
        acc += r_pi(kreweras(p), x_cumulants) * m_pi(p, y_moments);
    });
    return acc;
}

CumulantSeq scale_time(const CumulantSeq& r, const Rational& t)
{
    std::vector<Rational> v = r.values();
    for (auto& x : v) {
        x *= t;
    }
    return CumulantSeq(std::move(v));
}

CumulantSeq center(const CumulantSeq& r)
{
    std::vector<Rational> v = r.values();
    if (!v.empty()) {
        v[0] = 0;
    }
    return CumulantSeq(std::move(v));
}

SeriesQ r_series(const CumulantSeq& r)
{
    if (r.order() == 0) {
        throw InvalidArgument("r_series: empty cumulant sequence");
    }
    return SeriesQ(r.values());
}

CumulantSeq cumulants_from_r_series(const SeriesQ& r)
{
    return CumulantSeq(r.coefficients());
}

SeriesQ s_from_r(const SeriesQ& r)
{
    if (sgn(r[0]) == 0) {
        throw InvalidArgument("S-transform undefined: r_1 = 0");
    }
    return r.multiply_by_variable().reversion().divide_by_variable();
}

SeriesQ r_from_s(const SeriesQ& s)
{
    if (sgn(s[0]) == 0) {
        throw InvalidArgument("S-transform with zero constant term does not come from r_1 != 0");
    }
    return s.multiply_by_variable().reversion().divide_by_variable();
}

CumulantSeq sandwich_transform(const MomentSeq& x_moments)
{
    return CumulantSeq(x_moments.values());
}

} // namespace freecalc
