#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "freecalc/error.hpp"
#include "freecalc/partition.hpp"
#include "freecalc/rational.hpp"
#include "freecalc/series.hpp"

namespace freecalc {

struct MomentTag {};
struct CumulantTag {};

// A 1-based sequence x_1..x_L of exact rationals truncated at order L.
template <class Tag>
class IndexedSequence {
public:
    IndexedSequence() = default;
    explicit IndexedSequence(std::vector<Rational> values) : values_(std::move(values)) {}

    std::size_t order() const noexcept { return values_.size(); }
    const std::vector<Rational>& values() const noexcept { return values_; }

    // For moment sequences m_0 = 1 is implicit.
    Rational at(std::size_t n) const
    {
        if constexpr (std::is_same_v<Tag, MomentTag>) {
            if (n == 0) {
                return Rational(1);
            }
        }
        if (n == 0 || n > values_.size()) {
            throw InvalidArgument("index " + std::to_string(n) + " outside 1.." + std::to_string(values_.size()));
        }
        return values_[n - 1];
    }

    friend bool operator==(const IndexedSequence&, const IndexedSequence&) = default;

private:
    std::vector<Rational> values_;
};

using MomentSeq = IndexedSequence<MomentTag>;
using CumulantSeq = IndexedSequence<CumulantTag>;

// m_n = sum over NC(n) of products of r_{|B|}.
MomentSeq moments_from_cumulants(const CumulantSeq& r);
CumulantSeq cumulants_from_moments(const MomentSeq& m);

// Products over the blocks of p.
Rational m_pi(const SetPartition& p, const MomentSeq& m);
Rational r_pi(const SetPartition& p, const CumulantSeq& r);

// phi(x_1 y_1 ... x_n y_n) = sum_{pi in NC(n)} R_{K(pi)}(x) M_pi(y) for x free from y.
Rational alternating_moment(const CumulantSeq& x_cumulants, const MomentSeq& y_moments, std::size_t n);

CumulantSeq scale_time(const CumulantSeq& r, const Rational& t);
CumulantSeq center(const CumulantSeq& r);

// R(z) = sum_{n >= 1} r_n z^(n-1), of order L - 1.
SeriesQ r_series(const CumulantSeq& r);
CumulantSeq cumulants_from_r_series(const SeriesQ& r);
// S(w) = alpha^{-1}(w) / w with alpha(z) = z R(z); requires r_1 != 0.
SeriesQ s_from_r(const SeriesQ& r);
SeriesQ r_from_s(const SeriesQ& s);

// Cumulants of y = s x s for s standard semicircular free from x: r_n(y) = m_n(x).
CumulantSeq sandwich_transform(const MomentSeq& x_moments);

} // namespace freecalc
