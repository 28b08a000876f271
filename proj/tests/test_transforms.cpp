#include <doctest.h>

#include <random>

#include "freecalc/error.hpp"
#include "freecalc/series.hpp"
#include "freecalc/transforms.hpp"
#include "oracles.hpp"

using namespace freecalc;

namespace {

std::vector<Rational> Q(std::initializer_list<long> xs)
{
    std::vector<Rational> v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

std::vector<Rational> random_sequence(std::mt19937& rng, std::size_t len, bool nonzero_first)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < len; ++i) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        if (i == 0 && nonzero_first && x == 0)
            x = 1;
        v.push_back(x);
    }
    return v;
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, -1) == 1);
}

TEST_CASE("moments from cumulants")
{
    CHECK(moments_from_cumulants(CumulantSeq(Q({1, 1, 1, 1}))).values() == Q({1, 2, 5, 14}));
    CHECK(moments_from_cumulants(CumulantSeq(Q({0, 1, 0, 0, 0, 0}))).values() == Q({0, 1, 0, 2, 0, 5}));
    CHECK(cumulants_from_moments(MomentSeq(Q({1, 2, 5, 14}))).values() == Q({1, 1, 1, 1}));
    CHECK(cumulants_from_moments(MomentSeq(Q({0, 1, 0, 2}))).values() == Q({0, 1, 0, 0}));
    const Rational c(2, 3);
    CHECK(cumulants_from_moments(MomentSeq({c, c * c, c * c * c})).values() == std::vector<Rational>{c, 0, 0});

    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r = random_sequence(rng, 8, false);
        const auto m = moments_from_cumulants(CumulantSeq(r));
        for (std::size_t n = 1; n <= 8; ++n)
            CHECK(m.at(n) == oracle::nc_sum(n, [&](std::size_t k) { return r[k - 1]; }));
        CHECK(cumulants_from_moments(m).values() == r);
    }
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = random_sequence(rng, 10, false);
        CHECK(moments_from_cumulants(cumulants_from_moments(MomentSeq(m))).values() == m);
    }
}

TEST_CASE("additivity of cumulants")
{
    std::mt19937 rng(11);
    const auto rx = random_sequence(rng, 6, false);
    const auto ry = random_sequence(rng, 6, false);
    std::vector<Rational> sum;
    for (std::size_t i = 0; i < 6; ++i)
        sum.push_back(rx[i] + ry[i]);
    // Mixed blocks vanish: m_n(x + y) sums over NC(n) with each block coloured
    // x or y independently.
    const auto m = moments_from_cumulants(CumulantSeq(sum));
    for (std::size_t n = 1; n <= 6; ++n) {
        Rational acc = 0;
        for (const auto& l : oracle::noncrossing(n)) {
            Rational prod = 1;
            for (auto s : oracle::block_sizes(l))
                prod *= rx[s - 1] + ry[s - 1];
            acc += prod;
        }
        CHECK(m.at(n) == acc);
    }
}

TEST_CASE("block products, time scaling, centering")
{
    const CumulantSeq r(Q({1, 1, 1}));
    CHECK(r_pi(SetPartition::one(3), CumulantSeq(Q({4, 5, 6}))) == 6);
    CHECK(r_pi(parse_partition("1 3|2"), r) == 1);
    CHECK(m_pi(SetPartition::zero(3), MomentSeq(Q({2, 0, 0}))) == 8);
    CHECK_THROWS_AS(r_pi(SetPartition::one(4), r), InvalidArgument);

    CHECK(scale_time(r, 1) == r);
    CHECK(scale_time(r, Rational(1, 2)).values() == std::vector<Rational>(3, Rational(1, 2)));
    CHECK(center(r).values() == Q({0, 1, 1}));
    CHECK(center(center(r)) == center(r));
    CHECK(center(CumulantSeq(Q({0, 1}))).values() == Q({0, 1}));

    // Semigroup: cumulants at s + t are the sum of those at s and t.
    std::mt19937 rng(3);
    const CumulantSeq base(random_sequence(rng, 6, false));
    const Rational s(1, 3);
    const Rational t(5, 2);
    const auto lhs = scale_time(base, s + t);
    std::vector<Rational> rhs;
    for (std::size_t n = 1; n <= 6; ++n)
        rhs.push_back(scale_time(base, s).at(n) + scale_time(base, t).at(n));
    CHECK(lhs.values() == rhs);
}

TEST_CASE("alternating moments")
{
    const CumulantSeq x(Q({2, 3, 5}));
    const MomentSeq y(Q({7, 11, 13}));
    CHECK(alternating_moment(x, y, 1) == 14);
    CHECK(alternating_moment(CumulantSeq(Q({0, 1})), MomentSeq(Q({1, 1})), 2) == 1);
    CHECK(alternating_moment(CumulantSeq(Q({1, 1, 1})), MomentSeq(Q({1, 1, 1})), 3) == 5);

    std::mt19937 rng(5);
    const auto rx = random_sequence(rng, 8, false);
    const auto mx = moments_from_cumulants(CumulantSeq(rx));
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(alternating_moment(CumulantSeq(rx), MomentSeq(std::vector<Rational>(8, 1)), n) == mx.at(n));
    CHECK_THROWS_AS(alternating_moment(x, y, 4), InvalidArgument);
}

TEST_CASE("series arithmetic")
{
    const SeriesQ one_minus_z(Q({1, -1, 0, 0, 0}));
    const auto inv = one_minus_z.reciprocal();
    CHECK(inv.coefficients() == Q({1, 1, 1, 1, 1}));
    CHECK((inv * one_minus_z).coefficients() == Q({1, 0, 0, 0, 0}));

    const SeriesQ f(Q({0, 1, 1, 0, 0, 0}));
    const auto g = f.reversion();
    CHECK(f.compose(g).coefficients() == Q({0, 1, 0, 0, 0, 0}));
    CHECK(g.compose(f).coefficients() == Q({0, 1, 0, 0, 0, 0}));
    // Inverse of z + z^2 has Catalan coefficients with alternating signs.
    CHECK(g.coefficients() == Q({0, 1, -1, 2, -5, 14}));

    CHECK_THROWS_AS(SeriesQ(Q({0, 0, 1})).reversion(), InvalidArgument);
    CHECK_THROWS_AS(SeriesQ(Q({0, 1})).reciprocal(), InvalidArgument);
    CHECK_THROWS_AS(SeriesQ(Q({1, 1})).divide_by_variable(), InvalidArgument);
    CHECK((SeriesQ(Q({1, 2})) + SeriesQ(Q({1, 1, 1}))).coefficients() == Q({2, 3}));
}

TEST_CASE("S-transform")
{
    const auto s = s_from_r(r_series(CumulantSeq(std::vector<Rational>(9, 1))));
    REQUIRE(s.order() >= 8);
    for (std::size_t k = 0; k <= 8; ++k)
        CHECK(s[k] == (k % 2 == 0 ? 1 : -1));

    const auto point = s_from_r(r_series(CumulantSeq(Q({3, 0, 0, 0}))));
    CHECK(point[0] == Rational(1, 3));
    for (std::size_t k = 1; k <= point.order(); ++k)
        CHECK(point[k] == 0);

    CHECK_THROWS_AS(s_from_r(r_series(CumulantSeq(Q({0, 1, 0})))), InvalidArgument);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r = random_sequence(rng, 9, true);
        const auto R = r_series(CumulantSeq(r));
        CHECK(r_from_s(s_from_r(R)) == R);
        CHECK(cumulants_from_r_series(R).values() == r);
    }
}

TEST_CASE("sandwich transform")
{
    const Rational lambda(2, 5);
    const auto r = sandwich_transform(MomentSeq(std::vector<Rational>(5, lambda)));
    CHECK(r.values() == std::vector<Rational>(5, lambda));
    CHECK(sandwich_transform(MomentSeq(Q({0, 1, 0}))).values() == Q({0, 1, 0}));

    // S_y(w) = S_x(w) / (1 + w) for y = s x s.
    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = random_sequence(rng, 7, true);
        const auto sy = s_from_r(r_series(sandwich_transform(MomentSeq(m))));
        const auto sx = s_from_r(r_series(cumulants_from_moments(MomentSeq(m))));
        const std::size_t order = std::min(sx.order(), sy.order());
        std::vector<Rational> one_plus(order + 1, 0);
        one_plus[0] = 1;
        if (order >= 1)
            one_plus[1] = 1;
        const auto rhs = sx.truncated(order) * SeriesQ(one_plus).reciprocal();
        CHECK(sy.truncated(order) == rhs);
    }
}
