#include <doctest.h>

#include <cstdlib>
#include <set>

#include "freecalc/error.hpp"
#include "freecalc/lattice.hpp"
#include "freecalc/partition.hpp"
#include "oracles.hpp"

using namespace freecalc;

namespace {

SetPartition P(const char* s)
{
    return parse_partition(s);
}

} // namespace

TEST_CASE("parse and print")
{
    const auto p = P("1 5 8|2 7|3|4 6");
    CHECK(p.size() == 8);
    CHECK(p.block_count() == 4);
    CHECK(p.to_string() == "1 5 8|2 7|3|4 6");
    CHECK(P("4 6|3|2 7|8 5 1") == p);
    CHECK(P("1") == SetPartition::zero(1));
    CHECK(P("1") == SetPartition::one(1));
    CHECK(parse_partition("1 2", 4).to_string() == "1 2|3|4");

    CHECK_THROWS_AS(P("1 2|2 3"), InvalidArgument);
    CHECK_THROWS_AS(P("1 3"), InvalidArgument);
    CHECK_THROWS_AS(P("0 1"), InvalidArgument);
    CHECK_THROWS_AS(P("1 x"), InvalidArgument);
    CHECK_THROWS_AS(parse_partition("1 2|3", 2), InvalidArgument);
}

TEST_CASE("enumeration counts and order")
{
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(all_partitions(n).size() == oracle::bell(n));
        CHECK(noncrossing_partitions(n).size() == oracle::catalan(n));
        CHECK(interval_partitions(n).size() == (1u << (n - 1)));
    }

    // Same sets as the brute-force generator, in restricted-growth order.
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<oracle::Labels> got;
        for (const auto& p : all_partitions(n))
            got.push_back(p.labels());
        CHECK(got == oracle::partitions(n));

        std::vector<oracle::Labels> nc;
        for (const auto& p : noncrossing_partitions(n))
            nc.push_back(p.labels());
        CHECK(nc == oracle::noncrossing(n));
    }

    for (const auto& p : interval_partitions(5)) {
        CHECK(is_interval(p));
        CHECK(is_noncrossing(p));
    }
}

TEST_CASE("caps")
{
    unsetenv("NC_FREECALC_CAP_OVERRIDE");
    CHECK_THROWS_AS(all_partitions(13), CapExceeded);
    CHECK_THROWS_AS(noncrossing_partitions(15), CapExceeded);
    CHECK_THROWS_AS(interval_partitions(31), CapExceeded);
    CHECK_THROWS_AS(crossing_number(SetPartition::zero(15)), CapExceeded);

    setenv("NC_FREECALC_CAP_OVERRIDE", "13", 1);
    std::size_t count = 0;
    enumerate_all(13, [&](const SetPartition&) { ++count; });
    CHECK(count == oracle::bell(13));
    unsetenv("NC_FREECALC_CAP_OVERRIDE");
}

TEST_CASE("noncrossing predicate matches brute force")
{
    for (unsigned n = 1; n <= 7; ++n)
        for (const auto& l : oracle::partitions(n))
            CHECK(is_noncrossing(oracle::to_partition(l)) == !oracle::crossing(l));
}

TEST_CASE("lattice operations")
{
    CHECK(meet(P("1 2 3|4"), P("1 2|3 4")) == P("1 2|3|4"));
    CHECK(join(P("1 2|3|4"), P("1|2 3|4")) == P("1 2 3|4"));
    CHECK(join(P("1 3|2|4"), P("1|2 4|3")) == P("1 3|2 4"));
    CHECK(leq(P("1|2|3"), P("1 3|2")));
    CHECK_FALSE(leq(P("1 2|3"), P("1 3|2")));

    CHECK(opposite(parse_partition("1 2|3")) == P("1|2 3"));
    CHECK(opposite(opposite(P("1 5 8|2 7|3|4 6"))) == P("1 5 8|2 7|3|4 6"));
    CHECK(opposite(SetPartition::one(4)) == SetPartition::one(4));

    const int k22[] = {2, 1};
    CHECK(thicken(P("1 2"), 2) == P("1 2 3 4"));
    CHECK(thicken(P("1 3|2"), 1) == P("1 3|2"));
    CHECK(expand(P("1|2"), k22) == P("1 2|3"));
    const int kk[] = {2, 2, 2};
    CHECK(expand(P("1 3|2"), kk) == thicken(P("1 3|2"), 2));
    const int bad[] = {1, 0};
    CHECK_THROWS_AS(expand(P("1|2"), bad), InvalidArgument);

    CHECK(direct_sum(P("1 2"), P("1|2")) == P("1 2|3|4"));
    CHECK(repeat_sum(P("1 2"), 3) == P("1 2|3 4|5 6"));

    for (unsigned n = 1; n <= 5; ++n) {
        for (const auto& a : oracle::partitions(n)) {
            for (const auto& b : oracle::partitions(n)) {
                const auto pa = oracle::to_partition(a);
                const auto pb = oracle::to_partition(b);
                CHECK(leq(pa, pb) == oracle::finer(a, b));
                CHECK((meet(pa, pb) == SetPartition::zero(n)) == oracle::meet_is_zero(a, b));
            }
        }
    }
}

TEST_CASE("block roles")
{
    auto r = classify_blocks(P("1 3|2"));
    CHECK(r.inner_count == 1);
    CHECK(r.outer_count == 1);
    CHECK(r.roles[0] == BlockRole::outer);
    CHECK(r.roles[1] == BlockRole::inner);

    r = classify_blocks(SetPartition::zero(4));
    CHECK(r.inner_count == 0);
    CHECK(r.outer_count == 4);
    for (const auto& p : interval_partitions(5))
        CHECK(classify_blocks(p).inner_count == 0);

    CHECK(has_inner_singleton(P("1 3|2")));
    CHECK_FALSE(has_inner_singleton(P("1 4|2 3")));
    CHECK_THROWS_AS(classify_blocks(P("1 3|2 4")), InvalidArgument);
}

TEST_CASE("crossing number")
{
    CHECK(crossing_number(P("1 3|2 4")) == 1);
    CHECK(crossing_number(P("1 3 5|2 4 6")) == 2);
    for (const auto& p : noncrossing_partitions(6))
        CHECK(crossing_number(p) == 0);
    for (unsigned n = 4; n <= 7; ++n)
        for (const auto& l : oracle::partitions(n))
            if (oracle::crossing(l))
                CHECK(crossing_number(oracle::to_partition(l)) == oracle::crossing_number(l));
}

TEST_CASE("kreweras complement")
{
    CHECK(kreweras(P("1 2|3")) == P("1|2 3"));
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(kreweras(SetPartition::zero(n)) == SetPartition::one(n));
        CHECK(kreweras(SetPartition::one(n)) == SetPartition::zero(n));
        std::set<SetPartition> images;
        for (const auto& p : noncrossing_partitions(n)) {
            const auto k = kreweras(p);
            CHECK(k.labels() == oracle::kreweras(p.labels()));
            CHECK(k.block_count() + p.block_count() == n + 1);
            images.insert(k);
        }
        CHECK(images.size() == noncrossing_partitions(n).size());
    }
    CHECK_THROWS_AS(kreweras(P("1 3|2 4")), InvalidArgument);
}

TEST_CASE("mobius functions")
{
    for (unsigned n = 1; n <= 6; ++n) {
        const auto lo = SetPartition::zero(n);
        const auto hi = SetPartition::one(n);
        const Rational sign = n % 2 == 1 ? 1 : -1;
        CHECK(mobius_p(lo, hi) == sign * Rational(oracle::factorial(n - 1)));
        CHECK(mobius_nc(lo, hi) == sign * Rational(oracle::catalan(n - 1)));
    }

    // Interval values of mu_P against the block product formula.
    for (const auto& s : oracle::partitions(5))
        for (const auto& p : oracle::partitions(5))
            if (oracle::finer(s, p))
                CHECK(mobius_p(oracle::to_partition(s), oracle::to_partition(p)) == oracle::mobius_p_product(s, p));

    const auto row = mobius_row(Lattice::noncrossing, P("1|2|3"), P("1 2 3"));
    REQUIRE(row.size() == 5);
    std::vector<Rational> coeffs;
    for (const auto& [c, p] : row)
        coeffs.push_back(c);
    CHECK(coeffs == std::vector<Rational>{1, -1, -1, -1, 2});

    CHECK_THROWS_AS(mobius_p(P("1 2|3"), P("1|2 3")), InvalidArgument);
    CHECK(lattice_interval(Lattice::all, P("1|2|3|4"), P("1 3|2 4")).size() == 4);
    CHECK_THROWS_AS(lattice_interval(Lattice::noncrossing, P("1|2|3|4"), P("1 3|2 4")), InvalidArgument);
}
