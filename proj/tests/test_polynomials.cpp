#include <doctest.h>

#include "freecalc/error.hpp"
#include "freecalc/polynomials.hpp"
#include "oracles.hpp"

using namespace freecalc;

namespace {

using D = DiagonalPolynomial;

D d(int k)
{
    return D::delta(k);
}

QtPoly t()
{
    return QtPoly::t_power(1);
}

ScalarPolynomial X(std::size_t k = 1, const QtPoly& c = QtPoly(1))
{
    return ScalarPolynomial::x_power(k, c);
}

ScalarPolynomial C(const QtPoly& c)
{
    return ScalarPolynomial::constant(c);
}

} // namespace

TEST_CASE("t-polynomials")
{
    const QtPoly p({Rational(1, 2), -1, 2});
    CHECK(p.to_string() == "2*t^2 - t + 1/2");
    CHECK(p.evaluate(2) == Rational(13, 2));
    CHECK((p - p).is_zero());
    CHECK((t() * t()) == QtPoly::t_power(2));
    CHECK(QtPoly(0).is_zero());
}

TEST_CASE("diagonal polynomial algebra")
{
    CHECK(d(0) == D::one());
    CHECK((d(1) * d(2)).to_string() == "D1 D2");
    CHECK(d(1) * d(2) != d(2) * d(1));
    CHECK((d(1) - d(1)).is_zero());
    const D p = d(1) * d(1) - d(2) - t() * d(2);
    CHECK(p.to_string() == "D1 D1 + (-t - 1) D2");
    CHECK(p.coefficient({2}) == QtPoly(std::vector<Rational>{-1, -1}));
    CHECK(p.degree() == 2);
    CHECK(p.at_time(2).coefficient({2}) == QtPoly(-3));
    CHECK_THROWS_AS(d(-1), InvalidArgument);

    const auto s = X(2) - C(QtPoly(std::vector<Rational>{0, 2, 0})) * X() + C(1);
    CHECK(s.to_string() == "X^2 - 2*t X + 1");
    CHECK(X(1).compose(X(2) + C(1)) == X(2) + C(1));
}

TEST_CASE("general Kailath-Segall polynomials")
{
    CHECK(ks_general(0) == D::one());
    CHECK(ks_general(1) == d(1));
    CHECK(ks_general(2) == d(1) * d(1) - d(2));
    const D psi3 = d(1) * d(1) * d(1) - d(1) * d(2) - t() * d(2) - d(2) * d(1) + d(3);
    CHECK(ks_general(3) == psi3);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(ks_general(n, KsIndexForm::q_form) == ks_general(n, KsIndexForm::m_form));
        CHECK(ks_general(n).at_time(0) == ks_centered(n));
    }
    CHECK_THROWS_AS(ks_general(13), CapExceeded);
}

TEST_CASE("centered Kailath-Segall polynomials")
{
    CHECK(ks_centered(1) == d(1));
    CHECK(ks_centered(2) == d(1) * d(1) - d(2));
    CHECK(ks_centered(3) == d(1) * d(1) * d(1) - d(2) * d(1) - d(1) * d(2) + d(3));
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(ks_centered(n, CenteredForm::recursive) == ks_centered(n, CenteredForm::compositions));
}

TEST_CASE("alpha and beta")
{
    for (int n = 1; n <= 4; ++n) {
        CHECK(alpha(static_cast<std::size_t>(n), 0) == d(n));
        CHECK(beta(static_cast<std::size_t>(n), 0) == d(n));
    }
    CHECK(beta(1, 1) == ks_general(2));
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(alpha(0, n) == ks_general(n));
        CHECK(beta(0, n) == ks_general(n));
        CHECK(beta(1, n - 1) == ks_general(n));
    }
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t m = 0; n + m <= 10; ++m) {
            D rhs = beta(n, m);
            for (std::size_t l = 0; l < m; ++l)
                rhs += QtPoly::t_power(m - 1 - l) * beta(n + 1, l);
            CHECK(alpha(n, m) == rhs);
        }

    // phi(beta(n, m)) = phi(St_{1_n + 0_m}) = r_n r_1^m.
    const auto p = ProcessModel::compound_poisson(MomentSeq({2, 3, 5, 7, 11, 13, 17, 19}), Rational(1, 3));
    DeltaWordEvaluator ev(p);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 0; n + m <= 6; ++m) {
            Rational want = p.cumulant_at(n);
            for (std::size_t j = 0; j < m; ++j)
                want *= p.cumulant_at(1);
            CHECK(expectation(beta(n, m), ev) == want);
        }
}

TEST_CASE("Brownian specialisation")
{
    CHECK(specialize_brownian(2) == X(2) - C(t()));
    CHECK(specialize_brownian(3) == X(3) - X(1, QtPoly(std::vector<Rational>{0, 2})));
    CHECK(specialize_brownian(4) == X(4) - X(2, QtPoly(std::vector<Rational>{0, 3})) + C(QtPoly::t_power(2)));
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(specialize_brownian(n) == brownian_closed_form(n));
        CHECK(specialize_brownian(n) == brownian_recursion(n));
    }
}

TEST_CASE("free Poisson specialisation")
{
    CHECK(specialize_poisson(1) == X());
    CHECK(specialize_poisson(2) == X(2) - X());
    CHECK(specialize_poisson(3) == X(3) - X(2, 2) + X(1, QtPoly(std::vector<Rational>{1, -1})));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(specialize_poisson(n) == poisson_by_substitution(n));
}

TEST_CASE("free Poisson-Charlier polynomials")
{
    CHECK(poisson_charlier(1) == X() - C(t()));
    CHECK(poisson_charlier(2) == X(2) - X(1, QtPoly(std::vector<Rational>{1, 2})) + C(QtPoly::t_power(2)));
    CHECK(poisson_charlier(2).at_time(1) == X(2) - X(1, 3) + C(1));
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(poisson_charlier(n) == poisson_charlier_explicit(n));
        CHECK(poisson_charlier(n) == poisson_charlier_by_substitution(n));
    }
    CHECK(chebyshev_second_kind(4) == X(4) - X(2, 3) + C(1));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(poisson_charlier(n).at_time(1) == chebyshev_even_in_sqrt(n));

    // The double sum without the C(i + k, i) interleaving factor already
    // disagrees at n = 3.
    const std::size_t n = 3;
    const auto xt = X() - C(t());
    ScalarPolynomial literal = xt * xt * xt;
    for (long i = 0; i + 2 <= static_cast<long>(n); ++i) {
        ScalarPolynomial inner;
        for (long k = 1; k <= (static_cast<long>(n) - i) / 2; ++k) {
            const Rational c = Rational(binomial(static_cast<long>(n) - i - k - 1, k - 1)) *
                               ((static_cast<long>(n) - k - i) % 2 == 0 ? 1 : -1);
            inner += X(static_cast<std::size_t>(k), c);
        }
        ScalarPolynomial power = C(1);
        for (long j = 0; j < i; ++j)
            power = power * xt;
        literal += power * inner;
    }
    CHECK(literal != poisson_charlier(3));
}

TEST_CASE("compound Poisson recursion")
{
    const MomentSeq gen({0, 1, Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16), Rational(1, 32),
                         Rational(1, 64), Rational(1, 128), Rational(1, 256)});
    CHECK(compound_ks(1, gen) == d(1));
    CHECK(compound_ks(2, gen) == d(1) * d(1) - d(2));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(compound_ks(n, gen) == ks_general(n));
    CHECK_THROWS_AS(compound_ks(4, MomentSeq({1, 2, 3})), InvalidArgument);
    CHECK_THROWS_AS(compound_ks(11, MomentSeq(std::vector<Rational>(12, 1))), CapExceeded);
}

TEST_CASE("inner products")
{
    const Rational tt(3, 4);
    const auto sc = ProcessModel::semicircular(tt);
    CHECK(inner_product(ks_general(1), ks_general(1), sc) == tt);
    CHECK(inner_product(ks_general(2), ks_general(1), sc) == 0);
    CHECK(inner_product(ks_general(2), ks_general(2), sc) == tt * tt);

    // Non-centered: <psi_n, psi_m> is the Ito expectation of 1_n + 1_m.
    const auto cp = ProcessModel::compound_poisson(MomentSeq({2, 3, 5, 7, 11, 13, 17, 19, 23, 29}), Rational(1, 3));
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto pi = direct_sum(SetPartition::one(n), SetPartition::one(m));
            Rational oracle_value = 0;
            for (const auto& s : oracle::noncrossing(n + m))
                if (oracle::meet_is_zero(s, pi.labels())) {
                    Rational prod = 1;
                    for (auto sz : oracle::block_sizes(s))
                        prod *= cp.cumulant_at(sz);
                    oracle_value += prod;
                }
            CHECK(inner_product(ks_general(n), ks_general(m), cp) == oracle_value);
        }

    const auto gram = orthogonality_gram(4, ProcessModel::free_poisson(2).centered());
    for (std::size_t n = 0; n <= 4; ++n)
        for (std::size_t m = 0; m <= 4; ++m)
            CHECK(gram[n][m] == (n == m ? Rational(1 << n) : Rational(0)));
}
