#include "freecalc/verify.hpp"

#include "freecalc/lattice.hpp"
#include "freecalc/measures.hpp"
#include "freecalc/partition.hpp"
#include "freecalc/polynomials.hpp"

namespace freecalc {

void SuiteResult::expect(bool ok, const std::string& what)
{
    ++checks;
    if (!ok) {
        passed = false;
        if (failures.size() < 8) {
            failures.push_back(what);
        }
    }
}

OrthogonalityResult verify_orthogonality(const ProcessModel& process, std::size_t max_n)
{
    OrthogonalityResult out;
    out.suite.name = "orthogonality";
    const ProcessModel centered = process.is_centered() ? process : process.centered();
    out.gram = orthogonality_gram(max_n, centered);
    const Rational r2 = centered.cumulant_at(2);
    for (std::size_t n = 0; n <= max_n; ++n) {
        for (std::size_t m = 0; m <= max_n; ++m) {
            const Rational want = n == m ? power(r2, n) : Rational(0);
            out.suite.expect(out.gram[n][m] == want, "<psi_" + std::to_string(n) + ", psi_" + std::to_string(m) +
                                                         "> = " + to_string(out.gram[n][m]));
        }
    }
    return out;
}

SuiteResult verify_mobius(std::size_t max_n)
{
    SuiteResult out;
    out.name = "mobius";
    Integer factorial = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (n > 1) {
            factorial *= static_cast<unsigned long>(n - 1);
        }
        const Rational sign = (n % 2 == 1) ? 1 : -1;
        const auto lo = SetPartition::zero(n);
        const auto hi = SetPartition::one(n);
        const long k = static_cast<long>(n) - 1;
        const Rational catalan = Rational(binomial(2 * k, k)) / (k + 1);
        out.expect(mobius_p(lo, hi) == sign * Rational(factorial), "mu_P n=" + std::to_string(n));
        out.expect(mobius_nc(lo, hi) == sign * catalan, "mu_NC n=" + std::to_string(n));
    }
    return out;
}

SuiteResult verify_vanishing(std::size_t max_n)
{
    SuiteResult out;
    out.name = "vanishing";
    const auto poisson = ProcessModel::free_poisson(1);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const std::vector<int> ones(n, 1);
        enumerate_all(n, [&](const SetPartition& pi) {
            const auto laurent = finite_n_laurent(pi, ones, poisson);
            const auto limit = laurent.limit_at_infinity();
            if (is_noncrossing(pi)) {
                out.expect(limit && *limit == st_expectation(pi, poisson), "limit " + pi.to_string());
            } else {
                out.expect(vanishing_order_check(pi) && limit && sgn(*limit) == 0, "vanishing " + pi.to_string());
            }
        });
    }
    return out;
}

SuiteResult verify_ks_consistency()
{
    SuiteResult out;
    out.name = "ks-consistency";
    const auto q = ks_general_sequence(10, KsIndexForm::q_form);
    const auto m = ks_general_sequence(10, KsIndexForm::m_form);
    const auto c = ks_centered_sequence(10);
    const auto comp = ks_centered_sequence(10, CenteredForm::compositions);
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto id = std::to_string(n);
        out.expect(q[n] == m[n], "index forms n=" + id);
        out.expect(q[n].at_time(0) == c[n], "t=0 reduction n=" + id);
        out.expect(c[n] == comp[n], "compositions n=" + id);
    }
    const auto process = ProcessModel::free_poisson(Rational(1, 2));
    DeltaWordEvaluator evaluator(process);
    for (std::size_t a = 1; a <= 10; ++a) {
        for (std::size_t b = 0; a + b <= 10; ++b) {
            DiagonalPolynomial rhs = beta(a, b);
            for (std::size_t l = 0; l < b; ++l) {
                rhs += QtPoly::t_power(b - 1 - l) * beta(a + 1, l);
            }
            const auto id = std::to_string(a) + "," + std::to_string(b);
            out.expect(alpha(a, b) == rhs, "alpha/beta " + id);
            if (a + b <= 7) {
                const Rational want = process.cumulant_at(a) * power(process.cumulant_at(1), b);
                out.expect(expectation(beta(a, b), evaluator) == want, "phi(beta) " + id);
            }
        }
    }
    for (std::size_t n = 0; n <= kScalarFamilyCap; ++n) {
        out.expect(specialize_brownian(n) == brownian_closed_form(n), "brownian n=" + std::to_string(n));
    }
    for (std::size_t n = 0; n <= 12; ++n) {
        out.expect(poisson_charlier(n) == poisson_charlier_explicit(n), "poisson-charlier n=" + std::to_string(n));
    }
    for (std::size_t n = 0; n <= 8; ++n) {
        out.expect(poisson_charlier(n).at_time(1) == chebyshev_even_in_sqrt(n), "chebyshev n=" + std::to_string(n));
    }
    const MomentSeq generator(std::vector<Rational>(8, Rational(1)));
    for (std::size_t n = 0; n <= 8; ++n) {
        out.expect(compound_ks(n, generator) == ks_general(n), "compound n=" + std::to_string(n));
    }
    return out;
}

} // namespace freecalc
