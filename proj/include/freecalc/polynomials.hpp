#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "freecalc/measures.hpp"
#include "freecalc/process.hpp"
#include "freecalc/qt_poly.hpp"
#include "freecalc/transforms.hpp"

namespace freecalc {

// (k_1, ..., k_m) stands for Delta_{k_1} ... Delta_{k_m}; the empty word is 1.
using DeltaWord = std::vector<int>;

// Noncommutative polynomial in the diagonal measures Delta_1, Delta_2, ...
// with coefficients in Q[t]. Multiplication concatenates words.
class DiagonalPolynomial {
public:
    DiagonalPolynomial() = default;

    static DiagonalPolynomial constant(const QtPoly& c);
    static DiagonalPolynomial one() { return constant(QtPoly(1)); }
    // Delta_k; Delta_0 is the unit.
    static DiagonalPolynomial delta(int k);

    const std::map<DeltaWord, QtPoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QtPoly coefficient(const DeltaWord& w) const;
    // Largest sum of indices over the words present.
    int degree() const;

    void add_term(const DeltaWord& w, const QtPoly& c);

    DiagonalPolynomial& operator+=(const DiagonalPolynomial& o);
    DiagonalPolynomial& operator-=(const DiagonalPolynomial& o);
    friend DiagonalPolynomial operator+(DiagonalPolynomial a, const DiagonalPolynomial& b) { return a += b; }
    friend DiagonalPolynomial operator-(DiagonalPolynomial a, const DiagonalPolynomial& b) { return a -= b; }
    friend DiagonalPolynomial operator*(const DiagonalPolynomial& a, const DiagonalPolynomial& b);
    friend DiagonalPolynomial operator*(const QtPoly& c, const DiagonalPolynomial& p);
    friend bool operator==(const DiagonalPolynomial&, const DiagonalPolynomial&) = default;

    // Substitutes a value for t.
    DiagonalPolynomial at_time(const Rational& t) const;

    // e.g. "D1 D1 - D2 - t D2", with words in lexicographic order.
    std::string to_string() const;

private:
    std::map<DeltaWord, QtPoly> terms_;
};

// Commutative polynomial in one symbol X with coefficients in Q[t].
class ScalarPolynomial {
public:
    ScalarPolynomial() = default;
    explicit ScalarPolynomial(std::vector<QtPoly> coefficients);

    static ScalarPolynomial constant(const QtPoly& c);
    static ScalarPolynomial x_power(std::size_t k, const QtPoly& c = QtPoly(1));

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    QtPoly operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : QtPoly(); }
    const std::vector<QtPoly>& coefficients() const noexcept { return coeffs_; }

    ScalarPolynomial& operator+=(const ScalarPolynomial& o);
    ScalarPolynomial& operator-=(const ScalarPolynomial& o);
    friend ScalarPolynomial operator+(ScalarPolynomial a, const ScalarPolynomial& b) { return a += b; }
    friend ScalarPolynomial operator-(ScalarPolynomial a, const ScalarPolynomial& b) { return a -= b; }
    friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);
    friend ScalarPolynomial operator*(const QtPoly& c, const ScalarPolynomial& p);
    friend bool operator==(const ScalarPolynomial&, const ScalarPolynomial&) = default;

    ScalarPolynomial at_time(const Rational& t) const;
    // p(X) -> p(q(X)).
    ScalarPolynomial compose(const ScalarPolynomial& inner) const;

    // e.g. "X^2 - (2*t + 1) X + t^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<QtPoly> coeffs_;
};

// Commutative quotient: replaces every Delta_k by image(k) and multiplies out.
ScalarPolynomial reduce_commutative(const DiagonalPolynomial& p, const std::function<ScalarPolynomial(int)>& image);

inline constexpr std::size_t kKailathSegallCap = 12;
inline constexpr std::size_t kScalarFamilyCap = 20;
inline constexpr std::size_t kCompoundCap = 10;

enum class KsIndexForm { q_form, m_form };

// psi_0..psi_n from the free Kailath-Segall recursion in the chosen index form.
std::vector<DiagonalPolynomial> ks_general_sequence(std::size_t n, KsIndexForm form = KsIndexForm::q_form);
DiagonalPolynomial ks_general(std::size_t n, KsIndexForm form = KsIndexForm::q_form);

enum class CenteredForm { recursive, compositions };

// Centered process: psi_n = sum_j (-1)^(j-1) Delta_j psi_{n-j}, or the sum
// over compositions of n.
std::vector<DiagonalPolynomial> ks_centered_sequence(std::size_t n, CenteredForm form = CenteredForm::recursive);
DiagonalPolynomial ks_centered(std::size_t n, CenteredForm form = CenteredForm::recursive);

// alpha(n, m) = Delta_n psi_m.
DiagonalPolynomial alpha(std::size_t n, std::size_t m);
// beta(n, m) = St_{1_n + 0_m} from alpha(n, m) = beta(n, m) + sum_l t^(m-1-l) beta(n+1, l),
// beta(n, 0) = Delta_n and beta(0, m) = beta(1, m - 1).
DiagonalPolynomial beta(std::size_t n, std::size_t m);

// Free Brownian motion: Delta_1 -> X, Delta_2 -> t, higher -> 0, applied to ks_centered.
ScalarPolynomial specialize_brownian(std::size_t n);
ScalarPolynomial brownian_recursion(std::size_t n);   // psi_n = X psi_{n-1} - t psi_{n-2}
ScalarPolynomial brownian_closed_form(std::size_t n); // sum_j (-1)^j C(n-j, j) t^j X^(n-2j)

// Free Poisson process: X psi_n = psi_{n+1} + (1 - t) psi_n + t X psi_{n-1}.
ScalarPolynomial specialize_poisson(std::size_t n);
// ks_general with every Delta_j -> X.
ScalarPolynomial poisson_by_substitution(std::size_t n);

// Free Poisson-Charlier: X psi_n = psi_{n+1} + (1 + t) psi_n + t psi_{n-1}, psi_1 = X - t.
ScalarPolynomial poisson_charlier(std::size_t n);
// (X - t)^n + sum_i (X - t)^i sum_k C(i + k, i) C(n - i - k - 1, k - 1) (-1)^(n - k - i) X^k.
ScalarPolynomial poisson_charlier_explicit(std::size_t n);
// ks_centered with Delta_1 -> X - t, Delta_j -> X (j >= 2).
ScalarPolynomial poisson_charlier_by_substitution(std::size_t n);

// Monic Chebyshev polynomials of the second kind: x T_n = T_{n+1} + T_{n-1}.
ScalarPolynomial chebyshev_second_kind(std::size_t n);
// T_{2n}(sqrt x).
ScalarPolynomial chebyshev_even_in_sqrt(std::size_t n);

// psi_n = X psi_{n-1} - sum_q s (t - e)^(n-q-2) e^2 s psi_q with s e^k s = Delta_k.
DiagonalPolynomial compound_ks(std::size_t n, const MomentSeq& generator);

// phi(p q) with t := phi(X) of the process.
Rational inner_product(const DiagonalPolynomial& p, const DiagonalPolynomial& q, const ProcessModel& process);
Rational expectation(const DiagonalPolynomial& p, DeltaWordEvaluator& evaluator);

// G[n][m] = phi(psi_n psi_m) for n, m in 0..max_n using the centered recursion.
std::vector<std::vector<Rational>> orthogonality_gram(std::size_t max_n, const ProcessModel& process);

} // namespace freecalc
