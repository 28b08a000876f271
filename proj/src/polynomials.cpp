#include "freecalc/polynomials.hpp"

#include <sstream>

#include "freecalc/error.hpp"

namespace freecalc {

DiagonalPolynomial DiagonalPolynomial::constant(const QtPoly& c)
{
    DiagonalPolynomial p;
    p.add_term({}, c);
    return p;
}

DiagonalPolynomial DiagonalPolynomial::delta(int k)
{
    if (k < 0) {
        throw InvalidArgument("Delta index must be non-negative");
    }
    DiagonalPolynomial p;
    p.add_term(k == 0 ? DeltaWord{} : DeltaWord{k}, QtPoly(1));
    return p;
}

QtPoly DiagonalPolynomial::coefficient(const DeltaWord& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? QtPoly() : it->second;
}

int DiagonalPolynomial::degree() const
{
    int best = terms_.empty() ? -1 : 0;
    for (const auto& [w, c] : terms_) {
        int d = 0;
        for (int k : w) {
            d += k;
        }
        best = std::max(best, d);
    }
    return best;
}

void DiagonalPolynomial::add_term(const DeltaWord& w, const QtPoly& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

DiagonalPolynomial& DiagonalPolynomial::operator+=(const DiagonalPolynomial& o)
{
    for (const auto& [w, c] : o.terms_) {
        add_term(w, c);
    }
    return *this;
}

DiagonalPolynomial& DiagonalPolynomial::operator-=(const DiagonalPolynomial& o)
{
    for (const auto& [w, c] : o.terms_) {
        add_term(w, -c);
    }
    return *this;
}

DiagonalPolynomial operator*(const DiagonalPolynomial& a, const DiagonalPolynomial& b)
{
    DiagonalPolynomial out;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            DeltaWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

DiagonalPolynomial operator*(const QtPoly& c, const DiagonalPolynomial& p)
{
    DiagonalPolynomial out;
    for (const auto& [w, cw] : p.terms_) {
        out.add_term(w, c * cw);
    }
    return out;
}

DiagonalPolynomial DiagonalPolynomial::at_time(const Rational& t) const
{
    DiagonalPolynomial out;
    for (const auto& [w, c] : terms_) {
        out.add_term(w, QtPoly(c.evaluate(t)));
    }
    return out;
}

namespace {

// Coefficient rendering shared by both polynomial kinds: returns the sign and
// the magnitude text ("" for a unit coefficient).
std::pair<bool, std::string> split_coefficient(const QtPoly& c)
{
    if (c.degree() == 0) {
        const Rational& v = c.coefficients()[0];
        const bool negative = sgn(v) < 0;
        const Rational mag = abs(v);
        return {negative, mag == 1 ? "" : to_string(mag)};
    }
    const auto& coeffs = c.coefficients();
    std::size_t nonzero = 0;
    for (const auto& x : coeffs) {
        nonzero += sgn(x) != 0 ? 1 : 0;
    }
    if (nonzero == 1 && sgn(coeffs.back()) < 0) {
        return {true, (-c).to_string()};
    }
    if (nonzero == 1) {
        return {false, c.to_string()};
    }
    return {false, "(" + c.to_string() + ")"};
}

void append_term(std::ostringstream& out, bool& first, const QtPoly& c, const std::string& monomial)
{
    auto [negative, mag] = split_coefficient(c);
    if (first) {
        out << (negative ? "-" : "");
    } else {
        out << (negative ? " - " : " + ");
    }
    first = false;
    if (monomial.empty()) {
        out << (mag.empty() ? "1" : mag);
    } else if (mag.empty()) {
        out << monomial;
    } else {
        out << mag << ' ' << monomial;
    }
}

} // namespace

std::string DiagonalPolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < w.size(); ++i) {
            mono += (i > 0 ? " D" : "D") + std::to_string(w[i]);
        }
        append_term(out, first, c, mono);
    }
    return out.str();
}

ScalarPolynomial::ScalarPolynomial(std::vector<QtPoly> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void ScalarPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

ScalarPolynomial ScalarPolynomial::constant(const QtPoly& c)
{
    return ScalarPolynomial(std::vector<QtPoly>{c});
}

ScalarPolynomial ScalarPolynomial::x_power(std::size_t k, const QtPoly& c)
{
    std::vector<QtPoly> v(k + 1);
    v[k] = c;
    return ScalarPolynomial(std::move(v));
}

ScalarPolynomial& ScalarPolynomial::operator+=(const ScalarPolynomial& o)
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

ScalarPolynomial& ScalarPolynomial::operator-=(const ScalarPolynomial& o)
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

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<QtPoly> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return ScalarPolynomial(std::move(v));
}

ScalarPolynomial operator*(const QtPoly& c, const ScalarPolynomial& p)
{
    std::vector<QtPoly> v = p.coeffs_;
    for (auto& x : v) {
        x = c * x;
    }
    return ScalarPolynomial(std::move(v));
}

ScalarPolynomial ScalarPolynomial::at_time(const Rational& t) const
{
    std::vector<QtPoly> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        v.emplace_back(c.evaluate(t));
    }
    return ScalarPolynomial(std::move(v));
}

ScalarPolynomial ScalarPolynomial::compose(const ScalarPolynomial& inner) const
{
    ScalarPolynomial acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * inner + constant(coeffs_[k]);
    }
    return acc;
}

std::string ScalarPolynomial::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        std::string mono = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
        append_term(out, first, coeffs_[k], mono);
    }
    return out.str();
}

ScalarPolynomial reduce_commutative(const DiagonalPolynomial& p, const std::function<ScalarPolynomial(int)>& image)
{
    ScalarPolynomial acc;
    std::map<int, ScalarPolynomial> cache;
    for (const auto& [w, c] : p.terms()) {
        ScalarPolynomial term = ScalarPolynomial::constant(c);
        for (int k : w) {
            auto it = cache.find(k);
            if (it == cache.end()) {
                it = cache.emplace(k, image(k)).first;
            }
            term = term * it->second;
        }
        acc += term;
    }
    return acc;
}

std::vector<DiagonalPolynomial> ks_general_sequence(std::size_t n, KsIndexForm form)
{
    check_cap(n, kKailathSegallCap, "ks_general");
    std::vector<DiagonalPolynomial> psi;
    psi.push_back(DiagonalPolynomial::one());
    const long nn = static_cast<long>(n);
    for (long k = 1; k <= nn; ++k) {
        DiagonalPolynomial next = DiagonalPolynomial::delta(1) * psi[static_cast<std::size_t>(k - 1)];
        for (long j = 2; j <= k; ++j) {
            const Rational sign = (j % 2 == 0) ? -1 : 1; // (-1)^(j-1)
            const DiagonalPolynomial dj = DiagonalPolynomial::delta(static_cast<int>(j));
            for (long s = 0; s <= k - j; ++s) {
                long q;
                Rational binom;
                std::size_t t_exp;
                if (form == KsIndexForm::q_form) {
                    q = s;
                    binom = Rational(binomial(k - q - 2, j - 2));
                    t_exp = static_cast<std::size_t>(k - j - q);
                } else {
                    const long m = s;
                    q = k - j - m;
                    binom = Rational(binomial(m + j - 2, j - 2));
                    t_exp = static_cast<std::size_t>(m);
                }
                if (sgn(binom) == 0) {
                    continue;
                }
                next += QtPoly::t_power(t_exp, sign * binom) * (dj * psi[static_cast<std::size_t>(q)]);
            }
        }
        psi.push_back(std::move(next));
    }
    return psi;
}

DiagonalPolynomial ks_general(std::size_t n, KsIndexForm form)
{
    return ks_general_sequence(n, form).back();
}

namespace {

void compositions(int remaining, DeltaWord& current, const std::function<void(const DeltaWord&)>& visit)
{
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (int j = 1; j <= remaining; ++j) {
        current.push_back(j);
        compositions(remaining - j, current, visit);
        current.pop_back();
    }
}

} // namespace

std::vector<DiagonalPolynomial> ks_centered_sequence(std::size_t n, CenteredForm form)
{
    check_cap(n, kKailathSegallCap, "ks_centered");
    std::vector<DiagonalPolynomial> psi;
    psi.push_back(DiagonalPolynomial::one());
    for (std::size_t k = 1; k <= n; ++k) {
        DiagonalPolynomial next;
        if (form == CenteredForm::recursive) {
            for (std::size_t j = 1; j <= k; ++j) {
                const QtPoly sign(j % 2 == 1 ? 1 : -1);
                next += sign * (DiagonalPolynomial::delta(static_cast<int>(j)) * psi[k - j]);
            }
        } else {
            DeltaWord current;
            compositions(static_cast<int>(k), current, [&](const DeltaWord& w) {
                const bool positive = (k - w.size()) % 2 == 0;
                next.add_term(w, QtPoly(positive ? 1 : -1));
            });
        }
        psi.push_back(std::move(next));
    }
    return psi;
}

DiagonalPolynomial ks_centered(std::size_t n, CenteredForm form)
{
    return ks_centered_sequence(n, form).back();
}

DiagonalPolynomial alpha(std::size_t n, std::size_t m)
{
    check_cap(n + m, kKailathSegallCap, "alpha");
    return DiagonalPolynomial::delta(static_cast<int>(n)) * ks_general(m);
}

namespace {

DiagonalPolynomial beta_memo(std::size_t n, std::size_t m, std::map<std::pair<std::size_t, std::size_t>, DiagonalPolynomial>& memo)
{
    if (n == 0) {
        return m == 0 ? DiagonalPolynomial::one() : beta_memo(1, m - 1, memo);
    }
    if (m == 0) {
        return DiagonalPolynomial::delta(static_cast<int>(n));
    }
    const auto key = std::make_pair(n, m);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    DiagonalPolynomial out = alpha(n, m);
    for (std::size_t l = 0; l < m; ++l) {
        out -= QtPoly::t_power(m - 1 - l) * beta_memo(n + 1, l, memo);
    }
    memo.emplace(key, out);
    return out;
}

} // namespace

DiagonalPolynomial beta(std::size_t n, std::size_t m)
{
    check_cap(n + m, kKailathSegallCap, "beta");
    std::map<std::pair<std::size_t, std::size_t>, DiagonalPolynomial> memo;
    return beta_memo(n, m, memo);
}

namespace {

const ScalarPolynomial& x_poly()
{
    static const ScalarPolynomial x = ScalarPolynomial::x_power(1);
    return x;
}

QtPoly t_poly()
{
    return QtPoly::t_power(1);
}

} // namespace

ScalarPolynomial specialize_brownian(std::size_t n)
{
    check_cap(n, kScalarFamilyCap, "specialize_brownian");
    // Uses the recursive centered form, which is cheap for large n; the
    // Kailath-Segall word expansion is checked against it in the tests.
    if (n <= kKailathSegallCap) {
        return reduce_commutative(ks_centered(n), [](int k) {
            if (k == 1) {
                return x_poly();
            }
            if (k == 2) {
                return ScalarPolynomial::constant(t_poly());
            }
            return ScalarPolynomial();
        });
    }
    // Beyond the word-algebra cap, apply the same substitution to the
    // centered recursion psi_n = sum_j (-1)^(j-1) Delta_j psi_{n-j}.
    std::vector<ScalarPolynomial> psi{ScalarPolynomial::constant(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        ScalarPolynomial next = x_poly() * psi[k - 1];
        if (k >= 2) {
            next -= t_poly() * psi[k - 2];
        }
        psi.push_back(std::move(next));
    }
    return psi[n];
}

ScalarPolynomial brownian_recursion(std::size_t n)
{
    check_cap(n, kScalarFamilyCap, "brownian_recursion");
    ScalarPolynomial prev = ScalarPolynomial::constant(1);
    if (n == 0) {
        return prev;
    }
    ScalarPolynomial cur = x_poly();
    for (std::size_t k = 2; k <= n; ++k) {
        ScalarPolynomial next = x_poly() * cur - t_poly() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ScalarPolynomial brownian_closed_form(std::size_t n)
{
    check_cap(n, kScalarFamilyCap, "brownian_closed_form");
    ScalarPolynomial acc;
    for (std::size_t j = 0; 2 * j <= n; ++j) {
        const Rational c = Rational(binomial(static_cast<long>(n - j), static_cast<long>(j))) * (j % 2 == 0 ? 1 : -1);
        acc += ScalarPolynomial::x_power(n - 2 * j, QtPoly::t_power(j, c));
    }
    return acc;
}

ScalarPolynomial specialize_poisson(std::size_t n)
{
    check_cap(n, kScalarFamilyCap, "specialize_poisson");
    ScalarPolynomial prev = ScalarPolynomial::constant(1);
    if (n == 0) {
        return prev;
    }
    ScalarPolynomial cur = x_poly();
    const ScalarPolynomial one_minus_t = ScalarPolynomial::constant(QtPoly(1) - t_poly());
    for (std::size_t k = 1; k < n; ++k) {
        ScalarPolynomial next = x_poly() * cur - one_minus_t * cur - t_poly() * (x_poly() * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ScalarPolynomial poisson_by_substitution(std::size_t n)
{
    return reduce_commutative(ks_general(n), [](int) { return x_poly(); });
}

ScalarPolynomial poisson_charlier(std::size_t n)
{
    check_cap(n, kScalarFamilyCap, "poisson_charlier");
    const ScalarPolynomial x_minus_t = x_poly() - ScalarPolynomial::constant(t_poly());
    ScalarPolynomial prev = ScalarPolynomial::constant(1);
    if (n == 0) {
        return prev;
    }
    ScalarPolynomial cur = x_minus_t;
    const QtPoly one_plus_t = QtPoly(1) + t_poly();
    for (std::size_t k = 1; k < n; ++k) {
        ScalarPolynomial next = x_poly() * cur - one_plus_t * cur - t_poly() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ScalarPolynomial poisson_charlier_explicit(std::size_t n)
{
    check_cap(n, kScalarFamilyCap, "poisson_charlier_explicit");
    const ScalarPolynomial x_minus_t = x_poly() - ScalarPolynomial::constant(t_poly());
    std::vector<ScalarPolynomial> shifted{ScalarPolynomial::constant(1)};
    for (std::size_t i = 1; i <= n; ++i) {
        shifted.push_back(shifted.back() * x_minus_t);
    }
    ScalarPolynomial acc = shifted[n];
    const long nn = static_cast<long>(n);
    for (long i = 0; i + 2 <= nn; ++i) {
        ScalarPolynomial inner;
        for (long k = 1; k <= (nn - i) / 2; ++k) {
            // C(i + k, i) places the i factors (X - t) among the k parts of size >= 2.
            const Rational c = Rational(binomial(nn - i - k - 1, k - 1) * binomial(i + k, i)) *
                               ((nn - k - i) % 2 == 0 ? 1 : -1);
            inner += ScalarPolynomial::x_power(static_cast<std::size_t>(k), QtPoly(c));
        }
        acc += shifted[static_cast<std::size_t>(i)] * inner;
    }
    return acc;
}

ScalarPolynomial poisson_charlier_by_substitution(std::size_t n)
{
    const ScalarPolynomial x_minus_t = x_poly() - ScalarPolynomial::constant(t_poly());
    return reduce_commutative(ks_centered(n), [&](int k) { return k == 1 ? x_minus_t : x_poly(); });
}

ScalarPolynomial chebyshev_second_kind(std::size_t n)
{
    check_cap(n, 2 * kScalarFamilyCap, "chebyshev_second_kind");
    ScalarPolynomial prev = ScalarPolynomial::constant(1);
    if (n == 0) {
        return prev;
    }
    ScalarPolynomial cur = x_poly();
    for (std::size_t k = 1; k < n; ++k) {
        ScalarPolynomial next = x_poly() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ScalarPolynomial chebyshev_even_in_sqrt(std::size_t n)
{
    const ScalarPolynomial even = chebyshev_second_kind(2 * n);
    std::vector<QtPoly> v(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        v[j] = even[2 * j];
        if (2 * j + 1 <= 2 * n && !even[2 * j + 1].is_zero()) {
            throw Error("odd power in an even Chebyshev polynomial");
        }
    }
    return ScalarPolynomial(std::move(v));
}

DiagonalPolynomial compound_ks(std::size_t n, const MomentSeq& generator)
{
    check_cap(n, kCompoundCap, "compound_ks");
    if (generator.order() < n) {
        throw InvalidArgument("compound_ks: generator truncated at order " + std::to_string(generator.order()) +
                              " < " + std::to_string(n));
    }
    std::vector<DiagonalPolynomial> psi{DiagonalPolynomial::one()};
    for (std::size_t k = 1; k <= n; ++k) {
        DiagonalPolynomial next = DiagonalPolynomial::delta(1) * psi[k - 1];
        for (std::size_t q = 0; q + 2 <= k; ++q) {
            const std::size_t m = k - q - 2;
            // s (t - e)^m e^2 s = sum_j C(m, j) t^(m-j) (-1)^j s e^(j+2) s.
            DiagonalPolynomial sandwich;
            for (std::size_t j = 0; j <= m; ++j) {
                const Rational c = Rational(binomial(static_cast<long>(m), static_cast<long>(j))) * (j % 2 == 0 ? 1 : -1);
                sandwich += QtPoly::t_power(m - j, c) * DiagonalPolynomial::delta(static_cast<int>(j + 2));
            }
            next -= sandwich * psi[q];
        }
        psi.push_back(std::move(next));
    }
    return psi[n];
}

Rational expectation(const DiagonalPolynomial& p, DeltaWordEvaluator& evaluator)
{
    const Rational t = evaluator.process().expectation();
    Rational acc = 0;
    for (const auto& [w, c] : p.terms()) {
        const Rational coeff = c.evaluate(t);
        if (sgn(coeff) != 0) {
            acc += coeff * evaluator.moment(w);
        }
    }
    return acc;
}

namespace {

Rational pair_expectation(const DiagonalPolynomial& p, const DiagonalPolynomial& q, DeltaWordEvaluator& evaluator)
{
    const Rational t = evaluator.process().expectation();
    Rational acc = 0;
    for (const auto& [wp, cp] : p.terms()) {
        const Rational a = cp.evaluate(t);
        if (sgn(a) == 0) {
            continue;
        }
        for (const auto& [wq, cq] : q.terms()) {
            const Rational b = cq.evaluate(t);
            if (sgn(b) == 0) {
                continue;
            }
            DeltaWord w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            acc += a * b * evaluator.moment(w);
        }
    }
    return acc;
}

} // namespace

Rational inner_product(const DiagonalPolynomial& p, const DiagonalPolynomial& q, const ProcessModel& process)
{
    DeltaWordEvaluator evaluator(process);
    return pair_expectation(p, q, evaluator);
}

std::vector<std::vector<Rational>> orthogonality_gram(std::size_t max_n, const ProcessModel& process)
{
    const auto psi = ks_general_sequence(max_n);
    DeltaWordEvaluator evaluator(process);
    std::vector<std::vector<Rational>> gram(max_n + 1, std::vector<Rational>(max_n + 1));
    for (std::size_t n = 0; n <= max_n; ++n) {
        for (std::size_t m = 0; m <= max_n; ++m) {
            gram[n][m] = pair_expectation(psi[n], psi[m], evaluator);
        }
    }
    return gram;
}

} // namespace freecalc
