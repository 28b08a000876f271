#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "freecalc/rational.hpp"
#include "freecalc/transforms.hpp"

namespace freecalc {

enum class ProcessKind { semicircular, free_poisson, compound_poisson, custom };

// A stationary process with free increments, observed on a set of size t.
// Its law is fixed by the per-unit-time free cumulants; cumulants at time t
// are t times those.
class ProcessModel {
public:
    static ProcessModel semicircular(const Rational& t);
    static ProcessModel free_poisson(const Rational& t);
    // Cumulants t * m_n(generator).
    static ProcessModel compound_poisson(MomentSeq generator, const Rational& t);
    static ProcessModel custom(CumulantSeq base, const Rational& t);

    // Same process with the first cumulant removed.
    ProcessModel centered() const;

    ProcessKind kind() const noexcept { return kind_; }
    const Rational& time() const noexcept { return t_; }
    bool is_centered() const noexcept { return centered_; }
    const MomentSeq& generator() const noexcept { return generator_; }
    const CumulantSeq& base() const noexcept { return base_; }

    // Highest cumulant index available, or nullopt when unbounded.
    std::optional<std::size_t> cumulant_order() const;
    Rational cumulant_at(std::size_t n) const;
    CumulantSeq cumulants(std::size_t order) const;
    Rational expectation() const { return cumulant_at(1); }

    // "semicircular", "free-poisson", "compound-poisson" or "custom", with a
    // "centered-" prefix when centered.
    std::string name() const;

private:
    ProcessModel(ProcessKind kind, const Rational& t);

    ProcessKind kind_;
    Rational t_;
    bool centered_ = false;
    MomentSeq generator_;
    CumulantSeq base_;
};

// Finite Laurent polynomial in the refinement parameter N.
class LaurentInN {
public:
    LaurentInN() = default;
    static LaurentInN monomial(const Rational& c, int exponent);
    // N (N - 1) ... (N - m + 1).
    static LaurentInN falling_factorial(std::size_t m);

    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::optional<int> max_exponent() const;
    Rational coefficient(int exponent) const;

    // Constant term when no positive exponent survives; nullopt means divergent.
    std::optional<Rational> limit_at_infinity() const;
    Rational evaluate(const Rational& n) const;

    LaurentInN& operator+=(const LaurentInN& other);
    friend LaurentInN operator+(LaurentInN a, const LaurentInN& b) { return a += b; }
    friend LaurentInN operator*(const LaurentInN& a, const LaurentInN& b);
    friend bool operator==(const LaurentInN&, const LaurentInN&) = default;

    void add_term(int exponent, const Rational& c);

private:
    std::map<int, Rational> terms_;
};

} // namespace freecalc
