#include "freecalc/process.hpp"

#include "freecalc/error.hpp"

namespace freecalc {

namespace {

void require_nonnegative(const Rational& t)
{
    if (sgn(t) < 0) {
        throw InvalidArgument("process time must be non-negative, got " + to_string(t));
    }
}

} // namespace

ProcessModel::ProcessModel(ProcessKind kind, const Rational& t) : kind_(kind), t_(t)
{
    require_nonnegative(t);
}

ProcessModel ProcessModel::semicircular(const Rational& t)
{
    return ProcessModel(ProcessKind::semicircular, t);
}

ProcessModel ProcessModel::free_poisson(const Rational& t)
{
    return ProcessModel(ProcessKind::free_poisson, t);
}

ProcessModel ProcessModel::compound_poisson(MomentSeq generator, const Rational& t)
{
    ProcessModel p(ProcessKind::compound_poisson, t);
    p.generator_ = std::move(generator);
    return p;
}

ProcessModel ProcessModel::custom(CumulantSeq base, const Rational& t)
{
    ProcessModel p(ProcessKind::custom, t);
    p.base_ = std::move(base);
    return p;
}

ProcessModel ProcessModel::centered() const
{
    ProcessModel p = *this;
    p.centered_ = true;
    return p;
}

std::optional<std::size_t> ProcessModel::cumulant_order() const
{
    switch (kind_) {
    case ProcessKind::compound_poisson:
        return generator_.order();
    case ProcessKind::custom:
        return base_.order();
    default:
        return std::nullopt;
    }
}

Rational ProcessModel::cumulant_at(std::size_t n) const
{
    if (n == 0) {
        throw InvalidArgument("cumulants are indexed from 1");
    }
    if (n == 1 && centered_) {
        return 0;
    }
    if (auto order = cumulant_order(); order && n > *order) {
        throw InvalidArgument("cumulant " + std::to_string(n) + " unavailable: " + name() + " is truncated at order " +
                              std::to_string(*order));
    }
    switch (kind_) {
    case ProcessKind::semicircular:
        return n == 2 ? t_ : Rational(0);
    case ProcessKind::free_poisson:
        return t_;
    case ProcessKind::compound_poisson:
        return t_ * generator_.at(n);
    case ProcessKind::custom:
        return t_ * base_.at(n);
    }
    return 0;
}

CumulantSeq ProcessModel::cumulants(std::size_t order) const
{
    std::vector<Rational> v;
    v.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        v.push_back(cumulant_at(n));
    }
    return CumulantSeq(std::move(v));
}

std::string ProcessModel::name() const
{
    std::string base;
    switch (kind_) {
    case ProcessKind::semicircular:
        base = "semicircular";
        break;
    case ProcessKind::free_poisson:
        base = "free-poisson";
        break;
    case ProcessKind::compound_poisson:
        base = "compound-poisson";
        break;
    case ProcessKind::custom:
        base = "custom";
        break;
    }
    return centered_ ? "centered-" + base : base;
}

LaurentInN LaurentInN::monomial(const Rational& c, int exponent)
{
    LaurentInN l;
    l.add_term(exponent, c);
    return l;
}

LaurentInN LaurentInN::falling_factorial(std::size_t m)
{
    LaurentInN acc = monomial(1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        LaurentInN factor = monomial(1, 1);
        factor.add_term(0, -Rational(static_cast<long>(i)));
        acc = acc * factor;
    }
    return acc;
}

void LaurentInN::add_term(int exponent, const Rational& c)
{
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

std::optional<int> LaurentInN::max_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

Rational LaurentInN::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> LaurentInN::limit_at_infinity() const
{
    if (auto top = max_exponent(); top && *top > 0) {
        return std::nullopt;
    }
    return coefficient(0);
}

Rational LaurentInN::evaluate(const Rational& n) const
{
    if (sgn(n) == 0 && !terms_.empty() && terms_.begin()->first < 0) {
        throw InvalidArgument("Laurent polynomial with negative exponents evaluated at N = 0");
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        acc += c * (e >= 0 ? power(n, static_cast<unsigned long>(e)) : 1 / power(n, static_cast<unsigned long>(-e)));
    }
    return acc;
}

LaurentInN& LaurentInN::operator+=(const LaurentInN& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentInN operator*(const LaurentInN& a, const LaurentInN& b)
{
    LaurentInN out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

} // namespace freecalc
