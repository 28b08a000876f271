#include "freecalc/measures.hpp"

#include <numeric>

#include "freecalc/error.hpp"
#include "freecalc/transforms.hpp"

namespace freecalc {

namespace {

Rational block_cumulant_product(const SetPartition& p, const ProcessModel& process)
{
    Rational acc = 1;
    for (const auto& b : p.blocks()) {
        acc *= process.cumulant_at(b.size());
        if (sgn(acc) == 0) {
            break;
        }
    }
    return acc;
}

void require_noncrossing(const SetPartition& p, std::string_view op)
{
    if (!is_noncrossing(p)) {
        throw InvalidArgument(std::string(op) + " requires a noncrossing partition, got '" + p.to_string() + "'");
    }
}

// Noncrossing sigma >= pi, for any pi.
std::vector<SetPartition> noncrossing_coarsenings(const SetPartition& pi)
{
    const SetPartition top = SetPartition::one(pi.size());
    if (is_noncrossing(pi)) {
        return lattice_interval(Lattice::noncrossing, pi, top);
    }
    auto all = lattice_interval(Lattice::all, pi, top);
    std::erase_if(all, [](const SetPartition& s) { return !is_noncrossing(s); });
    return all;
}

} // namespace

Rational st_expectation(const SetPartition& pi, const ProcessModel& process)
{
    if (!is_noncrossing(pi)) {
        return 0;
    }
    return block_cumulant_product(pi, process);
}

Rational pr_expectation(const SetPartition& pi, const ProcessModel& process)
{
    Rational acc = 0;
    for (const auto& sigma : noncrossing_coarsenings(pi)) {
        acc += block_cumulant_product(sigma, process);
    }
    return acc;
}

SignedCombination pr_in_terms_of_st(const SetPartition& pi)
{
    require_noncrossing(pi, "pr_in_terms_of_st");
    SignedCombination out;
    for (auto& sigma : lattice_interval(Lattice::noncrossing, pi, SetPartition::one(pi.size()))) {
        out.emplace_back(Rational(1), std::move(sigma));
    }
    return out;
}

SignedCombination st_in_terms_of_pr(const SetPartition& pi)
{
    require_noncrossing(pi, "st_in_terms_of_pr");
    SignedCombination out;
    for (auto& [mu, sigma] : mobius_row(Lattice::noncrossing, pi, SetPartition::one(pi.size()))) {
        if (sgn(mu) != 0) {
            out.emplace_back(mu, std::move(sigma));
        }
    }
    return out;
}

bool multiplicativity_check(const SetPartition& pi, const ProcessModel& process)
{
    require_noncrossing(pi, "multiplicativity_check");
    Rational rhs = 1;
    for (const auto& b : pi.blocks()) {
        rhs *= diagonal_cumulant(1, b.size(), process);
    }
    return st_expectation(pi, process) == rhs;
}

Rational diagonal_cumulant(std::size_t n, std::size_t k, const ProcessModel& process)
{
    if (n == 0 || k == 0) {
        throw InvalidArgument("diagonal_cumulant requires n, k >= 1");
    }
    return process.cumulant_at(n * k);
}

Rational DeltaWordEvaluator::moment(std::span<const int> word)
{
    if (word.empty()) {
        return 1;
    }
    std::vector<int> key(word.begin(), word.end());
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    const std::size_t n = word.size();
    check_cap(n, kNoncrossingCap, "delta_word_moment");
    for (int k : word) {
        if (k < 1) {
            throw InvalidArgument("Delta indices must be positive");
        }
    }
    // Sum over the block S containing position 0: the gaps between
    // consecutive members of S, and the tail after the last one, are
    // independent words by the noncrossing condition.
    Rational acc = 0;
    const std::size_t rest = n - 1;
    for (unsigned long mask = 0; mask < (1UL << rest); ++mask) {
        int degree = word[0];
        Rational term = 1;
        std::size_t gap_start = 1;
        for (std::size_t i = 1; i < n; ++i) {
            if ((mask >> (i - 1)) & 1UL) {
                degree += word[i];
                if (i > gap_start) {
                    term *= moment(word.subspan(gap_start, i - gap_start));
                    if (sgn(term) == 0) {
                        break;
                    }
                }
                gap_start = i + 1;
            }
        }
        if (sgn(term) == 0) {
            continue;
        }
        if (gap_start < n) {
            term *= moment(word.subspan(gap_start));
        }
        if (sgn(term) == 0) {
            continue;
        }
        acc += process_.cumulant_at(static_cast<std::size_t>(degree)) * term;
    }
    memo_.emplace(std::move(key), acc);
    return acc;
}

Rational delta_word_moment(std::span<const int> word, const ProcessModel& process)
{
    DeltaWordEvaluator eval(process);
    return eval.moment(word);
}

LaurentInN finite_n_laurent(const SetPartition& pi, std::span<const int> k, const ProcessModel& process)
{
    const SetPartition expanded = expand(pi, k);
    LaurentInN sum;
    enumerate_noncrossing_refinements(expanded, [&](const SetPartition& sigma) {
        sum.add_term(-static_cast<int>(sigma.block_count()), block_cumulant_product(sigma, process));
    });
    return LaurentInN::falling_factorial(pi.block_count()) * sum;
}

Rational finite_n_expectation(const SetPartition& pi, std::span<const int> k, const ProcessModel& process,
                              std::size_t n)
{
    if (n == 0) {
        throw InvalidArgument("refinement parameter N must be positive");
    }
    if (n < pi.block_count()) {
        return 0;
    }
    return finite_n_laurent(pi, k, process).evaluate(Rational(static_cast<long>(n)));
}

VanishingReport vanishing_order_report(const SetPartition& pi)
{
    VanishingReport report;
    const std::vector<int> ones(pi.size(), 1);
    const LaurentInN l = finite_n_laurent(pi, ones, ProcessModel::free_poisson(1));
    report.max_exponent = l.max_exponent();
    report.crossing_number = crossing_number(pi);
    report.holds = !report.max_exponent || *report.max_exponent <= -static_cast<int>(report.crossing_number);
    return report;
}

bool vanishing_order_check(const SetPartition& pi)
{
    return vanishing_order_report(pi).holds;
}

Rational inner_singleton_vanishing(const SetPartition& pi, const ProcessModel& process)
{
    require_noncrossing(pi, "inner_singleton_vanishing");
    if (!process.is_centered() && sgn(process.expectation()) != 0) {
        throw InvalidArgument("inner_singleton_vanishing requires a centered process");
    }
    return st_expectation(pi, process);
}

BrownianProductForm brownian_product_measure(const SetPartition& pi)
{
    require_noncrossing(pi, "brownian_product_measure");
    BrownianProductForm form;
    if (has_inner_singleton(pi)) {
        form.zero = true;
        return form;
    }
    for (const auto& b : pi.blocks()) {
        if (b.size() == 1) {
            ++form.singletons;
        } else if (b.size() == 2) {
            ++form.pairs;
        } else {
            ++form.larger;
        }
    }
    return form;
}

Rational brownian_product_expectation(const BrownianProductForm& form, const Rational& t)
{
    if (form.vanishes()) {
        return 0;
    }
    const ProcessModel bm = ProcessModel::semicircular(t);
    const MomentSeq m = moments_from_cumulants(bm.cumulants(std::max<std::size_t>(form.singletons, 1)));
    return power(t, form.pairs) * m.at(form.singletons);
}

namespace {

// b > c in the height order: some two elements of b enclose an element of c.
bool above(const SetPartition& p, std::size_t b, std::size_t c)
{
    const auto& outer = p.block(b);
    const int k = p.block(c).front();
    return outer.front() < k && k < outer.back();
}

} // namespace

bool poisson_separation_predicate(const SetPartition& pi)
{
    const auto labeling = classify_blocks(pi);
    const std::size_t count = pi.block_count();
    auto covers = [&](std::size_t w, std::size_t u) {
        if (!above(pi, w, u)) {
            return false;
        }
        for (std::size_t v = 0; v < count; ++v) {
            if (v != w && v != u && above(pi, w, v) && above(pi, v, u)) {
                return false;
            }
        }
        return true;
    };
    for (std::size_t w = 0; w < count; ++w) {
        for (std::size_t u = 0; u < count; ++u) {
            if (u == w || labeling.roles[u] != BlockRole::inner || !covers(w, u)) {
                continue;
            }
            for (std::size_t v = 0; v < count; ++v) {
                if (v == w || v == u || labeling.roles[v] != BlockRole::inner || !covers(w, v)) {
                    continue;
                }
                const int u_max = pi.block(u).back();
                const int v_min = pi.block(v).front();
                if (u_max >= v_min) {
                    continue;
                }
                bool separated = false;
                for (int e : pi.block(w)) {
                    if (u_max < e && e < v_min) {
                        separated = true;
                        break;
                    }
                }
                if (!separated) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<PoissonProductForm> poisson_product_measure(const SetPartition& pi)
{
    if (!poisson_separation_predicate(pi)) {
        return std::nullopt;
    }
    const auto labeling = classify_blocks(pi);
    return PoissonProductForm{labeling.outer_count, labeling.inner_count};
}

Rational poisson_product_expectation(const PoissonProductForm& form, const Rational& t)
{
    const ProcessModel poisson = ProcessModel::free_poisson(t);
    const MomentSeq m = moments_from_cumulants(poisson.cumulants(std::max<std::size_t>(form.outer, 1)));
    return power(1 + t, form.inner) * m.at(form.outer);
}

std::vector<SetPartition> ito_expand(const SetPartition& pi)
{
    std::vector<SetPartition> out;
    const SetPartition bottom = SetPartition::zero(pi.size());
    enumerate_noncrossing(pi.size(), [&](const SetPartition& sigma) {
        if (meet(sigma, pi) == bottom) {
            out.push_back(sigma);
        }
    });
    return out;
}

Rational ito_expectation(const SetPartition& pi, const ProcessModel& process)
{
    Rational acc = 0;
    for (const auto& sigma : ito_expand(pi)) {
        acc += block_cumulant_product(sigma, process);
    }
    return acc;
}

SignedCombination ito_mobius_expand(const SetPartition& pi, Lattice lattice)
{
    SignedCombination out;
    const SetPartition bottom = SetPartition::zero(pi.size());
    if (lattice == Lattice::all || is_noncrossing(pi)) {
        for (auto& [mu, sigma] : mobius_row(lattice, bottom, pi)) {
            if (sgn(mu) != 0) {
                out.emplace_back(mu, std::move(sigma));
            }
        }
        return out;
    }
    enumerate_noncrossing_refinements(pi, [&](const SetPartition& sigma) {
        Rational mu = mobius_nc(bottom, sigma);
        if (sgn(mu) != 0) {
            out.emplace_back(std::move(mu), sigma);
        }
    });
    return out;
}

SignedCombination ito_mobius_expand(const SetPartition& pi)
{
    return ito_mobius_expand(pi, is_noncrossing(pi) ? Lattice::noncrossing : Lattice::all);
}

SandwichLimit sandwich_limit(std::span<const int> powers, std::span<const Rational> z_expectations,
                             const ProcessModel& process)
{
    if (powers.size() != z_expectations.size() + 1) {
        throw InvalidArgument("sandwich_limit needs one more power than sandwiched elements");
    }
    SandwichLimit out{Rational(1), 0, Rational(0)};
    for (int m : powers) {
        if (m < 1) {
            throw InvalidArgument("sandwich powers must be positive");
        }
        out.diagonal_index += static_cast<std::size_t>(m);
    }
    for (const auto& z : z_expectations) {
        out.coefficient *= z;
    }
    out.expectation = sgn(out.coefficient) == 0 ? Rational(0) : out.coefficient * process.cumulant_at(out.diagonal_index);
    return out;
}

} // namespace freecalc
