#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "freecalc/lattice.hpp"
#include "freecalc/partition.hpp"
#include "freecalc/process.hpp"
#include "freecalc/rational.hpp"

namespace freecalc {

// A formal linear combination of partition-indexed measures.
using SignedCombination = std::vector<std::pair<Rational, SetPartition>>;

// phi(St_pi): R_pi(X) for noncrossing pi, 0 for crossing pi.
Rational st_expectation(const SetPartition& pi, const ProcessModel& process);

// phi(Pr_pi) = sum of phi(St_sigma) over sigma >= pi. Crossing sigma
// contribute nothing, so only noncrossing sigma are visited.
Rational pr_expectation(const SetPartition& pi, const ProcessModel& process);

// Pr_pi = sum_{sigma in NC, sigma >= pi} St_sigma. Requires pi noncrossing.
SignedCombination pr_in_terms_of_st(const SetPartition& pi);
// St_pi = sum_{sigma in NC, sigma >= pi} mu_NC(pi, sigma) Pr_sigma.
SignedCombination st_in_terms_of_pr(const SetPartition& pi);

// phi(St_pi) == prod_B phi(Delta_|B|); requires pi noncrossing.
bool multiplicativity_check(const SetPartition& pi, const ProcessModel& process);

// r_n(Delta_k) = r_{nk}(X).
Rational diagonal_cumulant(std::size_t n, std::size_t k, const ProcessModel& process);

// phi(Delta_{k_1} ... Delta_{k_n}) = sum_{pi in NC(n)} prod_B r_{sum_{j in B} k_j}(X).
Rational delta_word_moment(std::span<const int> word, const ProcessModel& process);

// Evaluates Delta-words against one process, memoizing every contiguous
// sub-word. Not thread-safe; use one evaluator per thread.
class DeltaWordEvaluator {
public:
    explicit DeltaWordEvaluator(ProcessModel process) : process_(std::move(process)) {}

    const ProcessModel& process() const noexcept { return process_; }
    Rational moment(std::span<const int> word);

private:
    ProcessModel process_;
    std::map<std::vector<int>, Rational> memo_;
};

// phi of the pi-diagonal sum at refinement N, with point i of pi raised to
// the power k_i:
//   (N)_{|pi|} * sum_{sigma in NC, sigma <= expand(pi, k)} N^{-|sigma|} R_sigma(X).
LaurentInN finite_n_laurent(const SetPartition& pi, std::span<const int> k, const ProcessModel& process);
// Zero when N < |pi| (empty index set).
Rational finite_n_expectation(const SetPartition& pi, std::span<const int> k, const ProcessModel& process,
                              std::size_t n);

struct VanishingReport {
    std::optional<int> max_exponent; // nullopt when the Laurent form is 0
    std::size_t crossing_number = 0;
    bool holds = false;
};

// Top exponent of the free Poisson (t = 1) finite-N expansion is <= -c(pi).
VanishingReport vanishing_order_report(const SetPartition& pi);
bool vanishing_order_check(const SetPartition& pi);

// phi(St_pi) for a centered process; requires pi noncrossing.
Rational inner_singleton_vanishing(const SetPartition& pi, const ProcessModel& process);

// Pr_pi for free Brownian motion: X^singletons |A|^pairs 0^larger, or zero
// outright when pi has an inner singleton.
struct BrownianProductForm {
    bool zero = false;
    std::size_t singletons = 0;
    std::size_t pairs = 0;
    std::size_t larger = 0;
    bool vanishes() const noexcept { return zero || larger > 0; }
};
BrownianProductForm brownian_product_measure(const SetPartition& pi);
// phi of the product form for semicircular with time t.
Rational brownian_product_expectation(const BrownianProductForm& form, const Rational& t);

// Inner classes U, V covered by the same class W, U left of V, are separated
// by some element of W. Requires pi noncrossing.
bool poisson_separation_predicate(const SetPartition& pi);

// Pr_pi = X^outer (1 + t)^inner for the free Poisson process.
struct PoissonProductForm {
    std::size_t outer = 0;
    std::size_t inner = 0;
};
// nullopt when the separation hypothesis fails.
std::optional<PoissonProductForm> poisson_product_measure(const SetPartition& pi);
Rational poisson_product_expectation(const PoissonProductForm& form, const Rational& t);

// Noncrossing sigma with sigma ^ pi = 0.
std::vector<SetPartition> ito_expand(const SetPartition& pi);
// phi of the ordered product of psi_|B| over the blocks of pi.
Rational ito_expectation(const SetPartition& pi, const ProcessModel& process);
// (mu(0, sigma), sigma) for sigma <= pi. Noncrossing pi use the noncrossing
// lattice; crossing pi use the lattice of all partitions.
SignedCombination ito_mobius_expand(const SetPartition& pi);
SignedCombination ito_mobius_expand(const SetPartition& pi, Lattice lattice);

// Limit of sum_i X_i^{m_1} Z_1 X_i^{m_2} ... Z_k X_i^{m_{k+1}} with Z_j free
// from the process: prod_j phi(Z_j) * Delta_{sum m}.
struct SandwichLimit {
    Rational coefficient;
    std::size_t diagonal_index = 0;
    Rational expectation; // coefficient * phi(Delta_index)
};
SandwichLimit sandwich_limit(std::span<const int> powers, std::span<const Rational> z_expectations,
                             const ProcessModel& process);

} // namespace freecalc
