#pragma once

#include <utility>
#include <vector>

#include "freecalc/partition.hpp"
#include "freecalc/rational.hpp"

namespace freecalc {

enum class Lattice { all, noncrossing };

// Elements of the interval [lower, upper] in the chosen lattice, lower first.
std::vector<SetPartition> lattice_interval(Lattice lattice, const SetPartition& lower, const SetPartition& upper);

// Möbius function by inverting the zeta function over [sigma, pi]:
// mu(sigma, sigma) = 1, mu(sigma, tau) = -sum_{sigma <= rho < tau} mu(sigma, rho).
// Results are memoized per lower element; the memo is shared and guarded.
Rational mobius(Lattice lattice, const SetPartition& sigma, const SetPartition& pi);

inline Rational mobius_p(const SetPartition& sigma, const SetPartition& pi)
{
    return mobius(Lattice::all, sigma, pi);
}

inline Rational mobius_nc(const SetPartition& sigma, const SetPartition& pi)
{
    return mobius(Lattice::noncrossing, sigma, pi);
}

// (mu(sigma, tau), tau) for every tau in [sigma, pi].
std::vector<std::pair<Rational, SetPartition>> mobius_row(Lattice lattice, const SetPartition& sigma,
                                                          const SetPartition& pi);

} // namespace freecalc
