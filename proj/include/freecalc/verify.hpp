#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freecalc/process.hpp"
#include "freecalc/rational.hpp"

namespace freecalc {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> failures; // first few only

    void expect(bool ok, const std::string& what);
};

struct OrthogonalityResult {
    SuiteResult suite;
    std::vector<std::vector<Rational>> gram;
};

// phi(psi_n psi_m) == [n == m] r_2^n for n, m <= max_n, on the centered process.
OrthogonalityResult verify_orthogonality(const ProcessModel& process, std::size_t max_n);
// Closed forms of mu_P(0, 1) and mu_NC(0, 1) for n <= max_n.
SuiteResult verify_mobius(std::size_t max_n);
// Free Poisson finite-N expansions for every partition of size <= max_n.
SuiteResult verify_vanishing(std::size_t max_n);
// Index forms, centered reduction, alpha/beta, Chebyshev, Poisson-Charlier, compound.
SuiteResult verify_ks_consistency();

} // namespace freecalc
