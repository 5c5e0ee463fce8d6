#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ctpoly/trigpoly.hpp"

namespace ctpoly {

/// Result of the brute-force search for sup rho1 over the normalized
/// coefficient set. The search is the independent check of the closed-form
/// extremum value -tan^2(pi/(2(n+1))).
struct SearchReport {
    int n = 0;
    double best_value = 0.0;
    std::vector<double> best_coeffs;
    double theorem_value = 0.0; ///< -tan^2(pi/(2(n+1)))
    double gap = 0.0;           ///< theorem_value - best_value, >= -1e-6
    long long evaluations = 0;
    std::uint64_t seed = 0;
};

/// Maximize rho1 over (a_1, ..., a_{n-1}) with a_n = 1 - sum(others),
/// restricted to sum|a_j| <= 2: a per-dimension grid of `grid_density`
/// points, then `refinement_rounds` rounds of Nelder-Mead descent seeded
/// from the ten best grid points (jitter drawn from `seed`). Deterministic
/// for fixed arguments regardless of `workers`. Throws InvalidInput for
/// n outside [1, 5]; ConsistencyError if the best value ever exceeds the
/// closed form by more than 1e-6.
SearchReport brute_force_sup(int n, int grid_density, int refinement_rounds,
                             std::uint64_t seed, int workers = 1);

/// rho(epsilon_family(n, eps)) for each eps, in the given order. The
/// sequence must be strictly decreasing and positive.
std::vector<std::pair<double, double>>
epsilon_convergence(int n, const std::vector<double>& eps_sequence);

} // namespace ctpoly
