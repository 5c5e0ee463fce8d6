#pragma once

#include <array>
#include <string_view>
#include <utility>

namespace ctpoly::tol {

// Tolerance ledger. Every numeric gate in the library reads from here so
// that reported results can state exactly which thresholds produced them.

/// Constructors reject coefficient vectors with |sum(a) - 1| above this.
inline constexpr double normalization = 1e-9;

/// |Q(cos t0)| below this (scaled by max(1, sum|a|)) accepts t0 as a root
/// of the cosine part.
inline constexpr double root_accept = 1e-8;

/// Newton refinement of an interior zero must reach |Q| <= this.
inline constexpr double root_residual = 1e-10;

/// Refined roots closer than this (in cos t) count as one zero; the
/// cluster size estimates multiplicity.
inline constexpr double cluster_radius = 1e-6;

/// Step (radians) for the sign-probe fallback classification S(t +- step).
inline constexpr double sign_probe_step = 1e-5;

/// First-equation residual bound for a valid single deflation
/// (scaled by max(1, sum|a|)).
inline constexpr double deflation_residual = 1e-7;

/// Zeros with |C(t)| at or below this are excluded from margin
/// computations (the boundary condition C(t) = -1/k has no finite k).
inline constexpr double margin_exclude = 1e-10;

/// Companion eigenvalues must satisfy |lambda| < 1 - schur_strictness
/// for the polynomial to count as Schur stable.
inline constexpr double schur_strictness = 1e-10;

/// Bisection bracket growth stops here; the margin is reported as
/// effectively unbounded.
inline constexpr double bisection_cap = 1e8;

/// Half-width (radians) of the excluded band around the removable
/// singularity of the Fejer closed form.
inline constexpr double fejer_guard_band = 1e-6;

/// Simulation counts as converged when the final error is below this and
/// the trailing error envelope is non-increasing.
inline constexpr double convergence_tol = 1e-9;

/// |x| beyond this aborts a simulation as divergent.
inline constexpr double divergence_guard = 1e6;

/// Name/value view of the ledger, in reporting order.
inline constexpr std::array<std::pair<std::string_view, double>, 12> ledger{{
    {"normalization", normalization},
    {"root_accept", root_accept},
    {"root_residual", root_residual},
    {"cluster_radius", cluster_radius},
    {"sign_probe_step", sign_probe_step},
    {"deflation_residual", deflation_residual},
    {"margin_exclude", margin_exclude},
    {"schur_strictness", schur_strictness},
    {"bisection_cap", bisection_cap},
    {"fejer_guard_band", fejer_guard_band},
    {"convergence_tol", convergence_tol},
    {"divergence_guard", divergence_guard},
}};

} // namespace ctpoly::tol
