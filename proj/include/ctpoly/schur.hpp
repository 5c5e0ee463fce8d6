#pragma once

#include <string_view>

#include "ctpoly/trigpoly.hpp"

namespace ctpoly {

enum class MarginMethod { geometric, bisection };

std::string_view to_string(MarginMethod m);

/// Robust Schur-stability margins of the one-parameter family
///   f(lambda) = lambda^n + k (a_1 lambda^{n-1} + ... + a_n):
/// the family is stable exactly for k in (-k1, k2), and phi = k1 + k2 is
/// the length of that segment. k1 <= 1 always (lambda = 1 is a root at
/// k = -1).
struct StabilityMargins {
    double k1 = 0.0;
    double k2 = 0.0;
    double phi = 0.0;
    MarginMethod method = MarginMethod::geometric;
    bool k1_unbounded = false; ///< bracket growth hit tol::bisection_cap
    bool k2_unbounded = false;
};

/// Margins from the boundary condition C(t) = -1/k at the sign-change zeros
/// of S (where roots cross the circle rather than graze it):
/// k2 = -1/min C and k1 = 1/max{C : C > 0} over that set, which always
/// contains t = 0 (C = 1) and t = pi. Zeros with |C| <= tol::margin_exclude
/// are skipped (k would be infinite).
StabilityMargins margins_geometric(const CoefficientVector& coeffs);

/// Independent oracle: bisect on is_schur_stable from the stable point
/// k = 0, growing the bracket by doubling. tol must lie in [1e-12, 1e-3].
StabilityMargins margins_bisection(const CoefficientVector& coeffs, double tol);

/// All roots of lambda^n + k(a_1 lambda^{n-1} + ... + a_n) strictly inside
/// the unit disk (modulus < 1 - tol::schur_strictness).
bool is_schur_stable(const CoefficientVector& coeffs, double k);

/// max Phi over normalized coefficients: 1/sin^2(pi/(2(n+1))).
double phi_max(int n);

} // namespace ctpoly
