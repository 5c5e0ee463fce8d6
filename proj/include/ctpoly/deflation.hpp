#pragma once

#include <utility>
#include <vector>

#include "ctpoly/trigpoly.hpp"

namespace ctpoly {

/// S with one root factored out:
///   S(t) = (cos t - cos t0) * sum_{j=1}^{n-1} a'_j sin(jt),
/// together with the normalization identity
///   (1 - cos t0) * sum_j a'_j = 1 + a'_1 / 2.
struct DeflatedForm {
    double t0 = 0.0;
    std::vector<double> a_prime;
    /// t0 = pi was factored (admitted only when the cosine part vanishes
    /// at -1); the interior-root formulas c_at_root/c_at_pi do not apply.
    bool at_pi = false;
};

/// S with two distinct roots factored out:
///   S(t) = (cos t - cos t0)(cos t - cos t1) * sum_{j=1}^{n-2} a''_j sin(jt).
struct DoublyDeflatedForm {
    double t0 = 0.0;
    double t1 = 0.0;
    std::vector<double> a_dprime;
};

/// Factor (cos t - cos t0) out of S. The reduced coefficients solve the
/// triangular coupling system by back-substitution from the last row
/// (a'_{n-1} = 2 a_n upward); the first row is left over as a consistency
/// residual and must vanish.
///
/// Requires n >= 2 and t0 a zero of the cosine part: t0 in (0, pi) with
/// Q(cos t0) ~ 0, or t0 = pi with Q(-1) ~ 0 (accept tolerance
/// tol::root_accept). Throws InvalidInput when t0 is not a valid root,
/// ConsistencyError when the first-row residual exceeds
/// tol::deflation_residual.
DeflatedForm deflate_once(const CoefficientVector& coeffs, double t0);

/// C(t0) = -a'_1 / 2 for an interior factored root t0.
double c_at_root(const DeflatedForm& d);

/// C(pi) = -(1 + cos t0)(-a'_1 + a'_2 - ...) - a'_1 / 2.
double c_at_pi(const DeflatedForm& d);

/// Factor both roots (order-independent up to rounding). Requires n >= 3,
/// both roots interior and valid, |t0 - t1| >= 1e-8.
DoublyDeflatedForm deflate_twice(const CoefficientVector& coeffs, double t0,
                                 double t1);

/// (C(t0), C(t1)) = (-a''_2/4 + a''_1/2 cos t1, -a''_2/4 + a''_1/2 cos t0),
/// with a''_2 read as 0 when fewer than two reduced coefficients exist.
/// When C(t0) = C(t1) with t0 != t1 both values equal -a''_2/4.
std::pair<double, double> c_at_double_roots(const DoublyDeflatedForm& d);

} // namespace ctpoly
