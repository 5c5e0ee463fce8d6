#pragma once

#include <vector>

#include "ctpoly/trigpoly.hpp"

namespace ctpoly {

struct ZeroRecord {
    double t = 0.0;          ///< zero of S in [0, pi]
    bool sign_change = false; ///< S changes sign across t
    double c_value = 0.0;    ///< C(t)
};

/// All zeros of S on [0, pi], ascending in t. Always contains t = 0
/// (c_value = 1) and t = pi; interior entries are the roots of the cosine
/// part in (-1, 1), at most n - 1 of them (one per cluster, multiplicity
/// folded into the sign_change flag).
struct ZeroSet {
    std::vector<ZeroRecord> zeros;

    std::size_t size() const { return zeros.size(); }
    const ZeroRecord& operator[](std::size_t i) const { return zeros[i]; }
};

/// Locate and classify every zero of S on [0, pi].
///
/// Interior zeros come from companion-matrix (colleague) eigenvalues of the
/// degree-(n-1) cosine part in c = cos t, refined by safeguarded Newton to
/// |Q| <= tol::root_residual and merged within tol::cluster_radius. A zero
/// changes sign iff its multiplicity is odd; when the sign probes
/// S(t +- tol::sign_probe_step) are decisive they override the parity
/// estimate. Throws ConvergenceError if a definitely-real eigenvalue fails
/// to refine.
ZeroSet zero_set(const CoefficientVector& coeffs);

/// min { C(t) : S(t) = 0, t in [0, pi] } over every zero. Negative for all
/// normalized coefficient vectors.
double rho(const CoefficientVector& coeffs);

/// min C(t) over interior sign-change zeros plus t = pi (unconditionally).
/// Always >= rho, and <= -tan^2(pi/(2(n+1))) for normalized vectors.
double rho1(const CoefficientVector& coeffs);

} // namespace ctpoly
