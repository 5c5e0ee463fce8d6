#include "ctpoly/schur.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ctpoly/errors.hpp"
#include "ctpoly/rootfind.hpp"
#include "ctpoly/tolerances.hpp"
#include "eig_util.hpp"

namespace ctpoly {

std::string_view to_string(MarginMethod m) {
    return m == MarginMethod::geometric ? "geometric" : "bisection";
}

bool is_schur_stable(const CoefficientVector& coeffs, double k) {
    if (!std::isfinite(k)) {
        throw InvalidInput("k must be finite");
    }
    const auto& a = coeffs.coeffs();
    const int n = coeffs.degree();
    // lambda^n + k a_1 lambda^{n-1} + ... + k a_n, ascending coefficients
    std::vector<double> asc(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        asc[static_cast<std::size_t>(n - j)] = k * a[static_cast<std::size_t>(j - 1)];
    }
    for (const auto& z : detail::monic_roots(asc)) {
        if (std::abs(z) >= 1.0 - tol::schur_strictness) return false;
    }
    return true;
}

StabilityMargins margins_geometric(const CoefficientVector& coeffs) {
    const ZeroSet zs = zero_set(coeffs);
    // Boundary condition: a root on the unit circle at e^{it} forces
    // S(t) = 0 and C(t) = -1/k. Only zeros where S changes sign count: there
    // the boundary curve crosses the real axis and the root actually crosses
    // the circle. At a tangential zero the root grazes |lambda| = 1 at the
    // single value k = -1/C(t) and returns inside, so no margin ends there.
    // t = 0 and t = pi always change sign (S is odd and 2pi-periodic), so
    // C(0) = 1 anchors k1; a crossing with C < 0 always exists (the image of
    // the unit circle under sum a_j z^j winds about 0), anchoring k2.
    double min_c = 0.0;
    double max_pos_c = 0.0;
    for (const auto& z : zs.zeros) {
        if (!z.sign_change) continue;
        if (std::abs(z.c_value) <= tol::margin_exclude) continue;
        min_c = std::min(min_c, z.c_value);
        if (z.c_value > 0.0) max_pos_c = std::max(max_pos_c, z.c_value);
    }
    if (min_c >= 0.0 || max_pos_c <= 0.0) {
        // min_c < 0 and max_pos_c >= 1 hold for every normalized vector.
        throw ConsistencyError("zero set lacks the guaranteed margin anchors");
    }
    StabilityMargins m;
    m.method = MarginMethod::geometric;
    m.k2 = -1.0 / min_c;
    m.k1 = 1.0 / max_pos_c;
    m.phi = m.k1 + m.k2;
    return m;
}

namespace {

// Largest |k| of the given sign for which the family stays stable,
// by doubling then bisection. Sets `unbounded` if the bracket hits the cap.
double one_sided_margin(const CoefficientVector& coeffs, double sign,
                        double tolerance, bool* unbounded) {
    double lo = 0.0; // stable
    double hi = 1.0;
    while (is_schur_stable(coeffs, sign * hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > tol::bisection_cap) {
            *unbounded = true;
            return tol::bisection_cap;
        }
    }
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (is_schur_stable(coeffs, sign * mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

StabilityMargins margins_bisection(const CoefficientVector& coeffs, double tol_k) {
    if (!(tol_k >= 1e-12 && tol_k <= 1e-3)) {
        throw InvalidInput("bisection tolerance must lie in [1e-12, 1e-3]");
    }
    if (!is_schur_stable(coeffs, 0.0)) {
        // k = 0 leaves lambda^n, which is always stable.
        throw ConsistencyError("stability test rejected the k = 0 polynomial");
    }
    StabilityMargins m;
    m.method = MarginMethod::bisection;
    m.k2 = one_sided_margin(coeffs, +1.0, tol_k, &m.k2_unbounded);
    m.k1 = one_sided_margin(coeffs, -1.0, tol_k, &m.k1_unbounded);
    m.phi = m.k1 + m.k2;
    return m;
}

double phi_max(int n) {
    if (n < 1) {
        throw InvalidInput("degree must be >= 1");
    }
    const double s = std::sin(std::numbers::pi / (2.0 * (n + 1)));
    return 1.0 / (s * s);
}

} // namespace ctpoly
