#include "ctpoly/deflation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ctpoly/errors.hpp"
#include "ctpoly/tolerances.hpp"
#include "series_util.hpp"

namespace ctpoly {

namespace {

constexpr double kPi = std::numbers::pi;

// Core of the single deflation on a raw (possibly unnormalized) sequence.
// The coupling system between a and a' is
//   a_1 = -cos(t0) a'_1 + a'_2 / 2
//   a_j = a'_{j-1}/2 - cos(t0) a'_j + a'_{j+1}/2     (2 <= j <= n-1)
//   a_n = a'_{n-1}/2
// lower triangular when read from the bottom, so back-substitution from the
// last row solves it in O(n) and the untouched first row becomes the
// consistency residual (it vanishes exactly when cos t0 is a root of the
// cosine part).
std::vector<double> deflate_raw(const std::vector<double>& a, double cos_t0,
                                double* first_row_residual) {
    const std::size_t n = a.size();
    std::vector<double> ap(n - 1, 0.0);
    ap[n - 2] = 2.0 * a[n - 1];
    for (std::size_t j = n - 1; j >= 2; --j) {
        const double next = j < n - 1 ? ap[j] : 0.0;      // a'_{j+1}
        ap[j - 2] = 2.0 * a[j - 1] + 2.0 * cos_t0 * ap[j - 1] - next;
    }
    const double ap2 = n >= 3 ? ap[1] : 0.0;
    *first_row_residual = a[0] - (-cos_t0 * ap[0] + 0.5 * ap2);
    return ap;
}

// Root validity against the cosine part of a raw sequence, scaled by its
// magnitude. Returns |Q(cos t0)| / max(1, sum|a|).
double root_defect(const std::vector<double>& a, double cos_t0) {
    double u1 = 0.0, u2 = 0.0;
    detail::clenshaw_raw(a, cos_t0, u1, u2);
    return std::abs(u1) / std::max(1.0, detail::abs_sum(a));
}

// Polish an accepted root on the polynomial actually being deflated. A
// root carried over from a previous deflation is exact for the original
// polynomial but only approximate for the quotient, and back-substitution
// amplifies that defect when roots are close; a few Newton steps on the
// quotient's own cosine part remove it. Movement is capped so a wrong root
// cannot silently migrate to a neighbouring one.
double polish_root(const std::vector<double>& a, double c0) {
    double c = c0;
    double q, dq;
    detail::cosine_part_raw(a, c, q, dq);
    for (int it = 0; it < 30; ++it) {
        if (dq == 0.0) break;
        const double cn = c - q / dq;
        if (std::abs(cn - c0) > 1e-4 || std::abs(cn) > 1.0) break;
        double qn, dqn;
        detail::cosine_part_raw(a, cn, qn, dqn);
        if (std::abs(qn) >= std::abs(q)) break;
        c = cn;
        q = qn;
        dq = dqn;
    }
    return c;
}

std::vector<double> checked_deflate(const std::vector<double>& a, double* t0,
                                    bool allow_pi) {
    if (a.size() < 2) {
        throw InvalidInput("deflation needs degree n >= 2");
    }
    const bool interior = *t0 > 0.0 && *t0 < kPi;
    const bool at_pi = std::abs(*t0 - kPi) <= 1e-12;
    if (!interior && !(allow_pi && at_pi)) {
        throw InvalidInput("deflation root must lie in (0, pi)" +
                           std::string(allow_pi ? " or equal pi" : ""));
    }
    double c0 = at_pi ? -1.0 : std::cos(*t0);
    if (root_defect(a, c0) > tol::root_accept) {
        throw InvalidInput("t0 is not a root of the cosine part (defect above "
                           "accept tolerance)");
    }
    if (!at_pi) {
        c0 = polish_root(a, c0);
        *t0 = std::acos(std::clamp(c0, -1.0, 1.0));
    }
    double residual = 0.0;
    std::vector<double> ap = deflate_raw(a, c0, &residual);
    const double scale = std::max(1.0, detail::abs_sum(a));
    if (std::abs(residual) > tol::deflation_residual * scale) {
        throw ConsistencyError(
            "deflation first-row residual " + std::to_string(residual) +
            " exceeds tolerance; t0 does not factor the sine polynomial");
    }
    return ap;
}

} // namespace

DeflatedForm deflate_once(const CoefficientVector& coeffs, double t0) {
    DeflatedForm d;
    d.at_pi = std::abs(t0 - kPi) <= 1e-12;
    d.t0 = d.at_pi ? kPi : t0;
    d.a_prime = checked_deflate(coeffs.coeffs(), &d.t0, /*allow_pi=*/true);
    return d;
}

double c_at_root(const DeflatedForm& d) {
    if (d.at_pi || d.a_prime.empty()) {
        throw InvalidInput("c_at_root requires an interior factored root");
    }
    return -0.5 * d.a_prime[0];
}

double c_at_pi(const DeflatedForm& d) {
    if (d.at_pi || d.a_prime.empty()) {
        throw InvalidInput("c_at_pi requires an interior factored root");
    }
    double alternating = 0.0; // -a'_1 + a'_2 - a'_3 + ...
    double sign = -1.0;
    for (double x : d.a_prime) {
        alternating += sign * x;
        sign = -sign;
    }
    return -(1.0 + std::cos(d.t0)) * alternating - 0.5 * d.a_prime[0];
}

DoublyDeflatedForm deflate_twice(const CoefficientVector& coeffs, double t0,
                                 double t1) {
    if (coeffs.degree() < 3) {
        throw InvalidInput("double deflation needs degree n >= 3");
    }
    if (!(t0 > 0.0 && t0 < kPi) || !(t1 > 0.0 && t1 < kPi)) {
        throw InvalidInput("both roots must lie in (0, pi)");
    }
    if (std::abs(t0 - t1) < 1e-8) {
        throw InvalidInput("double deflation requires distinct roots");
    }
    DoublyDeflatedForm dd;
    dd.t0 = t0;
    dd.t1 = t1;
    std::vector<double> ap = checked_deflate(coeffs.coeffs(), &dd.t0, false);
    dd.a_dprime = checked_deflate(ap, &dd.t1, false);
    return dd;
}

std::pair<double, double> c_at_double_roots(const DoublyDeflatedForm& d) {
    if (d.a_dprime.empty()) {
        throw InvalidInput("empty doubly deflated form");
    }
    const double h1 = 0.5 * d.a_dprime[0];
    const double q2 = d.a_dprime.size() >= 2 ? 0.25 * d.a_dprime[1] : 0.0;
    return {-q2 + h1 * std::cos(d.t1), -q2 + h1 * std::cos(d.t0)};
}

} // namespace ctpoly
