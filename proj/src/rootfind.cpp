#include "ctpoly/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "ctpoly/errors.hpp"
#include "ctpoly/tolerances.hpp"
#include "eig_util.hpp"
#include "series_util.hpp"

namespace ctpoly {

namespace {

constexpr double kPi = std::numbers::pi;

// Eigenvalues further than this from the real axis cannot be perturbed real
// roots (companion error for a double root stays well under it) and are
// dropped before refinement.
constexpr double kImagAdmit = 1e-4;

// Candidates at least this real are treated as bona fide real roots: if
// Newton cannot push one to |Q| <= tol::root_residual something is wrong
// and we fail loudly instead of dropping it.
constexpr double kImagSurelyReal = 1e-8;

constexpr int kNewtonBudget = 100;

struct Refined {
    double c;
    bool converged;
};

// Damped Newton, run to the improvement floor rather than to the acceptance
// threshold: stopping as soon as |Q| <= tol would leave the two eigenvalue
// copies of a double zero parked on opposite sides of it (anywhere inside
// the |Q| <= tol basin), too far apart to merge into one cluster.
Refined refine_root(const CoefficientVector& coeffs, double c0) {
    double c = c0;
    double q, dq;
    cosine_part_with_derivative(coeffs, c, q, dq);
    for (int it = 0; it < kNewtonBudget && q != 0.0 && dq != 0.0; ++it) {
        double step = q / dq;
        double cn = c - step;
        double qn, dqn;
        cosine_part_with_derivative(coeffs, cn, qn, dqn);
        int halvings = 0;
        while (std::abs(qn) >= std::abs(q) && halvings < 30) {
            step *= 0.5;
            cn = c - step;
            cosine_part_with_derivative(coeffs, cn, qn, dqn);
            ++halvings;
        }
        if (std::abs(qn) >= std::abs(q)) break; // floor reached
        c = cn;
        q = qn;
        dq = dqn;
    }
    return {c, std::abs(q) <= tol::root_residual};
}

// Decisive sign probe: S(t - step) and S(t + step) when both are clearly
// above evaluation noise. Returns no value when the probe cannot be trusted
// (magnitudes at noise level, or a neighbouring zero inside the probe span).
std::optional<bool> probe_sign_change(const CoefficientVector& coeffs, double t,
                                      double lo_guard, double hi_guard) {
    const double step = tol::sign_probe_step;
    if (t - step <= lo_guard || t + step >= hi_guard) return std::nullopt;
    const double floor = 1e-12 * std::max(1.0, coeffs.abs_sum());
    const double sm = eval_pair(coeffs, t - step).s;
    const double sp = eval_pair(coeffs, t + step).s;
    if (std::abs(sm) <= floor || std::abs(sp) <= floor) return std::nullopt;
    return (sm < 0.0) != (sp < 0.0);
}

} // namespace

ZeroSet zero_set(const CoefficientVector& coeffs) {
    const int n = coeffs.degree();

    // Cosine part as a Chebyshev-T series via the gamma transform:
    // Q(c) = gamma_1 + 2 sum_{m>=2} gamma_m T_{m-1}(c), degree n-1.
    const GammaVector gamma = to_gamma(coeffs);
    const auto& g = gamma.values();
    std::vector<double> alpha(static_cast<std::size_t>(n), 0.0);
    alpha[0] = g[0];
    for (int m = 2; m <= n; ++m) alpha[static_cast<std::size_t>(m - 1)] = 2.0 * g[m - 1];

    std::vector<double> refined;
    for (const auto& z : detail::cheb_series_roots(std::move(alpha))) {
        if (std::abs(z.imag()) > kImagAdmit) continue;
        if (std::abs(z.real()) >= 1.0 - 1e-12) continue;
        const Refined r = refine_root(coeffs, z.real());
        if (!r.converged) {
            if (std::abs(z.imag()) <= kImagSurelyReal) {
                throw ConvergenceError(
                    "interior zero refinement failed to reach |Q| <= 1e-10");
            }
            continue; // artifact of a complex pair near the axis
        }
        if (std::abs(r.c) >= 1.0 - 1e-12) continue; // drifted to the boundary
        refined.push_back(r.c);
    }
    std::sort(refined.begin(), refined.end());

    // Merge within the cluster radius; the cluster size is the multiplicity
    // estimate (a double zero splits into two eigenvalues that Newton then
    // drives back together).
    struct Cluster {
        double c_sum = 0.0;
        int count = 0;
    };
    std::vector<Cluster> clusters;
    for (double c : refined) {
        if (!clusters.empty() &&
            c - clusters.back().c_sum / clusters.back().count <=
                tol::cluster_radius) {
            clusters.back().c_sum += c;
            clusters.back().count += 1;
        } else {
            clusters.push_back({c, 1});
        }
    }

    // Interior records, ascending in t (descending in c).
    std::vector<ZeroRecord> interior;
    interior.reserve(clusters.size());
    for (auto it = clusters.rbegin(); it != clusters.rend(); ++it) {
        const double c = it->c_sum / it->count;
        ZeroRecord rec;
        rec.t = std::acos(std::clamp(c, -1.0, 1.0));
        rec.c_value = eval_pair(coeffs, rec.t).c;
        rec.sign_change = (it->count % 2) == 1;
        interior.push_back(rec);
    }
    for (std::size_t i = 0; i < interior.size(); ++i) {
        const double lo = i == 0 ? 0.0 : interior[i - 1].t;
        const double hi = i + 1 < interior.size() ? interior[i + 1].t : kPi;
        if (auto probed = probe_sign_change(coeffs, interior[i].t, lo, hi)) {
            interior[i].sign_change = *probed;
        }
    }

    ZeroSet zs;
    zs.zeros.reserve(interior.size() + 2);
    // S is odd and 2pi-periodic, so it changes sign across 0 and pi whenever
    // the probes can resolve it; default to that symmetry when they cannot.
    ZeroRecord at0{0.0, true, eval_pair(coeffs, 0.0).c};
    const double first_t = interior.empty() ? kPi : interior.front().t;
    if (auto probed = probe_sign_change(coeffs, 0.0, -kPi, first_t)) {
        at0.sign_change = *probed;
    }
    zs.zeros.push_back(at0);
    zs.zeros.insert(zs.zeros.end(), interior.begin(), interior.end());
    ZeroRecord atpi{kPi, true, eval_pair(coeffs, kPi).c};
    const double last_t = interior.empty() ? 0.0 : interior.back().t;
    if (auto probed = probe_sign_change(coeffs, kPi, last_t, 2.0 * kPi)) {
        atpi.sign_change = *probed;
    }
    zs.zeros.push_back(atpi);
    return zs;
}

double rho(const CoefficientVector& coeffs) {
    const ZeroSet zs = zero_set(coeffs);
    double m = std::numeric_limits<double>::infinity();
    for (const auto& z : zs.zeros) m = std::min(m, z.c_value);
    return m;
}

double rho1(const CoefficientVector& coeffs) {
    const ZeroSet zs = zero_set(coeffs);
    double m = zs.zeros.back().c_value; // t = pi, always in the domain
    for (std::size_t i = 1; i + 1 < zs.zeros.size(); ++i) {
        if (zs.zeros[i].sign_change) m = std::min(m, zs.zeros[i].c_value);
    }
    return m;
}

} // namespace ctpoly
