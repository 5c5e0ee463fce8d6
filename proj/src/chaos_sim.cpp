#include "ctpoly/chaos_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ctpoly/errors.hpp"
#include "ctpoly/schur.hpp"
#include "ctpoly/tolerances.hpp"
#include "eig_util.hpp"

namespace ctpoly {

namespace {

double horner(const std::vector<double>& poly, double x) {
    double v = 0.0;
    for (std::size_t k = poly.size(); k-- > 0;) v = v * x + poly[k];
    return v;
}

double horner_derivative(const std::vector<double>& poly, double x) {
    double v = 0.0;
    for (std::size_t k = poly.size(); k-- > 1;) {
        v = v * x + static_cast<double>(k) * poly[k];
    }
    return v;
}

} // namespace

MapSpec::MapSpec(std::string kind, std::vector<double> params,
                 std::vector<double> poly, double fixed_point)
    : kind_(std::move(kind)),
      params_(std::move(params)),
      poly_(std::move(poly)),
      fixed_point_(fixed_point) {
    const double residual = horner(poly_, fixed_point_) - fixed_point_;
    if (std::abs(residual) > 1e-10) {
        throw InvalidInput("fixed point residual " + std::to_string(residual) +
                           " exceeds 1e-10 for map '" + kind_ + "'");
    }
    multiplier_ = horner_derivative(poly_, fixed_point_);
    const double h = 1e-6;
    const double fd =
        (horner(poly_, fixed_point_ + h) - horner(poly_, fixed_point_ - h)) /
        (2.0 * h);
    if (std::abs(fd - multiplier_) > 1e-8) {
        throw ConsistencyError("multiplier disagrees with central difference");
    }
}

MapSpec MapSpec::logistic(double r) {
    if (!(r > 1.0)) {
        throw InvalidInput("logistic map needs r > 1 for a nontrivial fixed point");
    }
    return MapSpec("logistic", {r}, {0.0, r, -r}, 1.0 - 1.0 / r);
}

MapSpec MapSpec::cubic(double r) {
    if (!(r > 1.0)) {
        throw InvalidInput("cubic map needs r > 1 for a nontrivial fixed point");
    }
    return MapSpec("cubic", {r}, {0.0, r, 0.0, -r}, std::sqrt(1.0 - 1.0 / r));
}

MapSpec MapSpec::custom_polynomial(std::vector<double> poly,
                                   double fixed_point_guess) {
    if (poly.empty()) {
        throw InvalidInput("custom map needs at least one coefficient");
    }
    double x = fixed_point_guess;
    bool ok = false;
    for (int it = 0; it < 100; ++it) {
        const double g = horner(poly, x) - x;
        if (std::abs(g) <= 1e-13) {
            ok = true;
            break;
        }
        const double dg = horner_derivative(poly, x) - 1.0;
        if (dg == 0.0) break;
        x -= g / dg;
    }
    if (!ok) {
        throw ConvergenceError("no fixed point found near the supplied guess");
    }
    return MapSpec("custom-polynomial", poly, poly, x);
}

MapSpec MapSpec::engineered(double fixed_point, double multiplier,
                            double curvature) {
    // x* + mu (x - x*) + kappa (x - x*)^2, expanded in monomials
    const double xs = fixed_point;
    std::vector<double> poly{
        xs - multiplier * xs + curvature * xs * xs,
        multiplier - 2.0 * curvature * xs,
        curvature,
    };
    return MapSpec("custom-polynomial", {fixed_point, multiplier, curvature},
                   std::move(poly), fixed_point);
}

double MapSpec::operator()(double x) const { return horner(poly_, x); }

double MapSpec::derivative(double x) const {
    return horner_derivative(poly_, x);
}

SimulationTrace simulate(const MapSpec& map, const CoefficientVector& coeffs,
                         const std::vector<double>& x_init, int steps) {
    const int n = coeffs.degree();
    if (static_cast<int>(x_init.size()) != n) {
        throw InvalidInput("initial history must have length n");
    }
    if (steps < n) {
        throw InvalidInput("steps must be at least n");
    }

    SimulationTrace trace;
    trace.horizon_n = n;
    trace.coeffs = coeffs.coeffs();
    trace.states = x_init;
    trace.states.reserve(x_init.size() + static_cast<std::size_t>(steps));

    const auto& a = coeffs.coeffs();
    for (int step = 0; step < steps; ++step) {
        const std::size_t i = trace.states.size();
        double avg = 0.0;
        for (int j = 1; j <= n; ++j) {
            avg += a[static_cast<std::size_t>(j - 1)] *
                   trace.states[i - static_cast<std::size_t>(j)];
        }
        const double x = map(avg);
        trace.states.push_back(x);
        if (!std::isfinite(x) || std::abs(x) > tol::divergence_guard) {
            trace.diverged_at = step;
            break;
        }
    }

    const double xs = map.fixed_point();
    trace.final_error = std::abs(trace.states.back() - xs);
    if (trace.diverged_at) {
        trace.converged = false;
        return trace;
    }

    bool envelope_ok = true;
    const std::size_t produced = trace.states.size() - x_init.size();
    const std::size_t tail = std::min<std::size_t>(50, produced);
    if (tail >= 2) {
        // 10-step windowed error maxima over the last `tail` iterates must
        // not grow; that separates a settling spiral from a pass-by.
        const std::size_t first = trace.states.size() - tail;
        auto window_max = [&](std::size_t end_idx) {
            double m = 0.0;
            const std::size_t lo = end_idx >= 9 ? end_idx - 9 : 0;
            for (std::size_t k = lo; k <= end_idx; ++k) {
                m = std::max(m, std::abs(trace.states[k] - xs));
            }
            return m;
        };
        double prev = window_max(first);
        for (std::size_t i = first + 1; i < trace.states.size(); ++i) {
            const double cur = window_max(i);
            // rises below the convergence tolerance are roundoff wobble at
            // the fixed point, not a failure to settle
            if (cur > prev * (1.0 + 1e-9) + 1e-15 &&
                cur > tol::convergence_tol) {
                envelope_ok = false;
                break;
            }
            prev = cur;
        }
    }
    trace.converged = trace.final_error <= tol::convergence_tol && envelope_ok;
    return trace;
}

std::pair<double, double> multiplier_interval(int n,
                                              const CoefficientVector& coeffs) {
    if (n != coeffs.degree()) {
        throw InvalidInput("n does not match the coefficient vector");
    }
    const StabilityMargins m = margins_geometric(coeffs);
    // k = -mu maps family stability k in (-k1, k2) to mu in (-k2, k1)
    return {-m.k2, m.k1};
}

double closed_loop_spectral_radius(const CoefficientVector& coeffs, double mu) {
    const auto& a = coeffs.coeffs();
    const int n = coeffs.degree();
    std::vector<double> asc(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        asc[static_cast<std::size_t>(n - j)] = -mu * a[static_cast<std::size_t>(j - 1)];
    }
    double radius = 0.0;
    for (const auto& z : detail::monic_roots(asc)) {
        radius = std::max(radius, std::abs(z));
    }
    return radius;
}

} // namespace ctpoly
