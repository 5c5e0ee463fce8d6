#include "ctpoly/trigpoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ctpoly/errors.hpp"
#include "ctpoly/tolerances.hpp"
#include "series_util.hpp"

namespace ctpoly {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw InvalidInput(std::string(what) + " contains a non-finite entry");
        }
    }
}

} // namespace

CoefficientVector::CoefficientVector(std::vector<double> a) : a_(std::move(a)) {
    if (a_.empty()) {
        throw InvalidInput("coefficient vector must have n >= 1");
    }
    require_finite(a_, "coefficient vector");
    double sum = 0.0;
    for (double x : a_) sum += x;
    if (std::abs(sum - 1.0) > tol::normalization) {
        throw InvalidInput("coefficients must sum to 1 (got " +
                           std::to_string(sum) + ")");
    }
}

double CoefficientVector::abs_sum() const {
    double s = 0.0;
    for (double x : a_) s += std::abs(x);
    return s;
}

GammaVector::GammaVector(std::vector<double> gamma) : g_(std::move(gamma)) {
    if (g_.empty()) {
        throw InvalidInput("gamma vector must have n >= 1");
    }
    require_finite(g_, "gamma vector");
    const double g2 = g_.size() > 1 ? g_[1] : 0.0;
    if (std::abs(g_[0] + g2 - 1.0) > tol::normalization) {
        throw InvalidInput("gamma_1 + gamma_2 must equal 1 (got " +
                           std::to_string(g_[0] + g2) + ")");
    }
}

// Evaluation runs the backward recurrence u_k = a_k + 2 cos(t) u_{k+1} -
// u_{k+2} (u_{n+1} = u_{n+2} = 0) shared by cos(jt) and sin(jt):
//   sum a_j sin(jt) = sin(t) u_1,
//   sum a_j cos(jt) = cos(t) u_1 - u_2,
// and u_1 is exactly the cosine part Q(cos t).

EvalPair eval_pair(const CoefficientVector& coeffs, double t) {
    if (!std::isfinite(t)) {
        throw InvalidInput("angle must be finite");
    }
    const double c = std::cos(t);
    const double s = std::sin(t);
    double u1 = 0.0, u2 = 0.0;
    detail::clenshaw_raw(coeffs.coeffs(), c, u1, u2);
    return {c * u1 - u2, s * u1};
}

double cosine_part(const CoefficientVector& coeffs, double c) {
    double u1 = 0.0, u2 = 0.0;
    detail::clenshaw_raw(coeffs.coeffs(), c, u1, u2);
    return u1;
}

void cosine_part_with_derivative(const CoefficientVector& coeffs, double c,
                                 double& q, double& dq) {
    detail::cosine_part_raw(coeffs.coeffs(), c, q, dq);
}

GammaVector to_gamma(const CoefficientVector& coeffs) {
    const auto& a = coeffs.coeffs();
    const std::size_t n = a.size();
    std::vector<double> g(n);
    for (std::size_t j = n; j-- > 0;) {
        g[j] = a[j] + (j + 2 < n ? g[j + 2] : 0.0);
    }
    return GammaVector(std::move(g));
}

CoefficientVector from_gamma(const GammaVector& gamma) {
    const auto& g = gamma.values();
    const std::size_t n = g.size();
    std::vector<double> a(n);
    for (std::size_t j = 0; j < n; ++j) {
        a[j] = g[j] - (j + 2 < n ? g[j + 2] : 0.0);
    }
    return CoefficientVector(std::move(a));
}

CoefficientVector optimal_coeffs(int n) {
    if (n < 1) {
        throw InvalidInput("degree must be >= 1");
    }
    const double beta = kPi / (n + 1);
    const double scale = 2.0 * std::tan(0.5 * beta);
    std::vector<double> a(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        a[j - 1] = scale * (1.0 - static_cast<double>(j) / (n + 1)) *
                   std::sin(beta * j);
    }
    return CoefficientVector(std::move(a));
}

GammaVector optimal_gamma(int n) {
    if (n < 1) {
        throw InvalidInput("degree must be >= 1");
    }
    const double beta = kPi / (n + 1);
    const double denom = 2.0 * (n + 1) * std::sin(beta) * (1.0 + std::cos(beta));
    std::vector<double> g(static_cast<std::size_t>(n));
    // The j = 1, 2 entries reduce algebraically to 1/(1+cos beta) and
    // cos(beta)/(1+cos beta); computing them that way keeps the active
    // constraint gamma_2 = cos(beta) gamma_1 exact to rounding.
    g[0] = 1.0 / (1.0 + std::cos(beta));
    if (n >= 2) {
        g[1] = std::cos(beta) * g[0];
    }
    for (int j = 3; j <= n; ++j) {
        g[j - 1] = ((n - j + 3) * std::sin(beta * j) -
                    (n - j + 1) * std::sin(beta * (j - 2))) /
                   denom;
    }
    return GammaVector(std::move(g));
}

double fejer_closed_form(int n, double t) {
    if (n < 1) {
        throw InvalidInput("degree must be >= 1");
    }
    if (!(t > 0.0 && t < kPi)) {
        throw InvalidInput("angle must lie in (0, pi)");
    }
    if (n == 1) return 1.0; // S0 = sin t; the formula collapses to 1 exactly
    const double beta = kPi / (n + 1);
    if (std::abs(t - beta) < tol::fejer_guard_band) {
        throw InvalidInput("angle within guard band of the removable "
                           "singularity t = pi/(n+1)");
    }
    const double num = std::cos(0.5 * (n + 1) * t);
    const double den = std::cos(t) - std::cos(beta);
    return (1.0 - std::cos(beta)) / (n + 1) * 2.0 * num * num / (den * den);
}

CoefficientVector epsilon_family(int n, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw InvalidInput("eps must be positive");
    }
    std::vector<double> a = optimal_coeffs(n).coeffs();
    const double scale = 1.0 / (1.0 + eps);
    a[0] = (a[0] + eps) * scale;
    for (std::size_t j = 1; j < a.size(); ++j) a[j] *= scale;
    return CoefficientVector(std::move(a));
}

EvaluationGrid evaluate_grid(const CoefficientVector& coeffs,
                             std::vector<double> points) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i] > points[i - 1])) {
            throw InvalidInput("grid points must be strictly increasing");
        }
    }
    EvaluationGrid grid;
    grid.values_c.reserve(points.size());
    grid.values_s.reserve(points.size());
    for (double t : points) {
        const EvalPair v = eval_pair(coeffs, t);
        grid.values_c.push_back(v.c);
        grid.values_s.push_back(v.s);
    }
    grid.points = std::move(points);
    return grid;
}

} // namespace ctpoly
