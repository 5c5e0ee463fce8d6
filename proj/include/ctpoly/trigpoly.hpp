#pragma once

#include <cstddef>
#include <vector>

namespace ctpoly {

/// Coefficients (a_1, ..., a_n) of a conjugate pair of trigonometric
/// polynomials
///
///   C(t) = sum_j a_j cos(jt),   S(t) = sum_j a_j sin(jt),
///
/// normalized so that sum_j a_j = 1 (equivalently C(0) = 1). The
/// normalization is a hard precondition of everything downstream, so the
/// constructor rejects vectors violating it instead of rescaling.
class CoefficientVector {
public:
    /// Takes a_1..a_n (1-based mathematical indexing, 0-based storage).
    /// Throws InvalidInput if a is empty, contains non-finite entries, or
    /// |sum(a) - 1| > tol::normalization.
    explicit CoefficientVector(std::vector<double> a);

    int degree() const { return static_cast<int>(a_.size()); }
    const std::vector<double>& coeffs() const { return a_; }

    /// a_j with 1-based index, as in the defining sums.
    double a(int j) const { return a_.at(static_cast<std::size_t>(j - 1)); }

    /// sum_j |a_j|
    double abs_sum() const;

private:
    std::vector<double> a_;
};

/// Image (gamma_1, ..., gamma_n) of a CoefficientVector under the linear
/// bijection gamma_j = a_j + a_{j+2} + a_{j+4} + ... . It turns the sine
/// polynomial into sin(t) times a cosine polynomial:
///
///   S(t) = sin t * (gamma_1 + 2 gamma_2 cos t + ... + 2 gamma_n cos((n-1)t))
///
/// and carries the normalization as gamma_1 + gamma_2 = 1.
class GammaVector {
public:
    /// Throws InvalidInput unless |gamma_1 + gamma_2 - 1| <= tol::normalization
    /// (gamma_2 read as 0 when n = 1).
    explicit GammaVector(std::vector<double> gamma);

    int degree() const { return static_cast<int>(g_.size()); }
    const std::vector<double>& values() const { return g_; }
    double gamma(int j) const { return g_.at(static_cast<std::size_t>(j - 1)); }

private:
    std::vector<double> g_;
};

struct EvalPair {
    double c; ///< C(t)
    double s; ///< S(t)
};

/// Evaluate (C(t), S(t)) with a single backward Clenshaw recurrence.
/// Any finite t is accepted; periodicity needs no special handling.
EvalPair eval_pair(const CoefficientVector& coeffs, double t);

/// Cosine part Q(c) = sum_j a_j U_{j-1}(c) where c = cos t, so that
/// S(t) = sin(t) * Q(cos t). Defined for any real c.
double cosine_part(const CoefficientVector& coeffs, double c);

/// Q and dQ/dc together (one recurrence pass).
void cosine_part_with_derivative(const CoefficientVector& coeffs, double c,
                                 double& q, double& dq);

GammaVector to_gamma(const CoefficientVector& coeffs);

/// Inverse transform a_j = gamma_j - gamma_{j+2} (zero-padded).
/// Throws InvalidInput when gamma_1 + gamma_2 != 1 beyond tolerance.
CoefficientVector from_gamma(const GammaVector& gamma);

/// The unique optimizer a^0 of the conditional extremum:
///   a_j^0 = 2 tan(pi/(2(n+1))) (1 - j/(n+1)) sin(pi j/(n+1)).
/// All entries are positive and sum to 1 (so sum|a_j^0| = 1 as well).
CoefficientVector optimal_coeffs(int n);

/// Closed-form gamma^0 of the optimal pair; gamma_1^0 = 1/(1 + cos(pi/(n+1))),
/// gamma_2^0 = cos(pi/(n+1)) gamma_1^0, consistent with tail sums of a^0.
GammaVector optimal_gamma(int n);

/// S^0(t)/sin t in closed form:
///   (1 - cos(pi/(n+1)))/(n+1) * 2 cos^2((n+1)t/2) / (cos t - cos(pi/(n+1)))^2.
/// Throws InvalidInput outside (0, pi) or within tol::fejer_guard_band of the
/// removable singularity t = pi/(n+1); use the coefficient form there.
double fejer_closed_form(int n, double t);

/// One-parameter family approaching the optimum from strictly positive S:
/// a_1 = (a_1^0 + eps)/(1 + eps), a_j = a_j^0/(1 + eps) for j >= 2.
/// Throws InvalidInput for eps <= 0.
CoefficientVector epsilon_family(int n, double eps);

/// Sampled values of (C, S) on a strictly increasing sequence of angles.
struct EvaluationGrid {
    std::vector<double> points;
    std::vector<double> values_c;
    std::vector<double> values_s;
};

/// Throws InvalidInput if points are not strictly increasing.
EvaluationGrid evaluate_grid(const CoefficientVector& coeffs,
                             std::vector<double> points);

} // namespace ctpoly
