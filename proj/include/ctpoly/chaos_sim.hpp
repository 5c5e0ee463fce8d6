#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctpoly/trigpoly.hpp"

namespace ctpoly {

/// A one-dimensional map x -> f(x) with a distinguished fixed point and its
/// multiplier mu = f'(x*). Construction verifies both to tight tolerance
/// (fixed point residual 1e-10, multiplier against a central difference).
class MapSpec {
public:
    /// f(x) = r x (1 - x); fixed point 1 - 1/r, multiplier 2 - r.
    static MapSpec logistic(double r);

    /// f(x) = r x (1 - x^2); fixed point sqrt(1 - 1/r), multiplier 3 - 2r.
    static MapSpec cubic(double r);

    /// f(x) = sum_i poly[i] x^i. The fixed point is refined by Newton from
    /// the supplied guess.
    static MapSpec custom_polynomial(std::vector<double> poly,
                                     double fixed_point_guess);

    /// A quadratic with prescribed fixed point and multiplier,
    /// f(x) = x* + mu (x - x*) + curvature (x - x*)^2. Handy for probing
    /// stability intervals at exact multipliers.
    static MapSpec engineered(double fixed_point, double multiplier,
                              double curvature = 0.1);

    double operator()(double x) const;
    double derivative(double x) const;

    const std::string& kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }
    double fixed_point() const { return fixed_point_; }
    double multiplier() const { return multiplier_; }

private:
    MapSpec(std::string kind, std::vector<double> params,
            std::vector<double> poly, double fixed_point);

    std::string kind_;
    std::vector<double> params_; ///< as given to the factory
    std::vector<double> poly_;   ///< monomial coefficients of f
    double fixed_point_ = 0.0;
    double multiplier_ = 0.0;
};

struct SimulationTrace {
    std::vector<double> states; ///< x_0 ... x_T (first horizon_n are seeds)
    bool converged = false;
    double final_error = 0.0; ///< |x_T - fixed point|
    int horizon_n = 0;
    std::vector<double> coeffs;
    /// Step index at which |x| crossed tol::divergence_guard, if it did.
    std::optional<int> diverged_at;
};

/// Iterate the averaged predictive control
///   x_{k+1} = f(sum_{j=1}^n a_j x_{k+1-j}).
/// Its linearization at the fixed point has characteristic polynomial
/// lambda^n - mu (a_1 lambda^{n-1} + ... + a_n), i.e. the stability family
/// with k = -mu. x_init supplies the n seed states (oldest first); `steps`
/// map applications follow. Convergence requires the final error below
/// tol::convergence_tol and a non-increasing error envelope over the last
/// 50 iterates.
SimulationTrace simulate(const MapSpec& map, const CoefficientVector& coeffs,
                         const std::vector<double>& x_init, int steps);

/// Open interval of multipliers mu for which the controlled fixed point is
/// asymptotically stable: (-k2, k1) from the geometric margins. Equals
/// (-cot^2(pi/(2(n+1))), 1) at the optimal coefficients.
std::pair<double, double> multiplier_interval(int n,
                                              const CoefficientVector& coeffs);

/// Spectral radius of the closed loop at multiplier mu (max root modulus of
/// lambda^n - mu sum_j a_j lambda^{n-j}).
double closed_loop_spectral_radius(const CoefficientVector& coeffs, double mu);

} // namespace ctpoly
