#pragma once

// Internal eigenvalue helpers shared by rootfind, schur and chaos_sim.
// Not installed.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ctpoly::detail {

/// Two-sided diagonal balancing with powers of two (norm-reducing similarity
/// transform); improves eigenvalue accuracy for lopsided companion forms.
void balance_in_place(Eigen::MatrixXd& m);

/// Eigenvalues of a general real matrix, balanced first.
/// Throws ConvergenceError if the QR iteration fails.
std::vector<std::complex<double>> eigenvalues(Eigen::MatrixXd m);

/// Roots of a Chebyshev-T series sum_k alpha_k T_k(x) via the colleague
/// matrix, after trimming trailing coefficients below 1e-14 * max|alpha|.
/// Degenerate (constant) series yield no roots.
std::vector<std::complex<double>> cheb_series_roots(std::vector<double> alpha);

/// Roots of the monic polynomial lambda^n + c_{n-1} lambda^{n-1} + ... + c_0
/// (coefficients ascending: c[0] = constant term).
std::vector<std::complex<double>> monic_roots(const std::vector<double>& ascending);

} // namespace ctpoly::detail
