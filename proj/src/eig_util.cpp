#include "eig_util.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "ctpoly/errors.hpp"

namespace ctpoly::detail {

void balance_in_place(Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    bool converged = false;
    for (int iter = 0; iter < 50 && !converged; ++iter) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double col = m.col(i).lpNorm<1>() - std::abs(m(i, i));
            double row = m.row(i).lpNorm<1>() - std::abs(m(i, i));
            if (col == 0.0 || row == 0.0) continue;
            const double before = col + row;
            double f = 1.0;
            while (col < row / 2.0) {
                col *= 2.0;
                row /= 2.0;
                f *= 2.0;
            }
            while (col >= row * 2.0) {
                col /= 2.0;
                row *= 2.0;
                f /= 2.0;
            }
            if (col + row < 0.95 * before) {
                converged = false;
                m.col(i) *= f;
                m.row(i) /= f;
            }
        }
    }
}

std::vector<std::complex<double>> eigenvalues(Eigen::MatrixXd m) {
    Eigen::MatrixXd balanced = m;
    balance_in_place(balanced);
    // The Francis QR iteration occasionally stalls on one presentation of a
    // matrix but not on another with the same spectrum; the transpose and
    // the unbalanced original are free retries before giving up.
    Eigen::EigenSolver<Eigen::MatrixXd> solver;
    for (const Eigen::MatrixXd& candidate :
         {balanced, Eigen::MatrixXd(balanced.transpose()), m,
          Eigen::MatrixXd(m.transpose())}) {
        solver.compute(candidate, /*computeEigenvectors=*/false);
        if (solver.info() == Eigen::Success) {
            const auto& ev = solver.eigenvalues();
            std::vector<std::complex<double>> out(static_cast<std::size_t>(ev.size()));
            for (Eigen::Index i = 0; i < ev.size(); ++i) {
                out[static_cast<std::size_t>(i)] = ev(i);
            }
            return out;
        }
    }
    throw ConvergenceError("eigenvalue iteration did not converge");
}

std::vector<std::complex<double>> cheb_series_roots(std::vector<double> alpha) {
    double amax = 0.0;
    for (double x : alpha) amax = std::max(amax, std::abs(x));
    if (amax == 0.0) return {};
    while (alpha.size() > 1 && std::abs(alpha.back()) <= 1e-14 * amax) {
        alpha.pop_back();
    }
    const int deg = static_cast<int>(alpha.size()) - 1;
    if (deg < 1) return {};
    if (deg == 1) {
        return {std::complex<double>(-alpha[0] / alpha[1], 0.0)};
    }
    if (deg == 2) {
        // alpha0 T0 + alpha1 T1 + alpha2 T2 = (alpha0 - alpha2) + alpha1 x + 2 alpha2 x^2
        const double a = 2.0 * alpha[2];
        const double b = alpha[1];
        const double c = alpha[0] - alpha[2];
        const std::complex<double> disc =
            std::sqrt(std::complex<double>(b * b - 4.0 * a * c, 0.0));
        // q = -(b + sign(b) sqrt(disc))/2 avoids cancellation for real roots
        if (disc.imag() == 0.0) {
            const double sd = disc.real();
            const double q = -0.5 * (b + (b >= 0.0 ? sd : -sd));
            if (q == 0.0) return {{0.0, 0.0}, {0.0, 0.0}};
            return {std::complex<double>(q / a, 0.0),
                    std::complex<double>(c / q, 0.0)};
        }
        const std::complex<double> r = (-b + disc) / (2.0 * a);
        return {r, std::conj(r)};
    }

    // Colleague matrix: multiplication by x in the T basis, reduced mod the
    // series. Columns hold the images of T_0 .. T_{deg-1}.
    const Eigen::Index n = deg;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m(1, 0) = 1.0;
    for (Eigen::Index j = 1; j < n - 1; ++j) {
        m(j - 1, j) = 0.5;
        m(j + 1, j) = 0.5;
    }
    const double lead = alpha[static_cast<std::size_t>(deg)];
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, n - 1) = -alpha[static_cast<std::size_t>(i)] / (2.0 * lead);
    }
    m(n - 2, n - 1) += 0.5;
    return eigenvalues(std::move(m));
}

std::vector<std::complex<double>> monic_roots(const std::vector<double>& ascending) {
    const int n = static_cast<int>(ascending.size());
    if (n == 0) return {};
    if (n == 1) {
        return {std::complex<double>(-ascending[0], 0.0)};
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -ascending[static_cast<std::size_t>(i)];
    return eigenvalues(std::move(m));
}

} // namespace ctpoly::detail
