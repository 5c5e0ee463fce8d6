#pragma once

// Shared test utilities. The evaluation helpers here are deliberately naive
// (term-by-term std::sin/std::cos, textbook Jury table) so they stay
// independent of the library's Clenshaw / eigenvalue implementations and can
// serve as oracles against them.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "ctpoly/trigpoly.hpp"

namespace testsupport {

inline constexpr double kPi = std::numbers::pi;

/// sum a_j cos(jt) by direct summation.
inline double naive_c(const std::vector<double>& a, double t) {
    double v = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        v += a[j] * std::cos(static_cast<double>(j + 1) * t);
    }
    return v;
}

/// sum a_j sin(jt) by direct summation.
inline double naive_s(const std::vector<double>& a, double t) {
    double v = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        v += a[j] * std::sin(static_cast<double>(j + 1) * t);
    }
    return v;
}

/// sum a_j z^j for z on the unit circle.
inline std::complex<double> naive_f(const std::vector<double>& a, double t) {
    std::complex<double> v = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        v += a[j] * std::exp(std::complex<double>(0.0, static_cast<double>(j + 1) * t));
    }
    return v;
}

/// Random coefficients with exact-sum normalization (uniform coordinates
/// shifted so the sum is 1 up to rounding).
inline ctpoly::CoefficientVector random_normalized(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& x : a) {
        x = u(rng);
        sum += x;
    }
    const double shift = (1.0 - sum) / n;
    for (double& x : a) x += shift;
    return ctpoly::CoefficientVector(std::move(a));
}

/// Schur-Cohn (Jury reduction) stability test for a real polynomial given in
/// ascending coefficients p[0] + p[1] z + ... + p[m] z^m. Strict inequality
/// version: true iff all roots satisfy |z| < 1. Independent of the
/// eigenvalue path used by the library.
inline bool jury_stable(std::vector<double> p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    if (p.size() <= 1) return true; // constant: no roots
    while (p.size() > 1) {
        const double a0 = p.front();
        const double am = p.back();
        if (std::abs(a0) >= std::abs(am)) return false; // |prod roots| >= 1
        // next row: b_k = am * p_k - a0 * p_{m-k}, degree drops by one
        const std::size_t m = p.size() - 1;
        std::vector<double> q(m);
        for (std::size_t k = 0; k < m; ++k) {
            q[k] = am * p[k + 1] - a0 * p[m - 1 - k];
        }
        p = std::move(q);
    }
    return true;
}

} // namespace testsupport
