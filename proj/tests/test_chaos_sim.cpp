#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ctpoly/chaos_sim.hpp"
#include "ctpoly/errors.hpp"
#include "test_support.hpp"

using namespace ctpoly;
using namespace testsupport;

TEST_CASE("map specs carry verified fixed points and multipliers") {
    const auto log38 = MapSpec::logistic(3.8);
    CHECK(log38.fixed_point() == doctest::Approx(1.0 - 1.0 / 3.8).epsilon(1e-14));
    CHECK(log38.multiplier() == doctest::Approx(2.0 - 3.8).epsilon(1e-12));

    const auto cub = MapSpec::cubic(2.0);
    CHECK(cub.fixed_point() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(cub.multiplier() == doctest::Approx(-1.0).epsilon(1e-10));

    // custom: f(x) = x^2 has fixed points 0 and 1
    const auto sq = MapSpec::custom_polynomial({0.0, 0.0, 1.0}, 0.9);
    CHECK(sq.fixed_point() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sq.multiplier() == doctest::Approx(2.0).epsilon(1e-10));

    const auto eng = MapSpec::engineered(0.5, -2.3);
    CHECK(eng.fixed_point() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eng.multiplier() == doctest::Approx(-2.3).epsilon(1e-12));

    CHECK_THROWS_AS(MapSpec::logistic(0.5), InvalidInput);
    CHECK_THROWS_AS(MapSpec::custom_polynomial({1.0, 0.0, 1.0}, 0.0),
                    ConvergenceError); // x^2 + 1 has no real fixed point
}

TEST_CASE("logistic r = 3.8 under two-step optimal control converges") {
    const auto map = MapSpec::logistic(3.8);
    const auto a = optimal_coeffs(2);
    const std::vector<double> x0(2, 0.7);
    const auto trace = simulate(map, a, x0, 500);
    CHECK(trace.converged);
    CHECK(trace.final_error <= 1e-9);
    CHECK(std::abs(trace.states.back() - map.fixed_point()) <= 1e-9);
    CHECK(!trace.diverged_at.has_value());
}

TEST_CASE("logistic r = 3.8 without control stays chaotic") {
    const auto map = MapSpec::logistic(3.8);
    const auto trace =
        simulate(map, CoefficientVector({1.0}), {0.7}, 500);
    CHECK(!trace.converged);
    CHECK(trace.final_error > 1e-9);
}

TEST_CASE("logistic r = 2.5 is already stable under plain iteration") {
    const auto map = MapSpec::logistic(2.5);
    const auto trace =
        simulate(map, CoefficientVector({1.0}), {0.7}, 200);
    CHECK(trace.converged);
}

TEST_CASE("simulate validates inputs and flags divergence") {
    const auto map = MapSpec::logistic(3.8);
    const auto a = optimal_coeffs(2);
    CHECK_THROWS_AS(simulate(map, a, {0.7}, 100), InvalidInput);
    CHECK_THROWS_AS(simulate(map, a, {0.7, 0.7}, 1), InvalidInput);

    // an orbit pushed far outside [0, 1] escapes to -infinity
    const auto bad = simulate(map, CoefficientVector({1.0}), {2.5}, 100);
    CHECK(!bad.converged);
    CHECK(bad.diverged_at.has_value());
}

TEST_CASE("multiplier interval") {
    const auto i2 = multiplier_interval(2, optimal_coeffs(2));
    CHECK(i2.first == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(i2.second == doctest::Approx(1.0).epsilon(1e-9));

    const auto i1 = multiplier_interval(1, CoefficientVector({1.0}));
    CHECK(i1.first == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(i1.second == doctest::Approx(1.0).epsilon(1e-12));

    const auto i9 = multiplier_interval(9, optimal_coeffs(9));
    const double half = kPi / 20.0;
    const double cot2 = std::pow(std::cos(half) / std::sin(half), 2);
    CHECK(i9.first == doctest::Approx(-cot2).epsilon(1e-9));
    CHECK(i9.second == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(i9.first == doctest::Approx(-39.86).epsilon(1e-3));

    CHECK_THROWS_AS(multiplier_interval(3, optimal_coeffs(2)), InvalidInput);
}

TEST_CASE("closed-loop spectral radius matches the hand-computed case") {
    // mu = -1.8, n = 2 optimum: lambda^2 + 1.2 lambda + 0.6, |roots| = sqrt(0.6)
    const double r = closed_loop_spectral_radius(optimal_coeffs(2), -1.8);
    CHECK(r == doctest::Approx(std::sqrt(0.6)).epsilon(1e-10));
    CHECK(r < 1.0);
}

TEST_CASE("numerical Jacobian of the n-step update reproduces the family") {
    // state (x_k, ..., x_{k-n+1}) -> (f(sum a_j x_{k+1-j}), x_k, ...)
    const auto map = MapSpec::logistic(3.8);
    for (int n : {2, 3, 5}) {
        const auto a = optimal_coeffs(n);
        const double xs = map.fixed_point();
        const double h = 1e-7;
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
        for (int col = 0; col < n; ++col) {
            auto step = [&](double bump) {
                std::vector<double> state(static_cast<std::size_t>(n), xs);
                state[static_cast<std::size_t>(col)] += bump;
                double avg = 0.0;
                for (int j = 1; j <= n; ++j) {
                    avg += a.a(j) * state[static_cast<std::size_t>(j - 1)];
                }
                return map(avg);
            };
            jac(0, col) = (step(h) - step(-h)) / (2.0 * h);
            if (col + 1 < n) jac(col + 1, col) = 1.0;
        }
        const auto eig = jac.eigenvalues();

        // roots of lambda^n + k(a_1 lambda^{n-1} + ...) with k = -mu,
        // via the characteristic polynomial evaluated at each eigenvalue
        for (int i = 0; i < eig.size(); ++i) {
            std::complex<double> z = eig(i);
            std::complex<double> p = std::pow(z, n);
            for (int j = 1; j <= n; ++j) {
                p += -map.multiplier() * a.a(j) * std::pow(z, n - j);
            }
            CHECK(std::abs(p) < 1e-6);
        }
    }
}

TEST_CASE("spectral radii at a fixed multiplier are reported per degree") {
    // no ordering asserted across n; the radii just have to be valid and
    // strictly contractive whenever mu lies inside the interval
    const double mu = -1.8;
    for (int n = 1; n <= 6; ++n) {
        const auto a = optimal_coeffs(n);
        const auto [lo, hi] = multiplier_interval(n, a);
        const double r = closed_loop_spectral_radius(a, mu);
        CHECK(r > 0.0);
        if (mu > lo && mu < hi) {
            CHECK(r < 1.0);
        } else {
            CHECK(r >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("interval sharpness: 5 percent probes around the lower edge") {
    for (int n : {2, 3}) {
        const auto a = optimal_coeffs(n);
        const auto [mu_lo, mu_hi] = multiplier_interval(n, a);
        for (bool inside : {true, false}) {
            const double mu = inside ? mu_lo + 0.05 * std::abs(mu_lo)
                                     : mu_lo - 0.05 * std::abs(mu_lo);
            const auto map = MapSpec::engineered(0.5, mu);
            const double radius = closed_loop_spectral_radius(a, mu);
            const int steps = inside
                ? std::min(200000, static_cast<int>(std::log(1e-13) /
                                                    std::log(radius)) + 100)
                : 20000;
            std::vector<double> x0(static_cast<std::size_t>(n),
                                   map.fixed_point() + 1e-3);
            const auto trace = simulate(map, a, x0, steps);
            CHECK(trace.converged == inside);
        }
    }
}
