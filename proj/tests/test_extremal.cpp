#include <doctest.h>

#include <cmath>

#include "ctpoly/errors.hpp"
#include "ctpoly/extremal.hpp"
#include "ctpoly/trigpoly.hpp"
#include "test_support.hpp"

using namespace ctpoly;
using namespace testsupport;

TEST_CASE("n = 1 search is exact") {
    const auto r = brute_force_sup(1, 100, 2, 3);
    CHECK(r.best_value == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r.theorem_value == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r.gap == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.best_coeffs == std::vector<double>{1.0});
}

TEST_CASE("n = 2 search reaches the closed form") {
    const auto r = brute_force_sup(2, 400, 2, 5);
    CHECK(std::abs(r.gap) < 1e-4);
    CHECK(r.best_value <= r.theorem_value + 1e-6);
    CHECK(r.best_coeffs.size() == 2);
    CHECK(r.best_coeffs[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
    CHECK(r.evaluations > 400);
}

TEST_CASE("n = 3 search reaches the closed form") {
    const auto r = brute_force_sup(3, 80, 3, 5);
    const double tan8 = std::tan(kPi / 8.0);
    CHECK(r.theorem_value == doctest::Approx(-tan8 * tan8).epsilon(1e-14));
    CHECK(std::abs(r.gap) < 1e-3);
}

TEST_CASE("n = 4 search stays under the bound and approaches the optimum") {
    const auto r = brute_force_sup(4, 12, 3, 9);
    CHECK(r.best_value <= r.theorem_value + 1e-6);
    CHECK(std::abs(r.gap) < 1e-2);
}

TEST_CASE("search is deterministic in the seed and worker count") {
    const auto a = brute_force_sup(2, 200, 2, 42, 1);
    const auto b = brute_force_sup(2, 200, 2, 42, 1);
    const auto c = brute_force_sup(2, 200, 2, 42, 4);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_coeffs == b.best_coeffs);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.best_value == c.best_value);
    CHECK(a.best_coeffs == c.best_coeffs);
    CHECK(a.evaluations == c.evaluations);

    const auto d = brute_force_sup(2, 200, 2, 43, 1);
    CHECK(d.gap >= -1e-6); // different seed still respects the bound
}

TEST_CASE("search validates its inputs") {
    CHECK_THROWS_AS(brute_force_sup(6, 10, 1, 0), InvalidInput);
    CHECK_THROWS_AS(brute_force_sup(0, 10, 1, 0), InvalidInput);
    CHECK_THROWS_AS(brute_force_sup(2, 1, 1, 0), InvalidInput);
    CHECK_THROWS_AS(brute_force_sup(2, 10, -1, 0), InvalidInput);
}

TEST_CASE("epsilon convergence: frozen values") {
    auto seq = epsilon_convergence(2, {0.1});
    REQUIRE(seq.size() == 1);
    CHECK(seq[0].second == doctest::Approx(-13.0 / 33.0).epsilon(1e-12));
    CHECK(seq[0].second < -1.0 / 3.0);

    seq = epsilon_convergence(1, {0.5, 0.25, 0.1});
    for (const auto& [eps, r] : seq) {
        CHECK(r == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("epsilon convergence: monotone approach from below") {
    const double tan8 = std::tan(kPi / 8.0);
    const double target = -tan8 * tan8;
    const auto seq = epsilon_convergence(3, {0.1, 0.01, 0.001});
    REQUIRE(seq.size() == 3);
    double prev = -2.0;
    for (const auto& [eps, r] : seq) {
        CHECK(r < target);
        CHECK(r > prev);
        prev = r;
    }
    CHECK(target - seq.back().second < 0.002);
    CHECK(target - seq.back().second <= 2.0 * seq.back().first);
}

TEST_CASE("epsilon convergence over a decade sweep is strictly increasing") {
    for (int n : {2, 3, 4, 6}) {
        std::vector<double> eps;
        for (int k = 0; k < 10; ++k) eps.push_back(0.5 * std::pow(0.5, k));
        const auto seq = epsilon_convergence(n, eps);
        for (std::size_t i = 1; i < seq.size(); ++i) {
            CHECK(seq[i].second > seq[i - 1].second);
        }
    }
}

TEST_CASE("epsilon convergence validates the sequence") {
    CHECK_THROWS_AS(epsilon_convergence(2, {}), InvalidInput);
    CHECK_THROWS_AS(epsilon_convergence(2, {0.1, 0.2}), InvalidInput);
    CHECK_THROWS_AS(epsilon_convergence(2, {0.1, -0.05}), InvalidInput);
}
