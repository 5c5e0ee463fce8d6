#include "ctpoly/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "ctpoly/errors.hpp"
#include "ctpoly/rootfind.hpp"

namespace ctpoly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSearchBox = 2.0;       // sum |a_j| <= 2
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kShrinkTol = 1e-10;
constexpr int kSimplexIterCap = 2000;

double theorem_value_for(int n) {
    const double t = std::tan(kPi / (2.0 * (n + 1)));
    return -t * t;
}

// rho1 over the free coordinates (a_1..a_{n-1}); a_n restores the
// normalization. Points outside the coefficient box, and the rare points
// where the zero finder gives up, score -inf.
double objective(const std::vector<double>& free_coords) {
    double sum = 0.0, abs = 0.0;
    for (double x : free_coords) {
        sum += x;
        abs += std::abs(x);
    }
    const double last = 1.0 - sum;
    if (abs + std::abs(last) > kSearchBox + 1e-12) return kNegInf;
    std::vector<double> a = free_coords;
    a.push_back(last);
    try {
        return rho1(CoefficientVector(std::move(a)));
    } catch (const ConvergenceError&) {
        return kNegInf;
    }
}

struct Candidate {
    double value = kNegInf;
    std::vector<double> point;
};

// Derivative-free simplex descent (maximization). rho1 is continuous but
// not smooth where the zero set reconfigures, which Nelder-Mead tolerates.
Candidate nelder_mead(std::vector<double> start, double step,
                      long long* evaluations) {
    const std::size_t d = start.size();
    std::vector<std::vector<double>> pts(d + 1, start);
    std::vector<double> vals(d + 1);
    for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step;
    for (std::size_t i = 0; i <= d; ++i) {
        vals[i] = objective(pts[i]);
        ++*evaluations;
    }

    auto order = [&] {
        std::vector<std::size_t> idx(d + 1);
        for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        return idx;
    };

    for (int iter = 0; iter < kSimplexIterCap; ++iter) {
        const auto idx = order();
        const std::size_t best = idx.front(), worst = idx.back();

        double diameter = 0.0;
        for (std::size_t i = 0; i <= d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                diameter = std::max(diameter,
                                    std::abs(pts[i][k] - pts[best][k]));
            }
        }
        if (diameter < kShrinkTol) break;

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[i][k];
        }
        for (double& x : centroid) x /= static_cast<double>(d);

        auto along = [&](double factor) {
            std::vector<double> p(d);
            for (std::size_t k = 0; k < d; ++k) {
                p[k] = centroid[k] + factor * (centroid[k] - pts[worst][k]);
            }
            return p;
        };

        std::vector<double> reflected = along(1.0);
        const double fr = objective(reflected);
        ++*evaluations;
        const double second_worst = vals[idx[d - 1]];

        if (fr > vals[best]) {
            std::vector<double> expanded = along(2.0);
            const double fe = objective(expanded);
            ++*evaluations;
            if (fe > fr) {
                pts[worst] = std::move(expanded);
                vals[worst] = fe;
            } else {
                pts[worst] = std::move(reflected);
                vals[worst] = fr;
            }
        } else if (fr > second_worst) {
            pts[worst] = std::move(reflected);
            vals[worst] = fr;
        } else {
            std::vector<double> contracted = along(-0.5);
            const double fc = objective(contracted);
            ++*evaluations;
            if (fc > vals[worst]) {
                pts[worst] = std::move(contracted);
                vals[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= d; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < d; ++k) {
                        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
                    }
                    vals[i] = objective(pts[i]);
                    ++*evaluations;
                }
            }
        }
    }

    const auto idx = order();
    return {vals[idx.front()], pts[idx.front()]};
}

} // namespace

SearchReport brute_force_sup(int n, int grid_density, int refinement_rounds,
                             std::uint64_t seed, int workers) {
    if (n < 1 || n > 5) {
        throw InvalidInput("brute force search supports 1 <= n <= 5");
    }
    if (grid_density < 2 && n > 1) {
        throw InvalidInput("grid density must be at least 2");
    }
    if (refinement_rounds < 0) {
        throw InvalidInput("refinement rounds must be >= 0");
    }
    workers = std::clamp(workers, 1,
                         static_cast<int>(std::thread::hardware_concurrency() > 0
                                              ? std::thread::hardware_concurrency()
                                              : 1));

    SearchReport report;
    report.n = n;
    report.seed = seed;
    report.theorem_value = theorem_value_for(n);

    if (n == 1) {
        report.best_value = objective({});
        report.best_coeffs = {1.0};
        report.evaluations = 1;
        report.gap = report.theorem_value - report.best_value;
        return report;
    }

    const std::size_t d = static_cast<std::size_t>(n - 1);
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) {
        if (total > 10'000'000 / static_cast<std::size_t>(grid_density)) {
            throw InvalidInput("grid too large; lower the density");
        }
        total *= static_cast<std::size_t>(grid_density);
    }

    auto point_at = [&](std::size_t index) {
        std::vector<double> p(d);
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t i = index % static_cast<std::size_t>(grid_density);
            index /= static_cast<std::size_t>(grid_density);
            p[k] = -kSearchBox + 2.0 * kSearchBox * static_cast<double>(i) /
                                     (grid_density - 1);
        }
        return p;
    };

    // Full value table filled by workers over disjoint ranges, then scanned
    // once; the result is identical for any worker count.
    std::vector<double> values(total, kNegInf);
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) values[i] = objective(point_at(i));
    };
    if (workers == 1 || total < 1024) {
        run_range(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = std::min(total, static_cast<std::size_t>(w) * chunk);
            const std::size_t hi = std::min(total, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    report.evaluations += static_cast<long long>(total);

    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < total; ++i) {
        if (values[i] == kNegInf) continue;
        top.push_back(i);
        std::stable_sort(top.begin(), top.end(), [&](std::size_t a, std::size_t b) {
            return values[a] > values[b];
        });
        if (top.size() > 10) top.pop_back();
    }
    if (top.empty()) {
        throw ConsistencyError("no feasible grid point inside the search box");
    }

    Candidate best{values[top.front()], point_at(top.front())};
    const double spacing = 2.0 * kSearchBox / (grid_density - 1);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);

    for (int round = 0; round < refinement_rounds; ++round) {
        const double step = spacing / std::pow(4.0, round);
        for (std::size_t s = 0; s < top.size(); ++s) {
            std::vector<double> start =
                round == 0 ? point_at(top[s]) : best.point;
            if (round > 0) {
                for (double& x : start) x += step * jitter(rng);
            }
            Candidate c = nelder_mead(std::move(start), step, &report.evaluations);
            if (c.value > best.value) best = std::move(c);
        }
    }

    report.best_value = best.value;
    report.best_coeffs = best.point;
    double sum = 0.0;
    for (double x : best.point) sum += x;
    report.best_coeffs.push_back(1.0 - sum);
    report.gap = report.theorem_value - report.best_value;
    if (report.gap < -1e-6) {
        throw ConsistencyError("search exceeded the closed-form optimum; "
                               "rho1 or the search is broken");
    }
    return report;
}

std::vector<std::pair<double, double>>
epsilon_convergence(int n, const std::vector<double>& eps_sequence) {
    if (eps_sequence.empty()) {
        throw InvalidInput("eps sequence must be non-empty");
    }
    for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
        if (!(eps_sequence[i] > 0.0)) {
            throw InvalidInput("eps values must be positive");
        }
        if (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1])) {
            throw InvalidInput("eps sequence must be strictly decreasing");
        }
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(eps_sequence.size());
    for (double eps : eps_sequence) {
        out.emplace_back(eps, rho(epsilon_family(n, eps)));
    }
    return out;
}

} // namespace ctpoly
