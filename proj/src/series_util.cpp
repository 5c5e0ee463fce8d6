#include "series_util.hpp"

#include <cmath>

namespace ctpoly::detail {

void clenshaw_raw(const std::vector<double>& a, double c, double& u1,
                  double& u2) {
    u1 = 0.0;
    u2 = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) {
        const double u = a[k] + 2.0 * c * u1 - u2;
        u2 = u1;
        u1 = u;
    }
}

double sine_poly_raw(const std::vector<double>& a, double t) {
    double u1 = 0.0, u2 = 0.0;
    clenshaw_raw(a, std::cos(t), u1, u2);
    return std::sin(t) * u1;
}

double cosine_poly_raw(const std::vector<double>& a, double t) {
    double u1 = 0.0, u2 = 0.0;
    clenshaw_raw(a, std::cos(t), u1, u2);
    return std::cos(t) * u1 - u2;
}

void cosine_part_raw(const std::vector<double>& a, double c, double& q,
                     double& dq) {
    double u1 = 0.0, u2 = 0.0;
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) {
        const double u = a[k] + 2.0 * c * u1 - u2;
        const double d = 2.0 * u1 + 2.0 * c * d1 - d2;
        u2 = u1;
        u1 = u;
        d2 = d1;
        d1 = d;
    }
    q = u1;
    dq = d1;
}

double abs_sum(const std::vector<double>& a) {
    double s = 0.0;
    for (double x : a) s += std::abs(x);
    return s;
}

} // namespace ctpoly::detail
