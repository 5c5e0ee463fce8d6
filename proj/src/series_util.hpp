#pragma once

// Internal recurrence helpers shared between modules. Not installed.

#include <vector>

namespace ctpoly::detail {

/// Backward recurrence u_k = a_k + 2c u_{k+1} - u_{k+2} over a raw
/// (not necessarily normalized) coefficient sequence. On return u1 is the
/// cosine part sum a_j U_{j-1}(c) and (c*u1 - u2, sin(t)*u1) evaluate the
/// conjugate pair at c = cos t.
void clenshaw_raw(const std::vector<double>& a, double c, double& u1,
                  double& u2);

/// sum_j a_j sin(j t) for a raw sequence.
double sine_poly_raw(const std::vector<double>& a, double t);

/// sum_j a_j cos(j t) for a raw sequence.
double cosine_poly_raw(const std::vector<double>& a, double t);

/// Cosine part sum a_j U_{j-1}(c) and its c-derivative.
void cosine_part_raw(const std::vector<double>& a, double c, double& q,
                     double& dq);

double abs_sum(const std::vector<double>& a);

} // namespace ctpoly::detail
