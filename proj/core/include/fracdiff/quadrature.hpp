#pragma once

#include <functional>

namespace fracdiff::quadrature {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a,b] down to an absolute tolerance.
// Endpoints are never evaluated, so integrable endpoint singularities are
// handled by bisection. Throws NonConvergenceError when the subdivision
// budget runs out before the tolerance is met.
QuadResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth = 60);

} // namespace fracdiff::quadrature
