#pragma once

#include "fracdiff/fractional_order.hpp"

namespace fracdiff::specfun {

// Outcome of a truncated series evaluation. `truncation_bound` is an absolute
// estimate of the neglected tail plus accumulated roundoff; `converged` means
// that bound met the requested tolerance.
struct SeriesEvalReport {
    double value = 0.0;
    int terms_used = 0;
    double truncation_bound = 0.0;
    bool converged = false;
};

// Gamma function on the real line, poles excluded.
// Throws std::domain_error at nonpositive integers and std::range_error
// where the result overflows binary64.
double gamma(double x);

// 1/Gamma(x), a total function: exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

// Two-parameter Mittag-Leffler function E_{rho,beta}(z) = sum z^k / Gamma(rho k + beta).
// Power series (with compensated summation) for |z| <= 5; for z < -5 an
// asymptotic expansion with smallest-term truncation; large positive z is
// summed term-recursively in log space and requires beta > 0.
// Throws NonConvergenceError when no path meets `tol`, std::range_error when
// the value itself is not representable.
SeriesEvalReport mittag_leffler(double rho, double beta, double z, double tol);

// d/dt E_alpha(c t^alpha) = c t^{alpha-1} E_{alpha,alpha}(c t^alpha), t > 0.
double mittag_leffler_time_derivative(const FractionalOrder& order, double c, double t);

// Wright function W(z; rho, beta) = sum z^k / (k! Gamma(rho k + beta)), rho > -1.
SeriesEvalReport wright(double z, double rho, double beta, double tol);

// Fractional error function 1 - W(-x, -alpha/2, 1), x >= 0.
// Tends to erf(x/2) as alpha -> 1.
double fractional_erf(double x, const FractionalOrder& order);

namespace detail {
// sin(pi*x) with exact argument reduction, so zeros at integers are exact.
double sin_pi(double x);
// log|Gamma(x)| and the sign of Gamma(x); sign is 0 at the poles.
struct SignedLogGamma {
    double log_abs;
    int sign;
};
SignedLogGamma signed_log_gamma(double x);
// Mittag-Leffler with a tolerance relative to the value (library-internal:
// the Hopf barrier evaluates E at arguments where the value is huge and an
// absolute bound would be unusable). `converged` is set against the scaled goal.
SeriesEvalReport mittag_leffler_scaled(double rho, double beta, double z, double rel_tol);
} // namespace detail

} // namespace fracdiff::specfun
