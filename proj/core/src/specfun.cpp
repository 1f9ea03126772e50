#include "fracdiff/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracdiff/errors.hpp"

namespace fracdiff::specfun {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kSqrt2Pi = 2.50662827463100050241576528481104525L;
constexpr int kSeriesCap = 10000;
constexpr double kZSwitch = 5.0; // series/asymptotic split for Mittag-Leffler

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

long double sin_pi_l(long double x) {
    // x = 2n + r exactly, r in [-1, 1]
    long double r = std::remainderl(x, 2.0L);
    long double a = std::fabsl(r);
    long double s = (a <= 0.5L) ? std::sinl(kPi * a) : std::sinl(kPi * (1.0L - a));
    return r < 0 ? -s : s;
}

// Lanczos approximation (g = 7, 9 coefficients), valid for x >= 0.5.
// Evaluated in long double so the pow/exp roundoff stays below 1e-15 relative.
long double lanczos_gamma(long double x) {
    static const long double c[9] = {
        0.99999999999980993L,
        676.5203681218851L,
        -1259.1392167224028L,
        771.32342877765313L,
        -176.61502916214059L,
        12.507343278686905L,
        -0.13857109526572012L,
        9.9843695780195716e-6L,
        1.5056327351493116e-7L,
    };
    const long double g = 7.0L;
    long double z = x - 1.0L;
    long double a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
    long double t = z + g + 0.5L;
    return kSqrt2Pi * std::powl(t, z + 0.5L) * std::expl(-t) * a;
}

long double gamma_l(long double x) {
    if (x >= 0.5L) return lanczos_gamma(x);
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    return kPi / (sin_pi_l(x) * lanczos_gamma(1.0L - x));
}

struct SeriesTolerances {
    double abs_tol = 0.0;
    double rel_tol = 0.0;
    double stop_scale(double sum_abs) const {
        return std::max(abs_tol, rel_tol * std::max(1.0, sum_abs));
    }
};

// Taylor-series engine shared by the Mittag-Leffler and Wright evaluations.
// coeff(k) must return 1/Gamma(arg_k); weight tracks z^k or z^k/k!.
template <typename CoeffFn, typename WeightStep>
SeriesEvalReport sum_series(double z, CoeffFn coeff, WeightStep advance_weight,
                            const SeriesTolerances& tol, const char* name,
                            bool relative_stop_rule) {
    double sum = 0.0, comp = 0.0, abs_sum = 0.0;
    double weight = 1.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    double ratio = 1.0;
    int decreasing = 0;
    int k = 0;
    for (;;) {
        double term = weight * coeff(k);
        if (std::fabs(term) > 1e250) {
            throw std::range_error(std::string(name) +
                                   ": series terms exceed binary64 summation range");
        }
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        abs_sum += std::fabs(term);

        double mag = std::fabs(term);
        if (mag < prev_mag) {
            ratio = prev_mag > 0 ? mag / prev_mag : 0.0;
            ++decreasing;
        } else {
            decreasing = 0;
        }
        prev_mag = mag;

        if (k >= 4 && decreasing >= 3 && ratio <= 0.9) {
            double tail = mag * ratio / (1.0 - ratio);
            double goal = tol.stop_scale(std::fabs(sum));
            bool small_enough = relative_stop_rule
                                    ? (abs_sum > 0 && mag / abs_sum < std::max(tol.abs_tol, tol.rel_tol))
                                    : true;
            if (small_enough && tail <= 0.5 * goal) {
                double roundoff = 2.0 * std::numeric_limits<double>::epsilon() * abs_sum;
                SeriesEvalReport rep;
                rep.value = sum;
                rep.terms_used = k + 1;
                rep.truncation_bound = tail + roundoff;
                return rep;
            }
        }
        ++k;
        if (k >= kSeriesCap) {
            std::ostringstream os;
            os << name << ": no convergence within " << kSeriesCap << " terms (z=" << z << ")";
            throw NonConvergenceError(os.str());
        }
        weight = advance_weight(weight, k);
    }
}

// E_{rho,beta}(z) for large positive z: term-recursive summation in log space.
// All series terms are positive once rho k + beta > 0, so there is no
// cancellation; precision is limited only by the exp/lgamma evaluations.
SeriesEvalReport ml_large_positive(double rho, double beta, double z, double tol_abs,
                                   double tol_rel) {
    if (beta <= 0.0) {
        throw std::range_error("mittag_leffler: z > 5 requires beta > 0 in this build");
    }
    // value ~ (1/rho) exp(z^{1/rho}); refuse arguments that overflow long double
    long double zpow = std::expl(std::logl((long double)z) / (long double)rho);
    if (zpow > 11000.0L) {
        throw std::range_error("mittag_leffler: E_{rho,beta}(z) overflows for this z");
    }
    const long double lz = std::logl((long double)z);
    long double sum = 0.0L;
    long double prev = std::numeric_limits<long double>::infinity();
    int decreasing = 0;
    for (int k = 0; k < kSeriesCap; ++k) {
        long double lt = k * lz - std::lgammal((long double)rho * k + (long double)beta);
        long double term = std::expl(lt);
        sum += term;
        if (term < prev) ++decreasing; else decreasing = 0;
        if (decreasing >= 3 && prev > 0) {
            long double r = term / prev;
            if (r <= 0.5L) {
                long double tail = term * r / (1.0L - r);
                long double goal = std::max((long double)tol_abs,
                                            (long double)tol_rel * std::max(1.0L, sum));
                if (tail <= 0.5L * goal) {
                    SeriesEvalReport rep;
                    rep.value = (double)sum;
                    if (!std::isfinite(rep.value)) {
                        throw std::range_error("mittag_leffler: value overflows binary64");
                    }
                    rep.terms_used = k + 1;
                    rep.truncation_bound = (double)(tail + 2e-16L * sum);
                    rep.converged = rep.truncation_bound <=
                                    std::max(tol_abs, tol_rel * std::max(1.0, std::fabs(rep.value)));
                    return rep;
                }
            }
        }
        prev = term;
    }
    throw NonConvergenceError("mittag_leffler: positive-z series hit the term cap");
}

// Asymptotic expansion for z << -1: E_{rho,beta}(z) ~ -sum_{j>=1} z^{-j}/Gamma(beta - rho j),
// truncated at the smallest term. Returns the value and the first omitted term
// as the error estimate.
SeriesEvalReport ml_asymptotic_negative(double rho, double beta, double z) {
    double zinv = 1.0 / z;
    double p = zinv; // z^{-j}
    double sum = 0.0;
    double smallest_kept = std::numeric_limits<double>::infinity();
    int used = 0;
    for (int j = 1; j <= 200; ++j) {
        double term = -p * reciprocal_gamma(beta - rho * j);
        double mag = std::fabs(term);
        if (mag > 0.0 && mag >= smallest_kept) break; // smallest-term truncation
        sum += term;
        ++used;
        if (mag > 0.0) smallest_kept = mag;
        p *= zinv;
    }
    SeriesEvalReport rep;
    rep.value = sum;
    rep.terms_used = std::max(used, 1);
    // the error of an optimally truncated asymptotic series is of the order
    // of its smallest retained term
    rep.truncation_bound = std::isfinite(smallest_kept) ? smallest_kept : 1.0;
    return rep;
}

SeriesEvalReport ml_engine(double rho, double beta, double z, double tol_abs, double tol_rel) {
    if (!(rho > 0.0)) throw std::domain_error("mittag_leffler: rho must be positive");
    if (z > kZSwitch) return ml_large_positive(rho, beta, z, tol_abs, tol_rel);
    if (z < -kZSwitch) {
        SeriesEvalReport asym = ml_asymptotic_negative(rho, beta, z);
        double goal = std::max(tol_abs, tol_rel * std::max(1.0, std::fabs(asym.value)));
        if (asym.truncation_bound <= goal) {
            asym.converged = true;
            return asym;
        }
        // fall through to the Taylor series; for moderately large |z| it may
        // still beat the asymptotic estimate despite the cancellation
        SeriesTolerances tol{tol_abs, tol_rel};
        SeriesEvalReport ser = sum_series(
            z, [&](int k) { return reciprocal_gamma(rho * k + beta); },
            [&](double w, int) { return w * z; }, tol, "mittag_leffler", false);
        if (ser.truncation_bound <= goal) {
            ser.converged = true;
            return ser;
        }
        std::ostringstream os;
        os << "mittag_leffler: neither series (" << ser.truncation_bound
           << ") nor asymptotic (" << asym.truncation_bound << ") path meets tol at z=" << z;
        throw NonConvergenceError(os.str());
    }
    SeriesTolerances tol{tol_abs, tol_rel};
    SeriesEvalReport rep = sum_series(
        z, [&](int k) { return reciprocal_gamma(rho * k + beta); },
        [&](double w, int) { return w * z; }, tol, "mittag_leffler", false);
    double goal = std::max(tol_abs, tol_rel * std::max(1.0, std::fabs(rep.value)));
    rep.converged = rep.truncation_bound <= goal;
    if (!rep.converged) {
        std::ostringstream os;
        os << "mittag_leffler: truncation bound " << rep.truncation_bound
           << " exceeds tol " << tol_abs << " at z=" << z;
        throw NonConvergenceError(os.str());
    }
    return rep;
}

} // namespace

namespace detail {

double sin_pi(double x) { return (double)sin_pi_l((long double)x); }

SignedLogGamma signed_log_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        return {-std::numeric_limits<double>::infinity(), 0};
    }
    if (x > 0.0) return {(double)std::lgammal((long double)x), 1};
    long double s = sin_pi_l((long double)x);
    long double la = std::logl(kPi) - std::logl(std::fabsl(s)) -
                     std::lgammal(1.0L - (long double)x);
    return {(double)la, s > 0 ? 1 : -1};
}

SeriesEvalReport mittag_leffler_scaled(double rho, double beta, double z, double rel_tol) {
    return ml_engine(rho, beta, z, 0.0, rel_tol);
}

} // namespace detail

double gamma(double x) {
    if (is_nonpositive_integer(x)) {
        std::ostringstream os;
        os << "gamma: pole at nonpositive integer x=" << x;
        throw std::domain_error(os.str());
    }
    long double r = gamma_l((long double)x);
    double d = (double)r;
    if (!std::isfinite(d)) {
        std::ostringstream os;
        os << "gamma: overflow at x=" << x;
        throw std::range_error(os.str());
    }
    return d;
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x >= 0.5) {
        if (x > 171.0) {
            // 1/Gamma underflows smoothly; go through logs
            return (double)std::expl(-std::lgammal((long double)x));
        }
        return (double)(1.0L / lanczos_gamma((long double)x));
    }
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    long double one_minus = 1.0L - (long double)x;
    if (one_minus <= 171.0L) {
        return (double)(sin_pi_l((long double)x) * lanczos_gamma(one_minus) / kPi);
    }
    long double s = sin_pi_l((long double)x);
    long double mag = std::expl(std::lgammal(one_minus) + std::logl(std::fabsl(s)) - std::logl(kPi));
    return (double)(s < 0 ? -mag : mag);
}

SeriesEvalReport mittag_leffler(double rho, double beta, double z, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("mittag_leffler: tol must be positive");
    return ml_engine(rho, beta, z, tol, 0.0);
}

double mittag_leffler_time_derivative(const FractionalOrder& order, double c, double t) {
    if (!(t > 0.0)) throw std::domain_error("mittag_leffler_time_derivative: t must be positive");
    if (c == 0.0) return 0.0;
    double a = order.alpha();
    double z = c * std::pow(t, a);
    SeriesEvalReport e = ml_engine(a, a, z, 0.0, 1e-12);
    return c * std::pow(t, a - 1.0) * e.value;
}

SeriesEvalReport wright(double z, double rho, double beta, double tol) {
    if (!(rho > -1.0)) throw std::domain_error("wright: rho must exceed -1");
    if (!(tol > 0.0)) throw std::domain_error("wright: tol must be positive");
    SeriesTolerances tt{tol, 0.0};
    SeriesEvalReport rep = sum_series(
        z, [&](int k) { return reciprocal_gamma(rho * k + beta); },
        [&](double w, int k) { return w * z / k; }, tt, "wright", true);
    rep.converged = rep.truncation_bound <= tol;
    if (!rep.converged) {
        std::ostringstream os;
        os << "wright: truncation bound " << rep.truncation_bound << " exceeds tol " << tol
           << " at z=" << z << ", rho=" << rho;
        throw NonConvergenceError(os.str());
    }
    return rep;
}

double fractional_erf(double x, const FractionalOrder& order) {
    if (!(x >= 0.0)) throw std::domain_error("fractional_erf: x must be nonnegative");
    SeriesEvalReport w = wright(-x, -order.alpha() / 2.0, 1.0, 1e-12);
    return 1.0 - w.value;
}

} // namespace fracdiff::specfun
