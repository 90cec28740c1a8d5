#pragma once

// Special functions and small numeric kernels used throughout the library:
// normal and Student-t distribution functions, log-gamma, the Debye
// function D1, bivariate normal/t CDFs, Gauss-Legendre rules and a
// bracketing root finder. Everything here is a pure function.

#include <cstddef>
#include <functional>
#include <vector>

namespace localcop::specials {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, in (-1, 1)
  std::vector<double> weights;  // positive, summing to 2
  std::size_t order = 0;
};

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// Gauss-Legendre rule of the given order on [-1, 1]. Rules are cached, so
/// repeated calls are cheap and thread-safe.
const QuadratureRule& gauss_legendre(std::size_t order);

/// Integrate f over [a, b] with a fixed Gauss-Legendre rule.
double integrate_fixed(const std::function<double(double)>& f, double a,
                       double b, const QuadratureRule& rule);

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Subdivides until the summed error estimate is below abs_tol or
/// max_intervals is reached.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-15,
                          std::size_t max_intervals = 400);

double std_norm_pdf(double z);
/// Saturates to exactly 0 / 1 for |z| > 40.
double std_norm_cdf(double z);
/// Wichura's AS241 (PPND16). Throws DomainError unless 0 < p < 1.
double std_norm_quantile(double p);

double log_gamma(double x);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

double student_t_log_pdf(double z, double nu);
double student_t_cdf(double z, double nu);
double student_t_quantile(double p, double nu);

/// D1(x) = (1/x) * integral_0^x t / (e^t - 1) dt.
double debye1(double x);

double bivariate_normal_cdf(double z1, double z2, double rho);
double bivariate_t_cdf(double z1, double z2, double rho, double nu);

inline constexpr double kBrentTol = 1e-10;
inline constexpr int kBrentMaxIter = 200;

/// Make a bracket by evaluating f at both ends.
RootBracket make_bracket(const std::function<double(double)>& f, double lo,
                         double hi);

/// Brent's method. Stops when |f| <= tol or the bracket is narrower than
/// tol; falls back to bisection whenever interpolation misbehaves.
/// Throws InvalidBracketError if f_lo and f_hi have the same strict sign.
double brent_root(const std::function<double(double)>& f,
                  const RootBracket& bracket, double tol = kBrentTol,
                  int max_iter = kBrentMaxIter);

}  // namespace localcop::specials
