#pragma once

// Kernel-weighted local polynomial likelihood for the calibration function
// eta(x). Around a point x0 the model is eta(x) ~ sum_k beta_k (x - x0)^k and
//   l(beta) = sum_i w_i log c(u_i, v_i | g^{-1}(x_i' beta)),
// with w_i = K((x_i - x0) / h). The estimate at x0 is beta_0.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "localcop/copula.hpp"
#include "localcop/dataset.hpp"
#include "localcop/kernels.hpp"

namespace localcop {

inline constexpr int kMaxDegree = 4;

struct FitConfig {
  CopulaFamily family = CopulaFamily::Gaussian;
  std::optional<double> nu;  // Student-t only; defaults to kDefaultNu
  KernelSpec kernel;
  int degree = 1;
  double opt_tol = 1e-6;
  int max_iter = 100;
};

/// Throws ConfigError for a bad degree, tolerance or iteration cap and
/// DomainError for an invalid nu.
void validate_config(const FitConfig& cfg);

struct LocalFitPoint {
  double x0 = 0.0;
  std::vector<double> beta;
  double eta = 0.0;  // beta[0]; NaN when the point could not be fitted
  bool converged = false;
  int n_iter = 0;
  double grad_norm = 0.0;  // max-norm of the score at beta
  double loglik = 0.0;
};

struct LocalFitCurve {
  std::vector<LocalFitPoint> points;
  CopulaFamily family = CopulaFamily::Gaussian;
  std::optional<double> nu;
  KernelSpec kernel;
  int degree = 1;
};

enum class InitStrategy { Global, Warm };

/// (1, x_i - x0, ..., (x_i - x0)^degree)
std::vector<double> design_row(double xi, double x0, int degree);

double local_loglik(const std::vector<double>& beta, const Dataset& data,
                    double x0, const FitConfig& cfg);
std::vector<double> local_score(const std::vector<double>& beta,
                                const Dataset& data, double x0,
                                const FitConfig& cfg);

/// Starting eta for a family given an empirical Kendall tau: tau is clamped
/// to [-0.95, 0.95] (Clayton and Gumbel to [0.05, 0.95]) and mapped through
/// tau_to_par and the link. Frank with |tau| < 1e-6 starts at eta = 0.
double initial_eta(CopulaFamily family, double tau_hat);

/// Maximizes the local likelihood at x0. Without `init` the start is
/// (initial_eta(empirical tau of the data), 0, ..., 0). Throws
/// DegenerateWindowError when fewer than degree + 1 observations carry
/// weight; non-convergence is reported through the flag.
LocalFitPoint fit_point(const Dataset& data, double x0, const FitConfig& cfg,
                        std::optional<std::vector<double>> init = std::nullopt);

/// Fits every grid point. Global init runs the points on up to `threads`
/// workers (0 = hardware concurrency) and is independent of the worker
/// count; warm init is a sequential sweep reusing the previous solution.
/// Points that cannot be fitted come back with converged = false and NaN
/// estimates.
LocalFitCurve fit_curve(const Dataset& data, const std::vector<double>& grid,
                        const FitConfig& cfg,
                        InitStrategy init = InitStrategy::Global,
                        unsigned threads = 0);

/// (x0, tau) along the curve; NaN tau where eta is NaN.
std::vector<std::pair<double, double>> curve_to_tau(const LocalFitCurve& curve);

/// Shared machinery for repeated fits on one dataset. The per-observation
/// copula transforms are computed once in the constructor. The dataset must
/// outlive the object.
class LocalLikelihood {
 public:
  LocalLikelihood(const Dataset& data, const FitConfig& cfg);

  /// Active observations around x0 with their weights. `exclude` drops one
  /// observation, which is how leave-one-out refits are run.
  struct Window {
    double x0 = 0.0;
    std::vector<std::size_t> index;
    std::vector<double> weight;
    std::vector<double> dx;  // x_i - x0
  };
  Window window(double x0, std::optional<std::size_t> exclude = std::nullopt) const;

  /// Objective and (optionally) score with respect to beta.
  double evaluate(const Window& win, const std::vector<double>& beta,
                  std::vector<double>* score) const;

  LocalFitPoint fit(const Window& win, const std::vector<double>& init) const;

  const FitConfig& config() const { return cfg_; }

 private:
  // Same as evaluate() but in the rescaled coordinates gamma_k = beta_k h^k
  // that the optimizer works in.
  double evaluate_scaled(const Window& win, const std::vector<double>& gamma,
                         std::vector<double>& score) const;

  const Dataset& data_;
  FitConfig cfg_;
  DensityEvaluator density_;
  std::vector<PreparedPair> prepared_;
};

}  // namespace localcop
