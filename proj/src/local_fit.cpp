#include "localcop/local_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "localcop/errors.hpp"
#include "localcop/parallel.hpp"
#include "localcop/simulate.hpp"

namespace localcop {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kArmijo = 1e-4;
constexpr double kFlatSlack = 1e-12;
constexpr int kMaxHalvings = 60;
// Largest step, in units of eta, that one iteration may take.
constexpr double kMaxStep = 5.0;

std::optional<double> effective_nu(const FitConfig& cfg) {
  if (cfg.family != CopulaFamily::StudentT) return std::nullopt;
  return cfg.nu.value_or(kDefaultNu);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Accumulates value and score for eta_i = sum_k coef_k z_i^k.
double accumulate(const DensityEvaluator& density, CopulaFamily family,
                  const std::vector<PreparedPair>& prepared,
                  const LocalLikelihood::Window& win,
                  const std::vector<double>& coef, double z_scale,
                  std::vector<double>* score) {
  const std::size_t m = coef.size();
  if (score) score->assign(m, 0.0);
  double value = 0.0;
  for (std::size_t j = 0; j < win.index.size(); ++j) {
    const double z = win.dx[j] / z_scale;
    double eta = coef[m - 1];
    for (std::size_t k = m - 1; k-- > 0;) eta = eta * z + coef[k];
    const LogDensity ld = density.evaluate(prepared[win.index[j]], eta_to_par(family, eta));
    const double w = win.weight[j];
    value += w * ld.value;
    if (score) {
      double g = w * ld.dtheta * link_derivative(family, eta);
      for (std::size_t k = 0; k < m; ++k) {
        (*score)[k] += g;
        g *= z;
      }
    }
  }
  return value;
}

}  // namespace

void validate_config(const FitConfig& cfg) {
  if (cfg.degree < 0 || cfg.degree > kMaxDegree) {
    throw ConfigError("degree must be between 0 and " + std::to_string(kMaxDegree));
  }
  if (!(cfg.opt_tol > 0.0)) throw ConfigError("opt_tol must be positive");
  if (cfg.max_iter < 1) throw ConfigError("max_iter must be at least 1");
  if (!(cfg.kernel.band > 0.0) || !std::isfinite(cfg.kernel.band)) {
    throw DomainError("bandwidth must be positive and finite");
  }
  if (cfg.nu && (!(*cfg.nu > 0.0) || !std::isfinite(*cfg.nu))) {
    throw DomainError("nu must be positive and finite");
  }
}

std::vector<double> design_row(double xi, double x0, int degree) {
  if (degree < 0) throw ConfigError("degree must be nonnegative");
  std::vector<double> row(static_cast<std::size_t>(degree) + 1);
  const double d = xi - x0;
  double p = 1.0;
  for (double& r : row) {
    r = p;
    p *= d;
  }
  return row;
}

double local_loglik(const std::vector<double>& beta, const Dataset& data,
                    double x0, const FitConfig& cfg) {
  const LocalLikelihood lik(data, cfg);
  return lik.evaluate(lik.window(x0), beta, nullptr);
}

std::vector<double> local_score(const std::vector<double>& beta,
                                const Dataset& data, double x0,
                                const FitConfig& cfg) {
  const LocalLikelihood lik(data, cfg);
  std::vector<double> score;
  lik.evaluate(lik.window(x0), beta, &score);
  return score;
}

double initial_eta(CopulaFamily family, double tau_hat) {
  if (!std::isfinite(tau_hat)) tau_hat = 0.0;
  const bool positive_only = family == CopulaFamily::Clayton || family == CopulaFamily::Gumbel;
  const double tau = std::clamp(tau_hat, positive_only ? 0.05 : -0.95, 0.95);
  if (family == CopulaFamily::Frank && std::abs(tau) < 1e-6) return 0.0;
  return par_to_eta(family, tau_to_par(family, tau));
}

LocalLikelihood::LocalLikelihood(const Dataset& data, const FitConfig& cfg)
    : data_(data), cfg_(cfg), density_(cfg.family, effective_nu(cfg)) {
  validate_config(cfg_);
  cfg_.nu = effective_nu(cfg_);
  if (data.u1.size() != data.size() || data.u2.size() != data.size()) {
    throw LengthError("dataset columns differ in length");
  }
  if (data.size() == 0) throw LengthError("dataset is empty");
  prepared_.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    prepared_.push_back(density_.prepare(clamp_pair({data.u1[i], data.u2[i]})));
  }
}

LocalLikelihood::Window LocalLikelihood::window(double x0,
                                                std::optional<std::size_t> exclude) const {
  const std::vector<double> w = local_weights(data_.x, x0, cfg_.kernel);
  Window win;
  win.x0 = x0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0 && (!exclude || *exclude != i)) {
      win.index.push_back(i);
      win.weight.push_back(w[i]);
      win.dx.push_back(data_.x[i] - x0);
    }
  }
  if (win.index.empty()) {
    throw DegenerateWindowError("no observation has positive kernel weight");
  }
  return win;
}

double LocalLikelihood::evaluate(const Window& win, const std::vector<double>& beta,
                                 std::vector<double>* score) const {
  if (beta.size() != static_cast<std::size_t>(cfg_.degree) + 1) {
    throw LengthError("beta must have degree + 1 entries");
  }
  return accumulate(density_, cfg_.family, prepared_, win, beta, 1.0, score);
}

double LocalLikelihood::evaluate_scaled(const Window& win, const std::vector<double>& gamma,
                                        std::vector<double>& score) const {
  return accumulate(density_, cfg_.family, prepared_, win, gamma, cfg_.kernel.band, &score);
}

LocalFitPoint LocalLikelihood::fit(const Window& win, const std::vector<double>& init) const {
  const std::size_t m = static_cast<std::size_t>(cfg_.degree) + 1;
  if (init.size() != m) throw LengthError("initial beta must have degree + 1 entries");
  if (win.index.size() < m) {
    throw DegenerateWindowError("fewer observations with positive weight than coefficients");
  }

  // The optimizer works on gamma_k = beta_k h^k so that every coordinate
  // acts on eta at the scale of the kernel window.
  std::vector<double> scale(m);
  scale[0] = 1.0;
  for (std::size_t k = 1; k < m; ++k) scale[k] = scale[k - 1] * cfg_.kernel.band;
  auto beta_gradient_norm = [&](const std::vector<double>& g) {
    double n = 0.0;
    for (std::size_t k = 0; k < m; ++k) n = std::max(n, std::abs(g[k] * scale[k]));
    return n;
  };

  // Minimize f = -l.
  std::vector<double> x(m), g(m), x_new(m), g_new(m), d(m), s(m), y(m);
  for (std::size_t k = 0; k < m; ++k) x[k] = init[k] * scale[k];
  double f = -evaluate_scaled(win, x, g);
  for (double& gk : g) gk = -gk;

  LocalFitPoint out;
  out.x0 = win.x0;
  if (!std::isfinite(f) || !std::isfinite(max_abs(g))) {
    out.beta.assign(m, kNaN);
    out.eta = kNaN;
    out.grad_norm = std::numeric_limits<double>::infinity();
    out.loglik = kNaN;
    return out;
  }

  std::vector<double> h(m * m, 0.0);
  bool fresh = true;  // h is the unscaled identity
  auto reset = [&] {
    std::fill(h.begin(), h.end(), 0.0);
    for (std::size_t k = 0; k < m; ++k) h[k * m + k] = 1.0;
    fresh = true;
  };
  reset();

  int iter = 0;
  bool converged = false;
  while (true) {
    if (beta_gradient_norm(g) <= cfg_.opt_tol) {
      converged = true;
      break;
    }
    if (iter >= cfg_.max_iter) break;

    for (std::size_t i = 0; i < m; ++i) {
      d[i] = 0.0;
      for (std::size_t j = 0; j < m; ++j) d[i] -= h[i * m + j] * g[j];
    }
    if (dot(d, g) >= 0.0) {
      reset();
      for (std::size_t i = 0; i < m; ++i) d[i] = -g[i];
    }
    // First step from the identity: unit step in the largest coordinate.
    const double cap = fresh ? 1.0 : kMaxStep;
    const double dmax = max_abs(d);
    if (dmax > cap) {
      for (double& di : d) di *= cap / dmax;
    }

    const double slope = dot(g, d);
    double t = 1.0;
    double f_new = 0.0;
    bool accepted = false;
    for (int halving = 0; halving < kMaxHalvings; ++halving) {
      for (std::size_t i = 0; i < m; ++i) x_new[i] = x[i] + t * d[i];
      f_new = -evaluate_scaled(win, x_new, g_new);
      if (std::isfinite(f_new) && f_new <= f + kArmijo * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (accepted && f_new < f) {
      for (double& gi : g_new) gi = -gi;
    } else {
      // Near the optimum f is flat to rounding. Take the full step if f stays
      // within rounding noise and the gradient shrinks; otherwise stop.
      for (std::size_t i = 0; i < m; ++i) x_new[i] = x[i] + d[i];
      f_new = -evaluate_scaled(win, x_new, g_new);
      for (double& gi : g_new) gi = -gi;
      const double slack = kFlatSlack * std::max(1.0, std::abs(f));
      if (!std::isfinite(f_new) || f_new > f + slack ||
          !(beta_gradient_norm(g_new) < beta_gradient_norm(g))) {
        break;
      }
    }
    if (!std::isfinite(max_abs(g_new))) break;

    for (std::size_t i = 0; i < m; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      if (fresh) {
        const double gamma = sy / dot(y, y);
        for (double& hij : h) hij *= gamma;
        fresh = false;
      }
      // H <- (I - rho s y') H (I - rho y s') + rho s s'
      const double rho = 1.0 / sy;
      std::vector<double> hy(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) hy[i] += h[i * m + j] * y[j];
      }
      const double yhy = dot(y, hy);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          h[i * m + j] += rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
        }
      }
    }
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    ++iter;
  }

  out.beta.resize(m);
  for (std::size_t k = 0; k < m; ++k) out.beta[k] = x[k] / scale[k];
  out.eta = out.beta[0];
  out.converged = converged;
  out.n_iter = iter;
  out.grad_norm = beta_gradient_norm(g);
  out.loglik = -f;
  return out;
}

LocalFitPoint fit_point(const Dataset& data, double x0, const FitConfig& cfg,
                        std::optional<std::vector<double>> init) {
  const LocalLikelihood lik(data, cfg);
  if (!init) {
    init.emplace(static_cast<std::size_t>(cfg.degree) + 1, 0.0);
    (*init)[0] = initial_eta(cfg.family, data.size() >= 2 ? empirical_tau(data.u1, data.u2) : 0.0);
  }
  return lik.fit(lik.window(x0), *init);
}

LocalFitCurve fit_curve(const Dataset& data, const std::vector<double>& grid,
                        const FitConfig& cfg, InitStrategy init, unsigned threads) {
  if (grid.empty()) throw ConfigError("x0 grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw ConfigError("x0 grid values must be finite");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ConfigError("x0 grid must be strictly increasing");
    }
  }
  const LocalLikelihood lik(data, cfg);
  const std::size_t m = static_cast<std::size_t>(cfg.degree) + 1;
  std::vector<double> global_init(m, 0.0);
  global_init[0] =
      initial_eta(cfg.family, data.size() >= 2 ? empirical_tau(data.u1, data.u2) : 0.0);

  LocalFitCurve curve;
  curve.family = cfg.family;
  curve.nu = lik.config().nu;
  curve.kernel = cfg.kernel;
  curve.degree = cfg.degree;
  curve.points.resize(grid.size());

  auto fit_one = [&](std::size_t i, const std::vector<double>& start) {
    try {
      return lik.fit(lik.window(grid[i]), start);
    } catch (const DegenerateWindowError&) {
    } catch (const DomainError&) {
    }
    LocalFitPoint failed;
    failed.x0 = grid[i];
    failed.beta.assign(m, kNaN);
    failed.eta = kNaN;
    failed.grad_norm = std::numeric_limits<double>::infinity();
    failed.loglik = kNaN;
    return failed;
  };

  if (init == InitStrategy::Global) {
    parallel_for(grid.size(), threads,
                 [&](std::size_t i) { curve.points[i] = fit_one(i, global_init); });
  } else {
    std::vector<double> start = global_init;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      curve.points[i] = fit_one(i, start);
      start = curve.points[i].converged ? curve.points[i].beta : global_init;
    }
  }
  return curve;
}

std::vector<std::pair<double, double>> curve_to_tau(const LocalFitCurve& curve) {
  std::vector<std::pair<double, double>> out;
  out.reserve(curve.points.size());
  for (const LocalFitPoint& p : curve.points) {
    const double tau = std::isfinite(p.eta) ? eta_to_tau(curve.family, p.eta) : kNaN;
    out.emplace_back(p.x0, tau);
  }
  return out;
}

}  // namespace localcop
