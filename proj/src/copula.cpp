#include "localcop/copula.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "localcop/errors.hpp"
#include "localcop/specials.hpp"

namespace localcop {
namespace {

using specials::kPi;

// Largest double below one; the tanh link is capped here so that the image
// stays strictly inside (-1, 1).
constexpr double kRhoCap = 1.0 - 0x1p-53;
constexpr double kExpLinkCap = 700.0;
// Below this |theta| the Frank log-density uses its cubic Taylor expansion.
constexpr double kFrankSeriesCut = 1e-4;

double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

const std::optional<double>& require_nu(const CopulaParams& params) {
  if (!params.nu || !(*params.nu > 0.0) || !std::isfinite(*params.nu)) {
    throw DomainError("student-t copula requires a positive, finite nu");
  }
  return params.nu;
}

// ---------------------------------------------------------------------------
// Log-densities and their theta derivatives on prepared pairs.

LogDensity gaussian_density(const PreparedPair& p, double rho) {
  const double s = p.a * p.a + p.b * p.b;
  const double prod = p.a * p.b;
  const double r2 = (1.0 - rho) * (1.0 + rho);
  LogDensity out;
  out.value = -0.5 * std::log(r2) - (rho * rho * s - 2.0 * rho * prod) / (2.0 * r2);
  out.dtheta = rho / r2 - (rho * s - prod * (1.0 + rho * rho)) / (r2 * r2);
  return out;
}

LogDensity student_t_density(const PreparedPair& p, double rho, double nu,
                             double log_const) {
  const double s = p.a * p.a + p.b * p.b;
  const double prod = p.a * p.b;
  const double r2 = (1.0 - rho) * (1.0 + rho);
  const double q = (s - 2.0 * rho * prod) / r2;
  const double dq = 2.0 * (rho * s - prod * (1.0 + rho * rho)) / (r2 * r2);
  LogDensity out;
  out.value = log_const - 0.5 * std::log(r2) -
              0.5 * (nu + 2.0) * std::log1p(q / nu) + 0.5 * (nu + 1.0) * p.c;
  out.dtheta = rho / r2 - 0.5 * (nu + 2.0) * (dq / nu) / (1.0 + q / nu);
  return out;
}

// log A and d(log A)/d theta for A = u^-theta + v^-theta - 1.
struct ClaytonSum {
  double log_a;
  double dlog_a;
};

ClaytonSum clayton_sum(double log_u, double log_v, double theta) {
  const double alpha = -theta * log_u;
  const double beta = -theta * log_v;
  const double m = std::max(alpha, beta);
  const double ea = std::exp(alpha - m);
  const double eb = std::exp(beta - m);
  const double scaled = ea + eb - std::exp(-m);
  ClaytonSum out;
  if (m < 1.0) {
    out.log_a = std::log1p(std::expm1(alpha) + std::expm1(beta));
  } else {
    out.log_a = m + std::log(scaled);
  }
  out.dlog_a = -(ea * log_u + eb * log_v) / scaled;
  return out;
}

LogDensity clayton_density(const PreparedPair& p, double theta) {
  const ClaytonSum sum = clayton_sum(p.a, p.b, theta);
  const double log_uv = p.a + p.b;
  LogDensity out;
  out.value = std::log1p(theta) - (1.0 + theta) * log_uv -
              (2.0 + 1.0 / theta) * sum.log_a;
  out.dtheta = 1.0 / (1.0 + theta) - log_uv + sum.log_a / (theta * theta) -
               (2.0 + 1.0 / theta) * sum.dlog_a;
  return out;
}

// log s and (ds/dtheta)/s for s = x^theta + y^theta, from logs of x and y.
struct GumbelSum {
  double log_s;
  double ds_over_s;
};

GumbelSum gumbel_sum(double log_x, double log_y, double theta) {
  const double m = theta * std::max(log_x, log_y);
  const double ex = std::exp(theta * log_x - m);
  const double ey = std::exp(theta * log_y - m);
  return {m + std::log(ex + ey), (ex * log_x + ey * log_y) / (ex + ey)};
}

LogDensity gumbel_density(const PreparedPair& p, double theta) {
  // a = -log u, b = -log v, c = log a, d = log b
  const GumbelSum sum = gumbel_sum(p.c, p.d, theta);
  const double w = std::exp(sum.log_s / theta);
  const double dw = w * (-sum.log_s / (theta * theta) + sum.ds_over_s / theta);
  const double tail = w + theta - 1.0;
  LogDensity out;
  out.value = -w + p.a + p.b + (theta - 1.0) * (p.c + p.d) +
              (1.0 / theta - 2.0) * sum.log_s + std::log(tail);
  out.dtheta = -dw + (p.c + p.d) - sum.log_s / (theta * theta) +
               (1.0 / theta - 2.0) * sum.ds_over_s + (dw + 1.0) / tail;
  return out;
}

LogDensity frank_density_positive(double u, double v, double theta) {
  LogDensity out;
  const double eu = std::exp(-theta * u);
  const double ev = std::exp(-theta * v);
  const double euv = std::exp(-theta * (u + v));
  const double e1 = std::exp(-theta);
  const double dd = -u * eu - v * ev + (u + v) * euv + e1;
  if (theta <= 2.0) {
    const double d = -std::expm1(-theta) - std::expm1(-theta * u) * std::expm1(-theta * v);
    out.value = std::log(theta) + std::log(-std::expm1(-theta)) -
                theta * (u + v) - 2.0 * std::log(d);
    out.dtheta = 1.0 / theta + 1.0 / std::expm1(theta) - (u + v) - 2.0 * dd / d;
    return out;
  }
  // D = e^{-theta m} * scaled with m = min(u, v) keeps every term bounded.
  const double m = std::min(u, v);
  const double sa = std::exp(-theta * (u - m));
  const double sb = std::exp(-theta * (v - m));
  const double sab = std::exp(-theta * (u + v - m));
  const double s1 = std::exp(-theta * (1.0 - m));
  const double scaled = sa + sb - sab - s1;
  const double scaled_d = -u * sa - v * sb + (u + v) * sab + s1;
  out.value = std::log(theta) + std::log1p(-e1) - theta * (u + v) +
              2.0 * theta * m - 2.0 * std::log(scaled);
  out.dtheta = 1.0 / theta + 1.0 / std::expm1(theta) - (u + v) -
               2.0 * scaled_d / scaled;
  return out;
}

LogDensity frank_density(double u, double v, double theta) {
  if (std::abs(theta) < kFrankSeriesCut) {
    // log c = theta a1 + theta^2 a2 + theta^3 a3 + O(theta^4)
    const double a1 = 0.5 * (1.0 - 2.0 * u) * (1.0 - 2.0 * v);
    const double a2 = u * v * (1.0 - u) * (1.0 - v) - 1.0 / 24.0;
    const double a3 = u * v * (u - 1.0) * (2.0 * u - 1.0) * (v - 1.0) *
                      (2.0 * v - 1.0) / 6.0;
    return {theta * (a1 + theta * (a2 + theta * a3)),
            a1 + theta * (2.0 * a2 + 3.0 * theta * a3)};
  }
  if (theta < 0.0) {
    // c_theta(u, v) = c_{-theta}(u, 1 - v)
    LogDensity flipped = frank_density_positive(u, 1.0 - v, -theta);
    flipped.dtheta = -flipped.dtheta;
    return flipped;
  }
  return frank_density_positive(u, v, theta);
}

// ---------------------------------------------------------------------------
// CDFs

double frank_cdf_positive(double u, double v, double theta) {
  if (theta <= 2.0) {
    const double ratio =
        std::expm1(-theta * u) * std::expm1(-theta * v) / std::expm1(-theta);
    return -std::log1p(ratio) / theta;
  }
  // Same scaling as the density; avoids log1p(ratio) with ratio near -1.
  const double m = std::min(u, v);
  const double scaled = std::exp(-theta * (u - m)) + std::exp(-theta * (v - m)) -
                        std::exp(-theta * (u + v - m)) - std::exp(-theta * (1.0 - m));
  return m - (std::log(scaled) - std::log1p(-std::exp(-theta))) / theta;
}

double frank_cdf(double u, double v, double theta) {
  if (theta == 0.0) return u * v;
  if (theta < 0.0) return u - frank_cdf_positive(u, 1.0 - v, -theta);
  return frank_cdf_positive(u, v, theta);
}

// ---------------------------------------------------------------------------
// Conditional distributions h(v | u)

double frank_h_positive(double v, double u, double theta) {
  const double num = -std::expm1(-theta * v);
  if (theta <= 2.0) {
    const double d = -std::expm1(-theta) - std::expm1(-theta * u) * std::expm1(-theta * v);
    return std::exp(-theta * u) * num / d;
  }
  const double m = std::min(u, v);
  const double scaled = std::exp(-theta * (u - m)) + std::exp(-theta * (v - m)) -
                        std::exp(-theta * (u + v - m)) - std::exp(-theta * (1.0 - m));
  return std::exp(-theta * (u - m)) * num / scaled;
}

double frank_h(double v, double u, double theta) {
  if (theta == 0.0) return v;
  if (theta < 0.0) return 1.0 - frank_h_positive(1.0 - v, u, -theta);
  return frank_h_positive(v, u, theta);
}

double log_add_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double frank_h_inv_positive(double p, double u, double theta) {
  if (theta <= 2.0) {
    const double x = p * std::expm1(-theta) /
                     (std::exp(-theta * u) - p * std::expm1(-theta * u));
    return -std::log1p(x) / theta;
  }
  // e^{-theta v} = (e^{-theta u}(1 - p) + p e^{-theta}) / (e^{-theta u}(1 - p) + p)
  const double log_q = std::log1p(-p) - theta * u;
  const double log_p = std::log(p);
  return (log_add_exp(log_q, log_p) - log_add_exp(log_q, log_p - theta)) / theta;
}

double frank_h_inv(double p, double u, double theta) {
  if (theta == 0.0) return p;
  if (theta < 0.0) return 1.0 - frank_h_inv_positive(1.0 - p, u, -theta);
  return frank_h_inv_positive(p, u, theta);
}

double gumbel_h(double v, double u, double theta) {
  const double x = -std::log(u);
  const double y = -std::log(v);
  const GumbelSum sum = gumbel_sum(std::log(x), std::log(y), theta);
  const double w = std::exp(sum.log_s / theta);
  return std::exp(-w + x + (theta - 1.0) * std::log(x) +
                  (1.0 / theta - 1.0) * sum.log_s);
}

double clayton_h(double v, double u, double theta) {
  const ClaytonSum sum = clayton_sum(std::log(u), std::log(v), theta);
  return std::exp(-(theta + 1.0) * std::log(u) - (1.0 / theta + 1.0) * sum.log_a);
}

double clayton_h_inv(double p, double u, double theta) {
  // v^-theta = 1 + u^-theta (p^{-theta/(1+theta)} - 1)
  const double inner = std::expm1(-theta / (1.0 + theta) * std::log(p));
  const double log_term = -theta * std::log(u) + std::log(inner);
  return std::exp(-softplus(log_term) / theta);
}

double frank_tau(double theta) {
  if (std::abs(theta) < 1e-2) {
    const double t2 = theta * theta;
    return theta * (1.0 / 9.0 - t2 * (1.0 / 900.0 - t2 / 52920.0));
  }
  return 1.0 - 4.0 / theta * (1.0 - specials::debye1(theta));
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

}  // namespace

CopulaFamily family_from_code(int code) {
  if (code < 1 || code > 5) {
    throw DomainError("copula family code must be in 1..5, got " +
                      std::to_string(code));
  }
  return static_cast<CopulaFamily>(code);
}

std::string_view family_name(CopulaFamily family) {
  switch (family) {
    case CopulaFamily::Gaussian: return "gaussian";
    case CopulaFamily::StudentT: return "t";
    case CopulaFamily::Clayton: return "clayton";
    case CopulaFamily::Gumbel: return "gumbel";
    case CopulaFamily::Frank: return "frank";
  }
  return "unknown";
}

std::optional<CopulaFamily> parse_family(std::string_view text) {
  const std::string key = lower(text);
  if (key == "1" || key == "gaussian" || key == "normal") return CopulaFamily::Gaussian;
  if (key == "2" || key == "t" || key == "student" || key == "student-t") {
    return CopulaFamily::StudentT;
  }
  if (key == "3" || key == "clayton") return CopulaFamily::Clayton;
  if (key == "4" || key == "gumbel") return CopulaFamily::Gumbel;
  if (key == "5" || key == "frank") return CopulaFamily::Frank;
  return std::nullopt;
}

double clamp_unit(double p) {
  if (std::isnan(p)) {
    throw DomainError("pseudo-observation is NaN");
  }
  return std::clamp(p, kUnitClamp, 1.0 - kUnitClamp);
}

UnitPair clamp_pair(UnitPair pair) {
  return {clamp_unit(pair.u), clamp_unit(pair.v)};
}

void validate_params(CopulaFamily family, const CopulaParams& params) {
  const double theta = params.theta;
  const std::string who = "copula " + std::string(family_name(family)) + ": ";
  if (!std::isfinite(theta)) {
    throw DomainError(who + "theta must be finite");
  }
  switch (family) {
    case CopulaFamily::Gaussian:
      if (!(std::abs(theta) < 1.0)) throw DomainError(who + "theta must lie in (-1, 1)");
      return;
    case CopulaFamily::StudentT:
      if (!(std::abs(theta) < 1.0)) throw DomainError(who + "theta must lie in (-1, 1)");
      require_nu(params);
      return;
    case CopulaFamily::Clayton:
      if (!(theta > 0.0)) throw DomainError(who + "theta must be positive");
      return;
    case CopulaFamily::Gumbel:
      if (!(theta >= 1.0)) throw DomainError(who + "theta must be at least 1");
      return;
    case CopulaFamily::Frank:
      if (theta == 0.0) throw DomainError(who + "theta must be nonzero");
      return;
  }
}

double eta_to_par(CopulaFamily family, double eta) {
  switch (family) {
    case CopulaFamily::Gaussian:
    case CopulaFamily::StudentT:
      return std::clamp(std::tanh(eta), -kRhoCap, kRhoCap);
    case CopulaFamily::Clayton:
      return std::exp(std::clamp(eta, -kExpLinkCap, kExpLinkCap));
    case CopulaFamily::Gumbel:
      return 1.0 + std::exp(std::min(eta, kExpLinkCap));
    case CopulaFamily::Frank:
      return eta;
  }
  return eta;
}

double par_to_eta(CopulaFamily family, double theta) {
  const std::string who = "par_to_eta(" + std::string(family_name(family)) + "): ";
  switch (family) {
    case CopulaFamily::Gaussian:
    case CopulaFamily::StudentT:
      if (!(std::abs(theta) < 1.0)) throw DomainError(who + "theta must lie in (-1, 1)");
      return std::atanh(theta);
    case CopulaFamily::Clayton:
      if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw DomainError(who + "theta must be positive");
      }
      return std::log(theta);
    case CopulaFamily::Gumbel:
      if (!(theta > 1.0) || !std::isfinite(theta)) {
        throw DomainError(who + "theta must exceed 1");
      }
      return std::log(theta - 1.0);
    case CopulaFamily::Frank:
      if (theta == 0.0 || !std::isfinite(theta)) {
        throw DomainError(who + "theta must be finite and nonzero");
      }
      return theta;
  }
  return theta;
}

double link_derivative(CopulaFamily family, double eta) {
  switch (family) {
    case CopulaFamily::Gaussian:
    case CopulaFamily::StudentT: {
      const double ch = std::cosh(eta);
      return 1.0 / (ch * ch);
    }
    case CopulaFamily::Clayton:
      if (std::abs(eta) > kExpLinkCap) return 0.0;
      return std::exp(eta);
    case CopulaFamily::Gumbel:
      if (eta > kExpLinkCap) return 0.0;
      return std::exp(eta);
    case CopulaFamily::Frank:
      return 1.0;
  }
  return 1.0;
}

double par_to_tau(CopulaFamily family, double theta) {
  validate_params(family, {theta, kDefaultNu});
  switch (family) {
    case CopulaFamily::Gaussian:
    case CopulaFamily::StudentT:
      return 2.0 / kPi * std::asin(theta);
    case CopulaFamily::Clayton:
      return theta / (theta + 2.0);
    case CopulaFamily::Gumbel:
      return 1.0 - 1.0 / theta;
    case CopulaFamily::Frank:
      return frank_tau(theta);
  }
  return 0.0;
}

double tau_to_par(CopulaFamily family, double tau) {
  const std::string who = "tau_to_par(" + std::string(family_name(family)) + "): ";
  switch (family) {
    case CopulaFamily::Gaussian:
    case CopulaFamily::StudentT:
      if (!(std::abs(tau) < 1.0)) throw DomainError(who + "tau must lie in (-1, 1)");
      return std::sin(0.5 * kPi * tau);
    case CopulaFamily::Clayton:
      if (!(tau > 0.0 && tau < 1.0)) throw DomainError(who + "tau must lie in (0, 1)");
      return 2.0 * tau / (1.0 - tau);
    case CopulaFamily::Gumbel:
      if (!(tau > 0.0 && tau < 1.0)) throw DomainError(who + "tau must lie in (0, 1)");
      return 1.0 / (1.0 - tau);
    case CopulaFamily::Frank: {
      if (!(std::abs(tau) < 1.0) || tau == 0.0) {
        throw DomainError(who + "tau must lie in (-1, 1) and be nonzero");
      }
      // tau(theta) is odd; tau(theta) < theta / 9 and tau(theta) > 1 - 4/theta
      // for theta > 0 give the bracket.
      const double target = std::abs(tau);
      const double lo = 9.0 * target;
      const double hi = 4.0 / (1.0 - target);
      auto f = [target](double theta) { return frank_tau(theta) - target; };
      const double root =
          specials::brent_root(f, specials::make_bracket(f, lo, hi), 1e-13 * hi);
      return tau < 0.0 ? -root : root;
    }
  }
  return 0.0;
}

double eta_to_tau(CopulaFamily family, double eta) {
  const double theta = eta_to_par(family, eta);
  if (family == CopulaFamily::Frank && theta == 0.0) return 0.0;
  return par_to_tau(family, theta);
}

double cdf(CopulaFamily family, UnitPair pair, const CopulaParams& params) {
  validate_params(family, params);
  const UnitPair p = clamp_pair(pair);
  const double theta = params.theta;
  switch (family) {
    case CopulaFamily::Gaussian:
      if (theta == 0.0) return p.u * p.v;
      return specials::bivariate_normal_cdf(specials::std_norm_quantile(p.u),
                                            specials::std_norm_quantile(p.v), theta);
    case CopulaFamily::StudentT: {
      const double nu = *params.nu;
      return specials::bivariate_t_cdf(specials::student_t_quantile(p.u, nu),
                                       specials::student_t_quantile(p.v, nu), theta, nu);
    }
    case CopulaFamily::Clayton: {
      const ClaytonSum sum = clayton_sum(std::log(p.u), std::log(p.v), theta);
      return std::exp(-sum.log_a / theta);
    }
    case CopulaFamily::Gumbel: {
      const GumbelSum sum =
          gumbel_sum(std::log(-std::log(p.u)), std::log(-std::log(p.v)), theta);
      return std::exp(-std::exp(sum.log_s / theta));
    }
    case CopulaFamily::Frank:
      return frank_cdf(p.u, p.v, theta);
  }
  return 0.0;
}

double log_pdf(CopulaFamily family, UnitPair pair, const CopulaParams& params) {
  validate_params(family, params);
  const DensityEvaluator eval(family, params.nu);
  return eval.evaluate(eval.prepare(pair), params.theta).value;
}

double h_fun(CopulaFamily family, double v, double given_u,
             const CopulaParams& params) {
  validate_params(family, params);
  const UnitPair p = clamp_pair({given_u, v});
  const double theta = params.theta;
  double h = 0.0;
  switch (family) {
    case CopulaFamily::Gaussian: {
      const double a = specials::std_norm_quantile(p.u);
      const double b = specials::std_norm_quantile(p.v);
      h = specials::std_norm_cdf((b - theta * a) / std::sqrt((1.0 - theta) * (1.0 + theta)));
      break;
    }
    case CopulaFamily::StudentT: {
      const double nu = *params.nu;
      const double a = specials::student_t_quantile(p.u, nu);
      const double b = specials::student_t_quantile(p.v, nu);
      const double scale =
          std::sqrt((nu + a * a) * (1.0 - theta) * (1.0 + theta) / (nu + 1.0));
      h = specials::student_t_cdf((b - theta * a) / scale, nu + 1.0);
      break;
    }
    case CopulaFamily::Clayton:
      h = clayton_h(p.v, p.u, theta);
      break;
    case CopulaFamily::Gumbel:
      h = gumbel_h(p.v, p.u, theta);
      break;
    case CopulaFamily::Frank:
      h = frank_h(p.v, p.u, theta);
      break;
  }
  return std::clamp(h, 0.0, 1.0);
}

double h_inv(CopulaFamily family, double p, double given_u,
             const CopulaParams& params) {
  validate_params(family, params);
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("h_inv: p must lie in (0, 1)");
  }
  const double u = clamp_unit(given_u);
  const double theta = params.theta;
  double v = 0.0;
  switch (family) {
    case CopulaFamily::Gaussian: {
      const double a = specials::std_norm_quantile(u);
      const double z = specials::std_norm_quantile(p) *
                           std::sqrt((1.0 - theta) * (1.0 + theta)) + theta * a;
      v = specials::std_norm_cdf(z);
      break;
    }
    case CopulaFamily::StudentT: {
      const double nu = *params.nu;
      const double a = specials::student_t_quantile(u, nu);
      const double scale =
          std::sqrt((nu + a * a) * (1.0 - theta) * (1.0 + theta) / (nu + 1.0));
      v = specials::student_t_cdf(
          specials::student_t_quantile(p, nu + 1.0) * scale + theta * a, nu);
      break;
    }
    case CopulaFamily::Clayton:
      v = clayton_h_inv(p, u, theta);
      break;
    case CopulaFamily::Gumbel: {
      if (theta == 1.0) {
        v = p;
        break;
      }
      auto f = [&](double vv) { return gumbel_h(vv, u, theta) - p; };
      const double lo = 1e-300;
      const double hi = 1.0 - 0x1p-53;
      const specials::RootBracket bracket = specials::make_bracket(f, lo, hi);
      if (bracket.f_lo >= 0.0) return lo;
      if (bracket.f_hi <= 0.0) return hi;
      v = specials::brent_root(f, bracket, 1e-16);
      break;
    }
    case CopulaFamily::Frank:
      v = frank_h_inv(p, u, theta);
      break;
  }
  return std::clamp(v, 0.0, 1.0);
}

DensityEvaluator::DensityEvaluator(CopulaFamily family, std::optional<double> nu)
    : family_(family) {
  if (family == CopulaFamily::StudentT) {
    CopulaParams probe{0.0, nu};
    nu_ = *require_nu(probe);
    t_log_const_ = specials::log_gamma(0.5 * nu_ + 1.0) + specials::log_gamma(0.5 * nu_) -
                   2.0 * specials::log_gamma(0.5 * (nu_ + 1.0));
  }
}

PreparedPair DensityEvaluator::prepare(UnitPair pair) const {
  const UnitPair p = clamp_pair(pair);
  PreparedPair out;
  out.u = p.u;
  out.v = p.v;
  switch (family_) {
    case CopulaFamily::Gaussian:
      out.a = specials::std_norm_quantile(p.u);
      out.b = specials::std_norm_quantile(p.v);
      break;
    case CopulaFamily::StudentT:
      out.a = specials::student_t_quantile(p.u, nu_);
      out.b = specials::student_t_quantile(p.v, nu_);
      out.c = std::log1p(out.a * out.a / nu_) + std::log1p(out.b * out.b / nu_);
      break;
    case CopulaFamily::Clayton:
      out.a = std::log(p.u);
      out.b = std::log(p.v);
      break;
    case CopulaFamily::Gumbel:
      out.a = -std::log(p.u);
      out.b = -std::log(p.v);
      out.c = std::log(out.a);
      out.d = std::log(out.b);
      break;
    case CopulaFamily::Frank:
      break;
  }
  return out;
}

LogDensity DensityEvaluator::evaluate(const PreparedPair& pair, double theta) const {
  switch (family_) {
    case CopulaFamily::Gaussian:
      return gaussian_density(pair, theta);
    case CopulaFamily::StudentT:
      return student_t_density(pair, theta, nu_, t_log_const_);
    case CopulaFamily::Clayton:
      return clayton_density(pair, theta);
    case CopulaFamily::Gumbel:
      return gumbel_density(pair, theta);
    case CopulaFamily::Frank:
      return frank_density(pair.u, pair.v, theta);
  }
  return {};
}

}  // namespace localcop
