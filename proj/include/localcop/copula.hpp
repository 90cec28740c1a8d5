#pragma once

// The five one-parameter bivariate copula families: Gaussian, Student-t,
// Clayton, Gumbel and Frank. Each family provides its CDF, log-density
// (with the analytic derivative in theta used by the local score), the
// conditional distribution h(v | u) = dC/du and its inverse, the canonical
// inverse-link eta -> theta, and the Kendall tau map.

#include <optional>
#include <string>
#include <string_view>

namespace localcop {

enum class CopulaFamily : int {
  Gaussian = 1,
  StudentT = 2,
  Clayton = 3,
  Gumbel = 4,
  Frank = 5,
};

inline constexpr CopulaFamily kAllFamilies[] = {
    CopulaFamily::Gaussian, CopulaFamily::StudentT, CopulaFamily::Clayton,
    CopulaFamily::Gumbel, CopulaFamily::Frank};

inline constexpr double kDefaultNu = 4.0;

/// Pseudo-observations are clamped into [kUnitClamp, 1 - kUnitClamp].
inline constexpr double kUnitClamp = 1e-10;

/// Throws DomainError for codes outside 1..5.
CopulaFamily family_from_code(int code);
constexpr int family_code(CopulaFamily family) {
  return static_cast<int>(family);
}
std::string_view family_name(CopulaFamily family);
/// Accepts a code ("3") or a name ("clayton", "T", "gaussian", ...), case
/// insensitive.
std::optional<CopulaFamily> parse_family(std::string_view text);

struct CopulaParams {
  double theta = 0.0;
  std::optional<double> nu;  // Student-t only
};

struct UnitPair {
  double u = 0.5;
  double v = 0.5;
};

double clamp_unit(double p);
UnitPair clamp_pair(UnitPair pair);

/// Throws DomainError unless theta lies in the family's parameter range and
/// nu is present and positive for the Student-t family.
void validate_params(CopulaFamily family, const CopulaParams& params);

// Link functions ------------------------------------------------------------

/// Canonical inverse link g^{-1}: tanh, exp, exp + 1, identity.
double eta_to_par(CopulaFamily family, double eta);
/// Link g. Requires theta strictly inside the range (Gumbel theta > 1, Frank
/// theta != 0).
double par_to_eta(CopulaFamily family, double theta);
/// d theta / d eta, evaluated from eta to keep precision near the bounds.
double link_derivative(CopulaFamily family, double eta);

// Kendall tau -----------------------------------------------------------------

double par_to_tau(CopulaFamily family, double theta);
double tau_to_par(CopulaFamily family, double tau);
/// par_to_tau(eta_to_par(eta)), with the Frank eta = 0 independence limit
/// mapped to tau = 0.
double eta_to_tau(CopulaFamily family, double eta);

// Distribution functions ---------------------------------------------------

double cdf(CopulaFamily family, UnitPair pair, const CopulaParams& params);
double log_pdf(CopulaFamily family, UnitPair pair, const CopulaParams& params);
/// h(v | u) = dC(u, v) / du.
double h_fun(CopulaFamily family, double v, double given_u,
             const CopulaParams& params);
/// Solves h_fun(v | u) = p for v.
double h_inv(CopulaFamily family, double p, double given_u,
             const CopulaParams& params);

// Hot-path density evaluation ----------------------------------------------

/// Per-observation transforms that do not depend on theta (normal or t
/// quantiles, logs of the margins). Computed once per observation and reused
/// across every likelihood evaluation.
struct PreparedPair {
  double u = 0.5;
  double v = 0.5;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct LogDensity {
  double value = 0.0;
  double dtheta = 0.0;  // d value / d theta
};

class DensityEvaluator {
 public:
  /// nu is only read for the Student-t family, where it is required.
  DensityEvaluator(CopulaFamily family, std::optional<double> nu);

  CopulaFamily family() const { return family_; }
  PreparedPair prepare(UnitPair pair) const;
  /// No range checks on theta; callers validate or go through log_pdf().
  LogDensity evaluate(const PreparedPair& pair, double theta) const;

 private:
  CopulaFamily family_;
  double nu_ = kDefaultNu;
  double t_log_const_ = 0.0;
};

}  // namespace localcop
