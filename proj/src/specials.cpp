#include "localcop/specials.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>

#include "localcop/errors.hpp"

namespace localcop::specials {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kLogSqrtPi = 0.57236494292470008707;
constexpr double kEps = std::numeric_limits<double>::epsilon();

QuadratureRule build_gauss_legendre(std::size_t n) {
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Newton on P_n starting from the Tricomi approximation of root i.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * (f1 + f2);
    }
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 20000; ++m) {
    const double mm = static_cast<double>(m);
    const double m2 = 2.0 * mm;
    double aa = mm * (b - mm) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + mm) * (qab + mm) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      break;
    }
  }
  return h;
}

// log Gamma(a + b) - log Gamma(a) for a >= 10, from the difference of the
// Stirling series so that large a does not cancel.
double log_gamma_ratio_large(double a, double b) {
  auto correction = [](double x) {
    const double x2 = x * x;
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / (1680.0 * x2)) / x2) / x2) / x;
  };
  return (a - 0.5) * std::log1p(b / a) + b * std::log(a + b) - b +
         correction(a + b) - correction(a);
}

double log_beta(double a, double b) {
  const double big = std::max(a, b);
  const double small = std::min(a, b);
  if (big >= 10.0) {
    return log_gamma(small) - log_gamma_ratio_large(big, small);
  }
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

// I_x(a, b) with y = 1 - x and both logarithms supplied by the caller, so
// that neither is formed by cancellation.
double incomplete_beta_impl(double a, double b, double x, double y,
                            double log_x, double log_y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_front = a * log_x + b * log_y - log_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * beta_continued_fraction(b, a, y) / b;
}

// Lower tail P(T <= z) for z <= 0, accurate deep in the tail.
double student_t_lower_tail(double z, double nu) {
  const double z2 = z * z;
  const double denom = nu + z2;
  const double log1p_ratio = std::log1p(z2 / nu);
  const double log_y = 2.0 * std::log(std::abs(z)) - std::log(nu) - log1p_ratio;
  return 0.5 * incomplete_beta_impl(0.5 * nu, 0.5, nu / denom, z2 / denom,
                                    -log1p_ratio, log_y);
}

// log of Gamma((nu + 1) / 2) / Gamma(nu / 2)
double log_t_constant(double nu) {
  const double half = 0.5 * nu;
  if (half >= 10.0) return log_gamma_ratio_large(half, 0.5);
  return log_gamma(half + 0.5) - log_gamma(half);
}

double debye_integral(double x) {
  // integral_0^x t / (e^t - 1) dt for x > 0. Beyond 60 the remaining tail
  // is below 1e-24 and is dropped.
  const QuadratureRule& rule = gauss_legendre(64);
  const double upper = std::min(x, 60.0);
  const int panels = std::max(1, static_cast<int>(std::ceil(upper / 10.0)));
  const double width = upper / panels;
  auto integrand = [](double t) { return t / std::expm1(t); };
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    total += integrate_fixed(integrand, k * width, (k + 1) * width, rule);
  }
  return total;
}

}  // namespace

const QuadratureRule& gauss_legendre(std::size_t order) {
  if (order == 0) {
    throw DomainError("gauss_legendre: order must be positive");
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    slot = std::make_unique<QuadratureRule>(build_gauss_legendre(order));
  }
  return *slot;
}

double integrate_fixed(const std::function<double(double)>& f, double a,
                       double b, const QuadratureRule& rule) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.order; ++i) {
    sum += rule.weights[i] * f(center + half * rule.nodes[i]);
  }
  return sum * half;
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol,
                          std::size_t max_intervals) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_adaptive(f, b, a, abs_tol, max_intervals);
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  double error = first.error;
  heap.push(first);
  while (error > abs_tol && heap.size() < max_intervals) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      break;
    }
    heap.pop();
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the pieces so the running update does not accumulate
  // cancellation error.
  double total = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    heap.pop();
  }
  return total;
}

double std_norm_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double std_norm_cdf(double z) {
  if (z > 40.0) return 1.0;
  if (z < -40.0) return 0.0;
  return 0.5 * std::erfc(-z * kInvSqrt2);
}

double std_norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("std_norm_quantile: p must lie in (0, 1)");
  }
  static constexpr std::array<double, 8> a = {
      3.3871328727963996080e0, 1.3314166789178437745e2,
      1.9715909503065514427e3, 1.3731693765509461125e4,
      4.5921953931549871457e4, 6.7265770927008700853e4,
      3.3430575583588128105e4, 2.5090809287301226727e3};
  static constexpr std::array<double, 8> b = {
      1.0,                     4.2313330701600911252e1,
      6.8718700749205790830e2, 5.3941960214247511077e3,
      2.1213794301586595867e4, 3.9307895800092710610e4,
      2.8729085735721942674e4, 5.2264952788528545610e3};
  static constexpr std::array<double, 8> c = {
      1.42343711074968357734e0, 4.63033784615654529590e0,
      5.76949722146069140550e0, 3.64784832476320460504e0,
      1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static constexpr std::array<double, 8> d = {
      1.0,                        2.05319162663775882187e0,
      1.67638483018380384940e0,   6.89767334985100004550e-1,
      1.48103976427480074590e-1,  1.51986665636164571966e-2,
      5.47593808499534494600e-4,  1.05075007164441684324e-9};
  static constexpr std::array<double, 8> e = {
      6.65790464350110377720e0, 5.46378491116411436990e0,
      1.78482653991729133580e0, 2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr std::array<double, 8> f = {
      1.0,                        5.99832206555887937690e-1,
      1.36929880922735805310e-1,  1.48753612908506148525e-2,
      7.86869131145613259100e-4,  1.84631831751005468180e-5,
      1.42151175831644588870e-7,  2.04426310338993978564e-15};
  auto poly = [](const std::array<double, 8>& coef, double x) {
    double acc = coef[7];
    for (int i = 6; i >= 0; --i) acc = acc * x + coef[static_cast<std::size_t>(i)];
    return acc;
  };

  const double q = p - 0.5;
  double z = 0.0;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    z = q * poly(a, r) / poly(b, r);
  } else {
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    if (r <= 5.0) {
      r -= 1.6;
      z = poly(c, r) / poly(d, r);
    } else {
      r -= 5.0;
      z = poly(e, r) / poly(f, r);
    }
    if (q < 0.0) z = -z;
  }
  // One Halley step against erfc tightens the tails to full precision.
  const double err = p < 0.5 ? 0.5 * std::erfc(-z * kInvSqrt2) - p
                             : (1.0 - p) - 0.5 * std::erfc(z * kInvSqrt2);
  const double pdf = std_norm_pdf(z);
  if (pdf > 0.0) {
    const double step = err / pdf;
    z -= step / (1.0 + 0.5 * z * step);
  }
  return z;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: x must be positive and finite");
  }
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  // Lanczos approximation, g = 7, n = 9.
  static constexpr std::array<double, 9> coef = {
      0.99999999999980993,     676.5203681218851,
      -1259.1392167224028,     771.32342877765313,
      -176.61502916214059,     12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,
      1.5056327351493116e-7};
  const double xm1 = x - 1.0;
  double series = coef[0];
  for (std::size_t i = 1; i < coef.size(); ++i) {
    series += coef[i] / (xm1 + static_cast<double>(i));
  }
  const double t = xm1 + 7.5;
  return 0.91893853320467274178 + (xm1 + 0.5) * std::log(t) - t +
         std::log(series);
}

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("incomplete_beta: a and b must be positive");
  }
  if (x < 0.0 || x > 1.0) {
    throw DomainError("incomplete_beta: x must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return incomplete_beta_impl(a, b, x, 1.0 - x, std::log(x), std::log1p(-x));
}

double student_t_log_pdf(double z, double nu) {
  if (!(nu > 0.0)) {
    throw DomainError("student_t_log_pdf: nu must be positive");
  }
  return log_t_constant(nu) - 0.5 * std::log(nu) - kLogSqrtPi -
         0.5 * (nu + 1.0) * std::log1p(z * z / nu);
}

double student_t_cdf(double z, double nu) {
  if (!(nu > 0.0)) {
    throw DomainError("student_t_cdf: nu must be positive");
  }
  if (std::isnan(z)) return z;
  if (std::isinf(z)) return z > 0.0 ? 1.0 : 0.0;
  if (z == 0.0) return 0.5;
  if (z < 0.0) return student_t_lower_tail(z, nu);
  return 1.0 - student_t_lower_tail(-z, nu);
}

double student_t_quantile(double p, double nu) {
  if (!(nu > 0.0)) {
    throw DomainError("student_t_quantile: nu must be positive");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("student_t_quantile: p must lie in (0, 1)");
  }
  if (p == 0.5) return 0.0;
  if (nu == 1.0) {
    return std::tan(kPi * (p - 0.5));
  }
  // Solve in the lower tail where the CDF is computed without cancellation.
  const bool upper = p > 0.5;
  const double q = upper ? 1.0 - p : p;
  if (nu == 2.0) {
    const double t = (2.0 * q - 1.0) / std::sqrt(2.0 * q * (1.0 - q));
    return upper ? -t : t;
  }
  auto f = [&](double t) { return student_t_lower_tail(t, nu) - q; };
  double hi = 0.0;
  double lo = std::min(std_norm_quantile(q), -1e-3);
  while (f(lo) > 0.0) {
    hi = lo;
    lo *= 2.0;
    if (!std::isfinite(lo)) {
      return upper ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
    }
  }
  // Safeguarded Newton inside [lo, hi].
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double ft = f(t);
    if (ft == 0.0) break;
    if (ft > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    const double slope = std::exp(student_t_log_pdf(t, nu));
    double next = t - ft / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - t) <= 4.0 * kEps * std::abs(t) ||
        hi - lo <= 4.0 * kEps * std::abs(t)) {
      t = next;
      break;
    }
    t = next;
  }
  return upper ? -t : t;
}

double debye1(double x) {
  if (x == 0.0 || std::isnan(x)) {
    throw DomainError("debye1: x must be nonzero");
  }
  if (x < 0.0) {
    return debye1(-x) - 0.5 * x;
  }
  return debye_integral(x) / x;
}

double bivariate_normal_cdf(double z1, double z2, double rho) {
  if (!(std::abs(rho) < 1.0)) {
    throw DomainError("bivariate_normal_cdf: |rho| must be below 1");
  }
  if (std::isnan(z1) || std::isnan(z2)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (z1 < -38.0 || z2 < -38.0) return 0.0;
  if (z1 == std::numeric_limits<double>::infinity()) return std_norm_cdf(z2);
  if (z2 == std::numeric_limits<double>::infinity()) return std_norm_cdf(z1);
  if (rho == 0.0) return std_norm_cdf(z1) * std_norm_cdf(z2);

  // Condition on the first coordinate:
  //   P(Z1 <= z1, Z2 <= z2) = int_{-inf}^{z1} phi(s) Phi((z2 - rho s) / r) ds
  const double r = std::sqrt((1.0 - rho) * (1.0 + rho));
  auto integrand = [&](double s) {
    return std_norm_pdf(s) * std_norm_cdf((z2 - rho * s) / r);
  };
  // phi is below 1e-22 outside [-10, 10]; the clipped mass is negligible.
  const double lo = std::min(-10.0, z1 - 12.0);
  const double hi = std::min(z1, 10.0);
  if (!(hi > lo)) return 0.0;
  std::vector<double> cuts{lo};
  for (double c = std::ceil(lo / 2.0) * 2.0; c < hi; c += 2.0) {
    if (c > lo) cuts.push_back(c);
  }
  cuts.push_back(hi);
  const double kink = z2 / rho;
  if (kink > lo && kink < hi) cuts.push_back(kink);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      total += integrate_adaptive(integrand, cuts[i], cuts[i + 1], 1e-16);
    }
  }
  return std::clamp(total, 0.0, std::min(std_norm_cdf(z1), std_norm_cdf(z2)));
}

double bivariate_t_cdf(double z1, double z2, double rho, double nu) {
  if (!(std::abs(rho) < 1.0)) {
    throw DomainError("bivariate_t_cdf: |rho| must be below 1");
  }
  if (!(nu > 0.0)) {
    throw DomainError("bivariate_t_cdf: nu must be positive");
  }
  if (std::isnan(z1) || std::isnan(z2)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (z1 == -inf || z2 == -inf) return 0.0;
  if (z1 == inf) return student_t_cdf(z2, nu);
  if (z2 == inf) return student_t_cdf(z1, nu);
  if (rho == 0.0) return student_t_cdf(z1, nu) * student_t_cdf(z2, nu);

  // Condition on the first coordinate, which is t_nu; given X1 = s the
  // second is rho s + sqrt((nu + s^2)(1 - rho^2)/(nu + 1)) * t_{nu+1}.
  // Substituting s = sqrt(nu) tan(phi) turns the t_nu density into
  // const * cos(phi)^(nu - 1) on a finite interval.
  const double sqrt_nu = std::sqrt(nu);
  const double one_m_rho2 = (1.0 - rho) * (1.0 + rho);
  const double log_const = log_t_constant(nu) - kLogSqrtPi;
  const double nu1 = nu + 1.0;
  auto integrand = [&](double phi) {
    const double c = std::cos(phi);
    if (!(c > 0.0)) return 0.0;
    const double s = sqrt_nu * std::tan(phi);
    const double scale = std::sqrt((nu + s * s) * one_m_rho2 / nu1);
    const double dens = std::exp(log_const + (nu - 1.0) * std::log(c));
    return dens * student_t_cdf((z2 - rho * s) / scale, nu1);
  };
  const double lo = -0.5 * kPi;
  const double hi = std::atan(z1 / sqrt_nu);
  std::vector<double> cuts{lo, hi};
  for (double c = lo + 0.2; c < hi; c += 0.2) cuts.push_back(c);
  const double kink = std::atan(z2 / rho / sqrt_nu);
  if (kink > lo && kink < hi) cuts.push_back(kink);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      total += integrate_adaptive(integrand, cuts[i], cuts[i + 1], 1e-16, 200);
    }
  }
  return std::clamp(total, 0.0,
                    std::min(student_t_cdf(z1, nu), student_t_cdf(z2, nu)));
}

RootBracket make_bracket(const std::function<double(double)>& f, double lo,
                         double hi) {
  return {lo, hi, f(lo), f(hi)};
}

double brent_root(const std::function<double(double)>& f,
                  const RootBracket& bracket, double tol, int max_iter) {
  if (!(bracket.lo < bracket.hi)) {
    throw InvalidBracketError("brent_root: bracket requires lo < hi");
  }
  if (bracket.f_lo == 0.0) return bracket.lo;
  if (bracket.f_hi == 0.0) return bracket.hi;
  if ((bracket.f_lo > 0.0) == (bracket.f_hi > 0.0)) {
    throw InvalidBracketError("brent_root: f(lo) and f(hi) share a sign");
  }
  double a = bracket.lo;
  double b = bracket.hi;
  double fa = bracket.f_lo;
  double fb = bracket.f_hi;
  double c = b;
  double fc = fb;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * kEps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || std::abs(fb) <= tol || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, or secant when only two points.
      const double s = fb / fa;
      double p = 0.0;
      double q = 0.0;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

}  // namespace localcop::specials
