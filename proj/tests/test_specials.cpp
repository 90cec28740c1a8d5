#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "localcop/errors.hpp"
#include "localcop/specials.hpp"

using namespace localcop::specials;
using doctest::Approx;

namespace {

// Trapezoid rule on integral_0^x t/(e^t - 1) dt with a million steps.
double debye1_trapezoid(double x) {
  const int steps = 1'000'000;
  const double h = x / steps;
  auto f = [](double t) { return t == 0.0 ? 1.0 : t / std::expm1(t); };
  double sum = 0.5 * (f(0.0) + f(x));
  for (int i = 1; i < steps; ++i) sum += f(i * h);
  return sum * h / x;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("gauss-legendre rules satisfy their invariants") {
    for (std::size_t n : {1u, 2u, 5u, 16u, 64u, 128u}) {
      const QuadratureRule& rule = gauss_legendre(n);
      REQUIRE(rule.order == n);
      REQUIRE(rule.nodes.size() == n);
      REQUIRE(rule.weights.size() == n);
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(rule.weights[i] > 0.0);
        CHECK(rule.nodes[i] > -1.0);
        CHECK(rule.nodes[i] < 1.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        total += rule.weights[i];
      }
      CHECK(std::abs(total - 2.0) < 1e-12);
    }
  }

  TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const QuadratureRule& rule = gauss_legendre(8);
    // degree 15 = 2n - 1
    auto f = [](double x) { return std::pow(x, 14) + 3.0 * std::pow(x, 15); };
    CHECK(integrate_fixed(f, -1.0, 1.0, rule) == Approx(2.0 / 15.0).epsilon(1e-13));
  }

  TEST_CASE("adaptive integration handles a kink") {
    auto f = [](double x) { return std::abs(x - 0.3); };
    CHECK(integrate_adaptive(f, 0.0, 1.0, 1e-14) ==
          Approx(0.5 * 0.09 + 0.5 * 0.49).epsilon(1e-12));
  }
}

TEST_SUITE("normal") {
  TEST_CASE("cdf values") {
    CHECK(std_norm_cdf(0.0) == 0.5);
    // mpmath: Phi(1.959963985) = 0.97500000002688156
    CHECK(std::abs(std_norm_cdf(1.959963985) - 0.97500000002688156) < 1e-12);
    for (double z : {0.1, 0.7, 1.3, 2.9, 5.5, 8.0}) {
      CHECK(std::abs(std_norm_cdf(z) + std_norm_cdf(-z) - 1.0) < 1e-15);
    }
  }

  TEST_CASE("tail saturation") {
    CHECK(std_norm_cdf(40.5) == 1.0);
    CHECK(std_norm_cdf(-40.5) == 0.0);
    CHECK(std_norm_cdf(-37.0) > 0.0);
  }

  TEST_CASE("quantile values and round trip") {
    CHECK(std_norm_quantile(0.5) == 0.0);
    // mpmath: 1.9599639845400542
    CHECK(std::abs(std_norm_quantile(0.975) - 1.9599639845400542) < 1e-6);
    for (double p : {0.01, 0.2, 0.8, 0.99}) {
      CHECK(std::abs(std_norm_cdf(std_norm_quantile(p)) - p) < 1e-10);
    }
  }

  TEST_CASE("quantile domain") {
    CHECK_THROWS_AS(std_norm_quantile(0.0), localcop::DomainError);
    CHECK_THROWS_AS(std_norm_quantile(1.0), localcop::DomainError);
    CHECK_THROWS_AS(std_norm_quantile(-0.2), localcop::DomainError);
  }

  TEST_CASE("round trip over a log-spaced probability grid") {
    for (int k = 0; k <= 200; ++k) {
      const double p = 1e-6 + (1.0 - 2e-6) * k / 200.0;
      CHECK(std::abs(std_norm_cdf(std_norm_quantile(p)) - p) < 1e-9);
    }
    for (double p : {1e-6, 1e-5, 1e-4, 1 - 1e-4, 1 - 1e-5, 1 - 1e-6}) {
      CHECK(std::abs(std_norm_cdf(std_norm_quantile(p)) - p) < 1e-9);
    }
  }
}

TEST_SUITE("student_t") {
  TEST_CASE("cdf values") {
    CHECK(student_t_cdf(0.0, 4.0) == 0.5);
    CHECK(std::abs(student_t_cdf(1.5, 4.0) - 0.896) < 1e-13);
    CHECK(std::abs(student_t_cdf(-2.5, 3.5) - 0.0378473219047450395) < 1e-13);
    CHECK(std::abs(student_t_cdf(0.3, 0.7) - 0.585382406814332467) < 1e-13);
    CHECK(student_t_cdf(-40.0, 2.5) ==
          Approx(7.09781714524669146e-05).epsilon(1e-11));
  }

  TEST_CASE("cauchy closed form") {
    for (double z : {-30.0, -2.0, -0.4, 0.0, 0.9, 3.0, 100.0}) {
      CHECK(std::abs(student_t_cdf(z, 1.0) - (0.5 + std::atan(z) / kPi)) < 1e-13);
    }
  }

  TEST_CASE("large nu approaches the normal") {
    CHECK(std::abs(student_t_cdf(1.0, 1e6) - std_norm_cdf(1.0)) < 1e-5);
    CHECK(std::abs(student_t_cdf(1.0, 1e6) - 0.841344625083210935) < 1e-11);
  }

  TEST_CASE("symmetry and monotonicity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> zdist(-8.0, 8.0);
    std::uniform_real_distribution<double> nudist(0.5, 30.0);
    for (int i = 0; i < 200; ++i) {
      const double z = zdist(rng);
      const double nu = nudist(rng);
      CHECK(std::abs(student_t_cdf(-z, nu) - (1.0 - student_t_cdf(z, nu))) < 1e-14);
      CHECK(student_t_cdf(z + 0.01, nu) >= student_t_cdf(z, nu));
    }
  }

  TEST_CASE("quantile is the inverse of the cdf") {
    for (double nu : {0.5, 1.0, 2.0, 3.3, 4.0, 10.0, 200.0}) {
      for (int k = 0; k <= 100; ++k) {
        const double p = 1e-6 + (1.0 - 2e-6) * k / 100.0;
        const double t = student_t_quantile(p, nu);
        CHECK(std::abs(student_t_cdf(t, nu) - p) < 1e-9);
      }
      // |z| <= 4 keeps the tail probability well conditioned in double.
      for (double z : {-4.0, -1.0, -0.2, 0.0, 0.4, 2.0, 4.0}) {
        CHECK(std::abs(student_t_quantile(student_t_cdf(z, nu), nu) - z) < 1e-9);
      }
    }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(student_t_cdf(1.0, 0.0), localcop::DomainError);
    CHECK_THROWS_AS(student_t_quantile(0.0, 3.0), localcop::DomainError);
    CHECK_THROWS_AS(student_t_quantile(0.5, -1.0), localcop::DomainError);
  }
}

TEST_SUITE("log_gamma") {
  TEST_CASE("identities") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-14);
    CHECK(std::abs(log_gamma(0.5) - 0.57236494292470008707) < 1e-13);
    CHECK(std::abs(log_gamma(7.3) - 7.14789252302224903) < 1e-13);
    CHECK(std::abs(log_gamma(0.01) - 4.59947987804202172) < 1e-13);
  }

  TEST_CASE("relative accuracy against tgamma up to 30") {
    for (int k = 1; k <= 300; ++k) {
      const double x = 0.1 * k;
      const double rel = std::abs(std::exp(log_gamma(x)) - std::tgamma(x)) / std::tgamma(x);
      CHECK(rel <= 1e-12);
    }
  }

  TEST_CASE("recurrence") {
    for (double x : {0.3, 1.7, 4.2, 11.0, 25.5}) {
      CHECK(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) < 1e-12);
    }
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(log_gamma(0.0), localcop::DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), localcop::DomainError);
  }
}

TEST_SUITE("debye") {
  TEST_CASE("small argument limit") {
    CHECK(std::abs(debye1(1e-8) - 1.0) < 1e-7);
  }

  TEST_CASE("reference values") {
    // mpmath quad at 40 digits. The value at 5 is 0.32087619770...
    CHECK(std::abs(debye1(5.0) - 0.32087619770014612) < 1e-10);
    CHECK(std::abs(debye1(1.0) - 0.77750463411224828) < 1e-10);
    CHECK(std::abs(debye1(20.0) - 0.082246701178200016) < 1e-10);
    CHECK(debye1(5.0) > 0.0);
    CHECK(debye1(5.0) < 1.0);
  }

  TEST_CASE("reflection identity D1(-x) = D1(x) + x/2") {
    for (double x : {0.05, 1.0, 5.0, 17.0}) {
      CHECK(std::abs(debye1(-x) - (debye1(x) + 0.5 * x)) < 1e-12);
    }
    CHECK(std::abs(debye1(-5.0) - 2.8208761977001461) < 1e-10);
  }

  TEST_CASE("matches a brute-force trapezoid") {
    for (double x : {0.1, 1.0, 5.0, 20.0}) {
      CHECK(std::abs(debye1(x) - debye1_trapezoid(x)) < 1e-8);
    }
  }

  TEST_CASE("domain") { CHECK_THROWS_AS(debye1(0.0), localcop::DomainError); }
}

TEST_SUITE("bivariate") {
  TEST_CASE("normal reference values") {
    CHECK(std::abs(bivariate_normal_cdf(0, 0, 0) - 0.25) < 1e-15);
    CHECK(std::abs(bivariate_normal_cdf(0, 0, 0.5) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(bivariate_normal_cdf(0.3, -0.7, 0.6) - 0.217167225451906379) < 1e-13);
    CHECK(std::abs(bivariate_normal_cdf(1.2, 0.4, -0.85) - 0.540456493140716280) < 1e-13);
    CHECK(std::abs(bivariate_normal_cdf(-1.5, -2.0, 0.95) - 0.0221000087641848828) < 1e-13);
    CHECK(std::abs(bivariate_normal_cdf(2.0, 1.0, 0.3) - 0.827282511535083047) < 1e-13);
  }

  TEST_CASE("normal arcsin identity on a rho grid") {
    for (int k = 0; k <= 20; ++k) {
      const double rho = -0.99 + 1.98 * k / 20.0;
      const double expected = 0.25 + std::asin(rho) / (2.0 * kPi);
      CHECK(std::abs(bivariate_normal_cdf(0, 0, rho) - expected) < 1e-7);
    }
  }

  TEST_CASE("normal marginalization") {
    const double inf = std::numeric_limits<double>::infinity();
    for (double z : {-2.0, 0.1, 1.4}) {
      CHECK(bivariate_normal_cdf(z, inf, 0.4) == std_norm_cdf(z));
      CHECK(std::abs(bivariate_normal_cdf(z, 30.0, 0.4) - std_norm_cdf(z)) < 1e-14);
    }
  }

  TEST_CASE("t reference values") {
    CHECK(std::abs(bivariate_t_cdf(0.3, -0.7, 0.6, 4) - 0.226952338782076674) < 1e-11);
    CHECK(std::abs(bivariate_t_cdf(1.2, 0.4, -0.85, 4) - 0.499229398727954959) < 1e-11);
    CHECK(std::abs(bivariate_t_cdf(-1.5, -2.0, 0.95, 2.5) - 0.0734474068214806110) < 1e-11);
    CHECK(std::abs(bivariate_t_cdf(2.0, 1.0, 0.3, 7) - 0.800505648138010093) < 1e-11);
  }

  TEST_CASE("t arcsin identity and independence") {
    for (double rho : {-0.9, -0.3, 0.2, 0.7, 0.95}) {
      const double expected = 0.25 + std::asin(rho) / (2.0 * kPi);
      CHECK(std::abs(bivariate_t_cdf(0, 0, rho, 4.0) - expected) < 1e-7);
    }
    CHECK(std::abs(bivariate_t_cdf(0.5, -0.3, 0.0, 3.0) -
                   student_t_cdf(0.5, 3.0) * student_t_cdf(-0.3, 3.0)) < 1e-15);
  }

  TEST_CASE("monotone in each argument") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> zd(-4.0, 4.0);
    std::uniform_real_distribution<double> rd(-0.95, 0.95);
    for (int i = 0; i < 50; ++i) {
      const double a = zd(rng);
      const double b = zd(rng);
      const double r = rd(rng);
      CHECK(bivariate_normal_cdf(a + 0.05, b, r) >= bivariate_normal_cdf(a, b, r));
      CHECK(bivariate_normal_cdf(a, b + 0.05, r) >= bivariate_normal_cdf(a, b, r));
      CHECK(bivariate_t_cdf(a + 0.05, b, r, 4.0) >= bivariate_t_cdf(a, b, r, 4.0));
      CHECK(bivariate_t_cdf(a, b + 0.05, r, 4.0) >= bivariate_t_cdf(a, b, r, 4.0));
    }
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(bivariate_normal_cdf(0, 0, 1.0), localcop::DomainError);
    CHECK_THROWS_AS(bivariate_t_cdf(0, 0, -1.0, 4.0), localcop::DomainError);
  }
}

TEST_SUITE("brent") {
  TEST_CASE("linear root") {
    auto f = [](double x) { return x - 2.0; };
    CHECK(std::abs(brent_root(f, make_bracket(f, 0.0, 5.0)) - 2.0) < 1e-10);
  }

  TEST_CASE("sqrt 2 against bisection") {
    auto f = [](double x) { return x * x - 2.0; };
    double lo = 1.0;
    double hi = 2.0;
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? hi : lo) = mid;
    }
    CHECK(std::abs(brent_root(f, make_bracket(f, 1.0, 2.0)) - lo) < 1e-7);
    CHECK(std::abs(lo - 1.4142136) < 1e-7);
  }

  TEST_CASE("root at an endpoint") {
    auto f = [](double x) { return x * (x - 3.0); };
    CHECK(brent_root(f, make_bracket(f, 0.0, 1.0)) == 0.0);
    CHECK(brent_root(f, make_bracket(f, 1.0, 3.0)) == 3.0);
  }

  TEST_CASE("invalid bracket") {
    auto f = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(brent_root(f, make_bracket(f, -1.0, 1.0)),
                    localcop::InvalidBracketError);
    CHECK_THROWS_AS(brent_root(f, RootBracket{1.0, 0.0, -1.0, 1.0}),
                    localcop::InvalidBracketError);
  }

  TEST_CASE("terminates on a discontinuous sign change") {
    auto f = [](double x) { return x < 0.7 ? -1.0 : 1.0; };
    const double r = brent_root(f, make_bracket(f, 0.0, 1.0), 1e-12);
    CHECK(std::abs(r - 0.7) < 1e-9);
  }
}
