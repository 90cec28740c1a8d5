#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "localcop/copula.hpp"
#include "localcop/errors.hpp"
#include "localcop/specials.hpp"

using namespace localcop;

namespace {

CopulaParams params_for_tau(CopulaFamily family, double tau) {
  CopulaParams params{tau_to_par(family, tau), std::nullopt};
  if (family == CopulaFamily::StudentT) params.nu = 4.0;
  return params;
}

// Mixed central difference of the CDF.
double cdf_mixed_difference(CopulaFamily family, UnitPair p,
                            const CopulaParams& params, double h) {
  auto c = [&](double u, double v) { return cdf(family, {u, v}, params); };
  return (c(p.u + h, p.v + h) - c(p.u + h, p.v - h) - c(p.u - h, p.v + h) +
          c(p.u - h, p.v - h)) /
         (4.0 * h * h);
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("codes and names") {
    CHECK(family_from_code(3) == CopulaFamily::Clayton);
    CHECK(family_code(CopulaFamily::Frank) == 5);
    CHECK_THROWS_AS(family_from_code(0), DomainError);
    CHECK_THROWS_AS(family_from_code(6), DomainError);
    CHECK(parse_family("CLAYTON") == CopulaFamily::Clayton);
    CHECK(parse_family("t") == CopulaFamily::StudentT);
    CHECK(parse_family("2") == CopulaFamily::StudentT);
    CHECK(parse_family("Gumbel") == CopulaFamily::Gumbel);
    CHECK_FALSE(parse_family("joe").has_value());
    CHECK_FALSE(parse_family("7").has_value());
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate_params(CopulaFamily::Gaussian, {1.0, {}}), DomainError);
    CHECK_THROWS_AS(validate_params(CopulaFamily::StudentT, {0.5, {}}), DomainError);
    CHECK_THROWS_AS(validate_params(CopulaFamily::StudentT, {0.5, -2.0}), DomainError);
    CHECK_THROWS_AS(validate_params(CopulaFamily::Clayton, {0.0, {}}), DomainError);
    CHECK_THROWS_AS(validate_params(CopulaFamily::Gumbel, {0.99, {}}), DomainError);
    CHECK_THROWS_AS(validate_params(CopulaFamily::Frank, {0.0, {}}), DomainError);
    CHECK_NOTHROW(validate_params(CopulaFamily::Gumbel, {1.0, {}}));
    CHECK_NOTHROW(validate_params(CopulaFamily::Frank, {-3.0, {}}));
  }
}

TEST_SUITE("links") {
  TEST_CASE("spot values") {
    CHECK(eta_to_par(CopulaFamily::Gaussian, 0.0) == 0.0);
    CHECK(eta_to_par(CopulaFamily::Clayton, 0.0) == 1.0);
    CHECK(eta_to_par(CopulaFamily::Gumbel, 0.0) == 2.0);
    CHECK(eta_to_par(CopulaFamily::Frank, 1.5) == 1.5);
    CHECK(par_to_eta(CopulaFamily::Gaussian, 0.0) == 0.0);
    CHECK(par_to_eta(CopulaFamily::Clayton, 1.0) == 0.0);
  }

  TEST_CASE("round trips at random in-range theta") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (CopulaFamily family : kAllFamilies) {
      for (int i = 0; i < 50; ++i) {
        double theta = 0.0;
        switch (family) {
          case CopulaFamily::Gaussian:
          case CopulaFamily::StudentT: theta = -0.99 + 1.98 * unit(rng); break;
          case CopulaFamily::Clayton: theta = 0.01 + 30.0 * unit(rng); break;
          case CopulaFamily::Gumbel: theta = 1.001 + 20.0 * unit(rng); break;
          case CopulaFamily::Frank: theta = (unit(rng) < 0.5 ? -1 : 1) * (0.01 + 40.0 * unit(rng)); break;
        }
        const double eta = par_to_eta(family, theta);
        CHECK(std::abs(eta_to_par(family, eta) - theta) <= 1e-10 * std::max(1.0, std::abs(theta)));
      }
    }
  }

  TEST_CASE("boundary rejections") {
    CHECK_THROWS_AS(par_to_eta(CopulaFamily::Gumbel, 1.0), DomainError);
    CHECK_THROWS_AS(par_to_eta(CopulaFamily::Frank, 0.0), DomainError);
    CHECK_THROWS_AS(par_to_eta(CopulaFamily::Gaussian, -1.0), DomainError);
    CHECK_THROWS_AS(par_to_eta(CopulaFamily::Clayton, -0.5), DomainError);
  }

  TEST_CASE("image stays strictly inside the parameter range") {
    for (int k = 0; k <= 400; ++k) {
      const double eta = -20.0 + 0.1 * k;
      CHECK(std::abs(eta_to_par(CopulaFamily::Gaussian, eta)) < 1.0);
      CHECK(std::abs(eta_to_par(CopulaFamily::StudentT, eta)) < 1.0);
      CHECK(eta_to_par(CopulaFamily::Clayton, eta) > 0.0);
      CHECK(eta_to_par(CopulaFamily::Gumbel, eta) > 1.0);
    }
  }

  TEST_CASE("strictly increasing in eta") {
    for (CopulaFamily family : kAllFamilies) {
      double prev = eta_to_par(family, -8.0);
      for (int k = 1; k <= 160; ++k) {
        const double cur = eta_to_par(family, -8.0 + 0.1 * k);
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }

  TEST_CASE("link derivative matches finite differences") {
    for (CopulaFamily family : kAllFamilies) {
      for (double eta : {-2.5, -0.3, 0.0, 0.8, 3.0}) {
        const double h = 1e-6;
        const double fd = (eta_to_par(family, eta + h) - eta_to_par(family, eta - h)) / (2 * h);
        CHECK(std::abs(link_derivative(family, eta) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
      }
    }
  }
}

TEST_SUITE("kendall_tau") {
  TEST_CASE("closed-form spot values") {
    CHECK(std::abs(par_to_tau(CopulaFamily::Gaussian, 0.5) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(par_to_tau(CopulaFamily::Clayton, 2.0) - 0.5) < 1e-12);
    CHECK(std::abs(par_to_tau(CopulaFamily::Gumbel, 2.0) - 0.5) < 1e-12);
    CHECK(std::abs(tau_to_par(CopulaFamily::Clayton, 0.5) - 2.0) < 1e-12);
    CHECK(std::abs(tau_to_par(CopulaFamily::Gaussian, 1.0 / 3.0) - 0.5) < 1e-12);
  }

  TEST_CASE("frank via the debye relation") {
    // mpmath: 1 - 4/5 (1 - D1(5)) = 0.45670095816011690
    CHECK(std::abs(par_to_tau(CopulaFamily::Frank, 5.0) - 0.45670095816011690) < 1e-10);
    CHECK(std::abs(par_to_tau(CopulaFamily::Frank, 5.0) - 0.45671) < 1e-4);
    CHECK(std::abs(tau_to_par(CopulaFamily::Frank, 0.45671) - 5.0) < 1e-3);
    CHECK(std::abs(par_to_tau(CopulaFamily::Frank, -5.0) + 0.45670095816011690) < 1e-10);
  }

  TEST_CASE("frank small-theta series agrees with the debye formula") {
    // At theta = 0.02 the Debye route is accurate to ~1e-13.
    const double theta = 0.02;
    const double debye = 1.0 - 4.0 / theta * (1.0 - specials::debye1(theta));
    CHECK(std::abs(par_to_tau(CopulaFamily::Frank, 0.0099999) -
                   (0.0099999 / 9.0 - std::pow(0.0099999, 3) / 900.0)) < 1e-13);
    CHECK(std::abs(par_to_tau(CopulaFamily::Frank, theta) - debye) < 1e-15);
  }

  TEST_CASE("round trips") {
    for (CopulaFamily family : kAllFamilies) {
      const bool positive_only =
          family == CopulaFamily::Clayton || family == CopulaFamily::Gumbel;
      for (int k = 1; k <= 50; ++k) {
        double tau = positive_only ? k / 51.0 : -0.98 + 1.96 * k / 51.0;
        if (std::abs(tau) < 1e-9) continue;
        CHECK(std::abs(par_to_tau(family, tau_to_par(family, tau)) - tau) < 1e-8);
      }
    }
  }

  TEST_CASE("strictly increasing on a 100-point theta grid") {
    auto grid_theta = [](CopulaFamily family, int k) {
      const double s = k / 101.0;
      switch (family) {
        case CopulaFamily::Gaussian:
        case CopulaFamily::StudentT: return -0.99 + 1.98 * s;
        case CopulaFamily::Clayton: return 0.01 + 40.0 * s;
        case CopulaFamily::Gumbel: return 1.0 + 40.0 * s;
        case CopulaFamily::Frank: return -40.0 + 80.0 * s + 0.0037;
      }
      return 0.0;
    };
    for (CopulaFamily family : kAllFamilies) {
      double prev = par_to_tau(family, grid_theta(family, 1));
      for (int k = 2; k <= 100; ++k) {
        const double cur = par_to_tau(family, grid_theta(family, k));
        CHECK(cur > prev);
        prev = cur;
      }
    }
    CHECK(par_to_tau(CopulaFamily::Clayton, 1e-6) >= 0.0);
    CHECK(par_to_tau(CopulaFamily::Gumbel, 1e6) < 1.0);
  }

  TEST_CASE("unattainable tau is rejected") {
    CHECK_THROWS_AS(tau_to_par(CopulaFamily::Clayton, 0.0), DomainError);
    CHECK_THROWS_AS(tau_to_par(CopulaFamily::Clayton, -0.2), DomainError);
    CHECK_THROWS_AS(tau_to_par(CopulaFamily::Gumbel, 1.0), DomainError);
    CHECK_THROWS_AS(tau_to_par(CopulaFamily::Frank, 0.0), DomainError);
    CHECK_THROWS_AS(tau_to_par(CopulaFamily::Gaussian, -1.0), DomainError);
    CHECK_THROWS_AS(par_to_tau(CopulaFamily::Clayton, -1.0), DomainError);
  }

  TEST_CASE("eta_to_tau composes the maps") {
    CHECK(std::abs(eta_to_tau(CopulaFamily::Clayton, 0.0) - 1.0 / 3.0) < 1e-15);
    CHECK(eta_to_tau(CopulaFamily::Gaussian, 0.0) == 0.0);
    CHECK(std::abs(eta_to_tau(CopulaFamily::Gumbel, 0.0) - 0.5) < 1e-15);
    CHECK(eta_to_tau(CopulaFamily::Frank, 0.0) == 0.0);
  }
}

TEST_SUITE("cdf") {
  TEST_CASE("reference values") {
    // Direct high-precision evaluation of the closed forms.
    CHECK(std::abs(cdf(CopulaFamily::Clayton, {0.5, 0.5}, {2.0, {}}) - 0.37796447300922723) < 1e-13);
    CHECK(std::abs(cdf(CopulaFamily::Frank, {0.5, 0.5}, {5.0, {}}) - 0.37714851074652086) < 1e-13);
    CHECK(std::abs(cdf(CopulaFamily::Gaussian, {0.3, 1.0}, {0.7, {}}) - 0.3) < 1e-9);
    CHECK(std::abs(cdf(CopulaFamily::Gaussian, {0.5, 0.5}, {0.5, {}}) - 1.0 / 3.0) < 1e-12);
  }

  TEST_CASE("uniform margins at the clamp boundary") {
    for (CopulaFamily family : kAllFamilies) {
      for (double tau : {0.2, 0.5, 0.8}) {
        const CopulaParams params = params_for_tau(family, tau);
        for (double x : {0.05, 0.3, 0.77}) {
          CHECK(std::abs(cdf(family, {x, 1.0}, params) - x) < 1e-9);
          CHECK(std::abs(cdf(family, {1.0, x}, params) - x) < 1e-9);
        }
      }
    }
  }

  TEST_CASE("frechet bounds, exchangeability and the 2-increasing property") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    for (CopulaFamily family : kAllFamilies) {
      for (double tau : {0.2, 0.5, 0.8}) {
        const CopulaParams params = params_for_tau(family, tau);
        for (int i = 0; i < 20; ++i) {
          const double u = unit(rng);
          const double v = unit(rng);
          const double c = cdf(family, {u, v}, params);
          CHECK(c >= std::max(u + v - 1.0, 0.0) - 1e-15);
          CHECK(c <= std::min(u, v) + 1e-15);
          CHECK(std::abs(c - cdf(family, {v, u}, params)) < 1e-14);
          const double u2 = std::min(u + 0.05, 0.999);
          const double v2 = std::min(v + 0.05, 0.999);
          const double volume = cdf(family, {u2, v2}, params) - cdf(family, {u2, v}, params) -
                                cdf(family, {u, v2}, params) + c;
          CHECK(volume >= -1e-14);
        }
      }
    }
  }

  TEST_CASE("negative dependence stays inside the bounds") {
    for (CopulaFamily family : {CopulaFamily::Gaussian, CopulaFamily::StudentT, CopulaFamily::Frank}) {
      const CopulaParams params = params_for_tau(family, -0.6);
      for (double u : {0.1, 0.5, 0.9}) {
        for (double v : {0.2, 0.6, 0.95}) {
          const double c = cdf(family, {u, v}, params);
          CHECK(c >= std::max(u + v - 1.0, 0.0) - 1e-15);
          CHECK(c <= u * v + 1e-15);
        }
      }
    }
  }
}

TEST_SUITE("log_pdf") {
  TEST_CASE("reference values") {
    CHECK(log_pdf(CopulaFamily::Gaussian, {0.2, 0.9}, {0.0, {}}) == doctest::Approx(0.0));
    // log of the mixed partial of the Clayton CDF at (0.5, 0.5), theta = 2
    CHECK(std::abs(log_pdf(CopulaFamily::Clayton, {0.5, 0.5}, {2.0, {}}) - 0.39271999938949829) < 1e-13);
    CHECK(std::abs(log_pdf(CopulaFamily::Clayton, {0.5, 0.5}, {2.0, {}}) - std::log(1.48100)) < 1e-5);
    CHECK(log_pdf(CopulaFamily::Frank, {0.2, 0.7}, {5.0, {}}) ==
          doctest::Approx(log_pdf(CopulaFamily::Frank, {0.7, 0.2}, {5.0, {}})).epsilon(1e-14));
  }

  TEST_CASE("exchangeability and radial symmetry") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.001, 0.999);
    for (CopulaFamily family : kAllFamilies) {
      const CopulaParams params = params_for_tau(family, 0.45);
      for (int i = 0; i < 50; ++i) {
        const double u = unit(rng);
        const double v = unit(rng);
        const double l = log_pdf(family, {u, v}, params);
        CHECK(std::isfinite(l));
        CHECK(std::abs(l - log_pdf(family, {v, u}, params)) <= 1e-13 * std::max(1.0, std::abs(l)));
        if (family == CopulaFamily::Gaussian || family == CopulaFamily::StudentT ||
            family == CopulaFamily::Frank) {
          CHECK(std::abs(l - log_pdf(family, {1.0 - u, 1.0 - v}, params)) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("density is the mixed partial of the cdf") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    for (CopulaFamily family : kAllFamilies) {
      for (double tau : {0.2, 0.5, 0.8}) {
        const CopulaParams params = params_for_tau(family, tau);
        for (int i = 0; i < 10; ++i) {
          const UnitPair p{unit(rng), unit(rng)};
          const double density = std::exp(log_pdf(family, p, params));
          const double fd = cdf_mixed_difference(family, p, params, 1e-4);
          CHECK(std::abs(density - fd) < 1e-4);
        }
      }
    }
  }

  TEST_CASE("theta derivative matches finite differences") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.001, 0.999);
    for (CopulaFamily family : kAllFamilies) {
      const DensityEvaluator eval(family, 4.0);
      for (double tau : {-0.5, 0.1, 0.4, 0.85}) {
        if (tau < 0.0 && (family == CopulaFamily::Clayton || family == CopulaFamily::Gumbel)) continue;
        const double theta = tau_to_par(family, tau);
        for (int i = 0; i < 20; ++i) {
          const PreparedPair p = eval.prepare({unit(rng), unit(rng)});
          const double h = 1e-6 * std::max(1.0, std::abs(theta));
          const double fd = (eval.evaluate(p, theta + h).value - eval.evaluate(p, theta - h).value) / (2 * h);
          const double an = eval.evaluate(p, theta).dtheta;
          CHECK(std::abs(an - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
        }
      }
    }
  }

  TEST_CASE("frank is smooth through theta = 0") {
    const DensityEvaluator eval(CopulaFamily::Frank, std::nullopt);
    const PreparedPair p = eval.prepare({0.23, 0.81});
    CHECK(eval.evaluate(p, 0.0).value == 0.0);
    for (double theta : {-2e-4, -9e-5, -1e-8, 1e-8, 9e-5, 1.01e-4, 2e-4}) {
      const double h = 1e-6;
      const double fd = (eval.evaluate(p, theta + h).value - eval.evaluate(p, theta - h).value) / (2 * h);
      CHECK(std::abs(eval.evaluate(p, theta).dtheta - fd) < 1e-8);
    }
    // the series and the exact form agree at the switch point
    const double below = eval.evaluate(p, 0.99999e-4).value;
    const double above = eval.evaluate(p, 1.00001e-4).value;
    CHECK(std::abs(above - below) < 1e-9);
  }

  TEST_CASE("extreme parameters stay finite") {
    for (double u : {1e-10, 0.5, 1 - 1e-10}) {
      for (double v : {1e-10, 0.3, 1 - 1e-10}) {
        CHECK(std::isfinite(log_pdf(CopulaFamily::Clayton, {u, v}, {200.0, {}})));
        CHECK(std::isfinite(log_pdf(CopulaFamily::Clayton, {u, v}, {1e-9, {}})));
        CHECK(std::isfinite(log_pdf(CopulaFamily::Gumbel, {u, v}, {60.0, {}})));
        CHECK(std::isfinite(log_pdf(CopulaFamily::Gumbel, {u, v}, {1.0, {}})));
        CHECK(std::isfinite(log_pdf(CopulaFamily::Frank, {u, v}, {300.0, {}})));
        CHECK(std::isfinite(log_pdf(CopulaFamily::Frank, {u, v}, {-300.0, {}})));
        CHECK(std::isfinite(log_pdf(CopulaFamily::Gaussian, {u, v}, {0.999, {}})));
        CHECK(std::isfinite(log_pdf(CopulaFamily::StudentT, {u, v}, {-0.999, 4.0})));
      }
    }
  }

  TEST_CASE("density integrates to one on the tensor rule") {
    // Tail-dependent families at strong dependence put too much curvature in
    // the corners for a plain 128-point rule; those are covered by the
    // conditional-slice check below.
    const specials::QuadratureRule& rule = specials::gauss_legendre(128);
    auto tensor_total = [&](CopulaFamily family, double tau) {
      const CopulaParams params = params_for_tau(family, tau);
      const DensityEvaluator eval(family, params.nu);
      double total = 0.0;
      for (std::size_t i = 0; i < rule.order; ++i) {
        const double u = 0.5 * (1.0 + rule.nodes[i]);
        for (std::size_t j = 0; j < rule.order; ++j) {
          const double v = 0.5 * (1.0 + rule.nodes[j]);
          total += 0.25 * rule.weights[i] * rule.weights[j] *
                   std::exp(eval.evaluate(eval.prepare({u, v}), params.theta).value);
        }
      }
      return total;
    };
    for (CopulaFamily family : kAllFamilies) {
      CHECK(std::abs(tensor_total(family, 0.2) - 1.0) < 1e-4);
    }
    for (double tau : {0.5, 0.8}) {
      CHECK(std::abs(tensor_total(CopulaFamily::Gaussian, tau) - 1.0) < 1e-4);
      CHECK(std::abs(tensor_total(CopulaFamily::Frank, tau) - 1.0) < 1e-4);
    }
  }

  TEST_CASE("conditional slices of the density integrate to one") {
    for (CopulaFamily family : kAllFamilies) {
      for (double tau : {0.2, 0.5, 0.8}) {
        const CopulaParams params = params_for_tau(family, tau);
        for (double u : {0.01, 0.3, 0.5, 0.9}) {
          const double mass = specials::integrate_adaptive(
              [&](double v) { return std::exp(log_pdf(family, {u, v}, params)); }, 0.0, 1.0,
              1e-12, 2000);
          CHECK(std::abs(mass - 1.0) < 1e-8);
        }
      }
    }
  }
}

TEST_SUITE("h_functions") {
  TEST_CASE("spot values") {
    CHECK(std::abs(h_fun(CopulaFamily::Gaussian, 0.37, 0.8, {0.0, {}}) - 0.37) < 1e-14);
    // d/du of the Clayton CDF at (0.5, 0.5), theta = 2
    CHECK(std::abs(h_fun(CopulaFamily::Clayton, 0.5, 0.5, {2.0, {}}) - 0.43195939772483112) < 1e-13);
    CHECK(std::abs(h_inv(CopulaFamily::Clayton, 0.43195, 0.5, {2.0, {}}) - 0.5) < 1e-4);
    CHECK(std::abs(h_inv(CopulaFamily::Clayton, 0.43195939772483112, 0.5, {2.0, {}}) - 0.5) < 1e-6);
    CHECK(std::abs(h_inv(CopulaFamily::Gaussian, 0.61, 0.2, {0.0, {}}) - 0.61) < 1e-14);
  }

  TEST_CASE("total conditional mass") {
    for (CopulaFamily family : kAllFamilies) {
      const CopulaParams params = params_for_tau(family, 0.5);
      for (double u : {0.1, 0.5, 0.9}) {
        CHECK(h_fun(family, 1.0, u, params) > 1.0 - 1e-6);
        CHECK(h_fun(family, 0.0, u, params) < 1e-6);
      }
    }
  }

  TEST_CASE("h matches the u-derivative of the cdf and is monotone in v") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.02, 0.98);
    for (CopulaFamily family : kAllFamilies) {
      for (double tau : {-0.4, 0.3, 0.7}) {
        if (tau < 0.0 && (family == CopulaFamily::Clayton || family == CopulaFamily::Gumbel)) continue;
        const CopulaParams params = params_for_tau(family, tau);
        for (int i = 0; i < 10; ++i) {
          const double u = unit(rng);
          const double v = unit(rng);
          const double step = 1e-5;
          const double fd = (cdf(family, {u + step, v}, params) - cdf(family, {u - step, v}, params)) / (2 * step);
          const double h = h_fun(family, v, u, params);
          CHECK(std::abs(h - fd) < 1e-5);
          CHECK(h_fun(family, std::min(v + 0.01, 0.99), u, params) >= h);
        }
      }
    }
  }

  TEST_CASE("h_inv inverts h_fun") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unit(0.001, 0.999);
    for (CopulaFamily family : kAllFamilies) {
      for (double tau : {-0.7, 0.05, 0.5, 0.9}) {
        if (tau < 0.0 && (family == CopulaFamily::Clayton || family == CopulaFamily::Gumbel)) continue;
        const CopulaParams params = params_for_tau(family, tau);
        for (int i = 0; i < 20; ++i) {
          const double u = unit(rng);
          const double p = unit(rng);
          const double v = h_inv(family, p, u, params);
          CHECK(std::abs(h_fun(family, v, u, params) - p) < 1e-8);
        }
      }
    }
  }

  TEST_CASE("gumbel round trip recovers v") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    const CopulaParams params{3.0, {}};
    for (int i = 0; i < 50; ++i) {
      const double u = unit(rng);
      const double v = unit(rng);
      const double p = h_fun(CopulaFamily::Gumbel, v, u, params);
      CHECK(std::abs(h_inv(CopulaFamily::Gumbel, p, u, params) - v) < 1e-7);
    }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(h_inv(CopulaFamily::Clayton, 0.0, 0.5, {2.0, {}}), DomainError);
    CHECK_THROWS_AS(h_inv(CopulaFamily::Clayton, 0.5, 0.5, {-2.0, {}}), DomainError);
    CHECK_THROWS_AS(h_fun(CopulaFamily::StudentT, 0.5, 0.5, {0.3, {}}), DomainError);
  }
}
