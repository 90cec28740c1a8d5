#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "localcop/copula.hpp"
#include "localcop/dataset.hpp"

namespace localcop {

/// xoshiro256** seeded through splitmix64. uniform() maps the top 53 bits k
/// of each output to (k + 0.5) / 2^53, so draws lie strictly inside (0, 1).
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  double uniform();

 private:
  std::array<std::uint64_t, 4> s_{};
};

enum class EtaKind { Constant, SineCosine, Table };

struct EtaSpec {
  EtaKind kind = EtaKind::Constant;
  double value = 0.0;
  std::vector<std::pair<double, double>> table;  // (x, eta) knots

  static EtaSpec constant(double eta);
  /// eta(x) = sin(5 pi x) + cos(8 pi x^2) on [0, 1].
  static EtaSpec sine_cosine();
  /// Linear interpolation between knots; needs at least two knots with
  /// strictly increasing x.
  static EtaSpec from_table(std::vector<std::pair<double, double>> knots);
};

double eta_eval(const EtaSpec& spec, double x);

enum class XMode { UniformSorted, Given };

/// UniformSorted draws n covariates first and sorts them, then one (w1, w2)
/// pair per observation. Given uses `given_x` as is (n must match) and the
/// stream starts directly with the (w1, w2) pairs. Each observation is
/// u = w1, v = h_inv(w2 | u, theta(x_i)).
Dataset simulate_dataset(std::size_t n, CopulaFamily family, const EtaSpec& spec,
                         std::optional<double> nu, std::uint64_t seed,
                         XMode mode = XMode::UniformSorted,
                         const std::vector<double>& given_x = {});

/// Kendall's tau-a in O(n log n). Throws LengthError unless both sequences
/// have the same length >= 2.
double empirical_tau(const std::vector<double>& u, const std::vector<double>& v);

}  // namespace localcop
