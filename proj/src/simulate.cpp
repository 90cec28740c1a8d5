#include "localcop/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "localcop/errors.hpp"
#include "localcop/specials.hpp"

namespace localcop {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// Bottom-up merge sort of `v` that returns the number of inversions, i.e.
// pairs i < j with v[i] > v[j] (equal values are not counted).
std::int64_t sort_counting_swaps(std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> buffer(n);
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          swaps += static_cast<std::int64_t>(mid - i);
          buffer[k++] = v[j++];
        } else {
          buffer[k++] = v[i++];
        }
      }
      while (i < mid) buffer[k++] = v[i++];
      while (j < hi) buffer[k++] = v[j++];
    }
    std::swap(v, buffer);
  }
  return swaps;
}

// Sum of t (t - 1) / 2 over runs of equal values in a sorted sequence.
template <typename Equal>
std::int64_t tied_pairs(std::size_t n, Equal equal) {
  std::int64_t total = 0;
  std::int64_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && equal(i - 1, i)) {
      ++run;
    } else {
      total += run * (run - 1) / 2;
      run = 1;
    }
  }
  return total;
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (std::uint64_t& word : s_) word = splitmix64(sm);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() {
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53;
}

EtaSpec EtaSpec::constant(double eta) {
  if (!std::isfinite(eta)) throw DomainError("constant eta must be finite");
  EtaSpec spec;
  spec.kind = EtaKind::Constant;
  spec.value = eta;
  return spec;
}

EtaSpec EtaSpec::sine_cosine() {
  EtaSpec spec;
  spec.kind = EtaKind::SineCosine;
  return spec;
}

EtaSpec EtaSpec::from_table(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw ConfigError("eta table needs at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second)) {
      throw DomainError("eta table knots must be finite");
    }
    if (i > 0 && !(knots[i].first > knots[i - 1].first)) {
      throw ConfigError("eta table knots must be strictly increasing in x");
    }
  }
  EtaSpec spec;
  spec.kind = EtaKind::Table;
  spec.table = std::move(knots);
  return spec;
}

double eta_eval(const EtaSpec& spec, double x) {
  switch (spec.kind) {
    case EtaKind::Constant:
      return spec.value;
    case EtaKind::SineCosine:
      if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("the sine/cosine calibration function is defined on [0, 1]");
      }
      return std::sin(5.0 * specials::kPi * x) + std::cos(8.0 * specials::kPi * x * x);
    case EtaKind::Table: {
      const auto& t = spec.table;
      if (!(x >= t.front().first && x <= t.back().first)) {
        throw DomainError("x lies outside the eta table range");
      }
      auto hi = std::upper_bound(t.begin(), t.end(), x,
                                 [](double value, const auto& knot) { return value < knot.first; });
      if (hi == t.end()) return t.back().second;
      auto lo = hi - 1;
      const double w = (x - lo->first) / (hi->first - lo->first);
      return lo->second + w * (hi->second - lo->second);
    }
  }
  return 0.0;
}

Dataset simulate_dataset(std::size_t n, CopulaFamily family, const EtaSpec& spec,
                         std::optional<double> nu, std::uint64_t seed, XMode mode,
                         const std::vector<double>& given_x) {
  if (n == 0) throw ConfigError("simulate_dataset: n must be at least 1");
  if (family == CopulaFamily::StudentT && !nu) nu = kDefaultNu;
  if (family != CopulaFamily::StudentT) nu.reset();

  Xoshiro256 rng(seed);
  std::vector<double> x;
  if (mode == XMode::Given) {
    if (given_x.size() != n) throw LengthError("given covariates must have length n");
    x = given_x;
  } else {
    x.resize(n);
    for (double& xi : x) xi = rng.uniform();
    std::sort(x.begin(), x.end());
  }

  std::vector<double> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = eta_to_par(family, eta_eval(spec, x[i]));
    const double w1 = rng.uniform();
    const double w2 = rng.uniform();
    u[i] = w1;
    if (family == CopulaFamily::Frank && theta == 0.0) {
      v[i] = w2;
    } else {
      v[i] = h_inv(family, w2, w1, CopulaParams{theta, nu});
    }
  }
  return make_dataset(std::move(u), std::move(v), std::move(x));
}

double empirical_tau(const std::vector<double>& u, const std::vector<double>& v) {
  const std::size_t n = u.size();
  if (v.size() != n) throw LengthError("empirical_tau: sequences differ in length");
  if (n < 2) throw LengthError("empirical_tau: need at least two observations");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return u[a] < u[b] || (u[a] == u[b] && v[a] < v[b]);
  });
  std::vector<double> us(n), vs(n);
  for (std::size_t i = 0; i < n; ++i) {
    us[i] = u[order[i]];
    vs[i] = v[order[i]];
  }

  const auto n_pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t ties_u = tied_pairs(n, [&](std::size_t a, std::size_t b) { return us[a] == us[b]; });
  const std::int64_t ties_joint = tied_pairs(
      n, [&](std::size_t a, std::size_t b) { return us[a] == us[b] && vs[a] == vs[b]; });
  const std::int64_t swaps = sort_counting_swaps(vs);
  const std::int64_t ties_v = tied_pairs(n, [&](std::size_t a, std::size_t b) { return vs[a] == vs[b]; });

  const std::int64_t c_minus_d = n_pairs - ties_u - ties_v + ties_joint - 2 * swaps;
  return static_cast<double>(c_minus_d) / static_cast<double>(n_pairs);
}

}  // namespace localcop
