#include "localcop/selection.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "localcop/errors.hpp"
#include "localcop/parallel.hpp"
#include "localcop/simulate.hpp"

namespace localcop {
namespace {

// Empirical tau of the data without observation i, used to start each
// held-out refit.
double tau_without(const Dataset& data, std::size_t i) {
  if (data.size() < 3) return 0.0;
  std::vector<double> u, v;
  u.reserve(data.size() - 1);
  v.reserve(data.size() - 1);
  for (std::size_t j = 0; j < data.size(); ++j) {
    if (j == i) continue;
    u.push_back(data.u1[j]);
    v.push_back(data.u2[j]);
  }
  return empirical_tau(u, v);
}

struct HeldOutTerm {
  double value = kFailedTermScore;
  bool failed = true;
};

HeldOutTerm held_out_term(const LocalLikelihood& lik, const DensityEvaluator& density,
                          const Dataset& data, std::size_t i, double tau_hat) {
  const FitConfig& cfg = lik.config();
  HeldOutTerm term;
  try {
    std::vector<double> init(static_cast<std::size_t>(cfg.degree) + 1, 0.0);
    init[0] = initial_eta(cfg.family, tau_hat);
    const LocalFitPoint fit = lik.fit(lik.window(data.x[i], i), init);
    if (!std::isfinite(fit.eta)) return term;
    const PreparedPair pair = density.prepare(clamp_pair({data.u1[i], data.u2[i]}));
    const double value = density.evaluate(pair, eta_to_par(cfg.family, fit.eta)).value;
    if (!std::isfinite(value)) return term;
    term.value = value;
    term.failed = false;
  } catch (const DegenerateWindowError&) {
  } catch (const DomainError&) {
  }
  return term;
}

FitConfig with_family_band(FitConfig cfg, CopulaFamily family, double band) {
  cfg.family = family;
  cfg.kernel.band = band;
  return cfg;
}

}  // namespace

std::vector<std::size_t> loo_indices(std::size_t n, std::size_t n_loo,
                                     const std::vector<double>& x) {
  if (x.size() != n) throw LengthError("loo_indices: x must have length n");
  if (n_loo == 0) throw DomainError("n_loo must be at least 1");
  if (n_loo > n) throw DomainError("n_loo cannot exceed the number of observations");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  std::vector<bool> used(n, false);
  std::vector<std::size_t> ranks;
  ranks.reserve(n_loo);
  for (std::size_t j = 0; j < n_loo; ++j) {
    const auto r = static_cast<std::size_t>(
        std::floor((static_cast<double>(j) + 0.5) * static_cast<double>(n) /
                   static_cast<double>(n_loo)));
    std::size_t rank = std::min(r, n - 1);
    if (used[rank]) {
      // nearest unused rank, preferring the lower one at equal distance
      for (std::size_t dist = 1; dist < n; ++dist) {
        if (rank >= dist && !used[rank - dist]) {
          rank -= dist;
          break;
        }
        if (rank + dist < n && !used[rank + dist]) {
          rank += dist;
          break;
        }
      }
    }
    used[rank] = true;
    ranks.push_back(rank);
  }
  std::sort(ranks.begin(), ranks.end());
  std::vector<std::size_t> out;
  out.reserve(n_loo);
  for (std::size_t r : ranks) out.push_back(order[r]);
  return out;
}

double cv_score(const Dataset& data, CopulaFamily family, double band,
                const FitConfig& cfg, const std::vector<std::size_t>& idx,
                std::size_t* n_failed, unsigned threads) {
  for (std::size_t i : idx) {
    if (i >= data.size()) throw LengthError("held-out index out of range");
  }
  const LocalLikelihood lik(data, with_family_band(cfg, family, band));
  const DensityEvaluator density(family, lik.config().nu);
  std::vector<HeldOutTerm> terms(idx.size());
  parallel_for(idx.size(), threads, [&](std::size_t j) {
    terms[j] = held_out_term(lik, density, data, idx[j], tau_without(data, idx[j]));
  });
  double total = 0.0;
  std::size_t failed = 0;
  for (const HeldOutTerm& t : terms) {
    total += t.value;
    failed += t.failed ? 1 : 0;
  }
  if (n_failed) *n_failed = failed;
  return total;
}

std::size_t best_row(const std::vector<CvRow>& rows) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    // Rows arrive family-major with bands ascending, so a tie within the
    // same family moves to the larger band and a tie across families stays.
    if (rows[r].cv > rows[best].cv ||
        (rows[r].cv == rows[best].cv && rows[r].family == rows[best].family)) {
      best = r;
    }
  }
  return best;
}

CvTable select_model(const Dataset& data, const SelectionGrid& grid,
                     const FitConfig& cfg, unsigned threads) {
  if (grid.families.empty()) throw ConfigError("selection grid has no families");
  if (grid.bands.empty()) throw ConfigError("selection grid has no bandwidths");
  for (double b : grid.bands) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("bandwidths must be positive and finite");
  }
  validate_config(cfg);

  std::vector<CopulaFamily> families = grid.families;
  std::sort(families.begin(), families.end(),
            [](CopulaFamily a, CopulaFamily b) { return family_code(a) < family_code(b); });
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::vector<double> bands = grid.bands;
  std::sort(bands.begin(), bands.end());
  bands.erase(std::unique(bands.begin(), bands.end()), bands.end());

  const std::vector<std::size_t> idx = loo_indices(data.size(), grid.n_loo, data.x);
  std::vector<double> taus(idx.size());
  parallel_for(idx.size(), threads, [&](std::size_t j) { taus[j] = tau_without(data, idx[j]); });

  CvTable table;
  std::vector<std::unique_ptr<LocalLikelihood>> liks;
  std::vector<std::unique_ptr<DensityEvaluator>> densities;
  for (CopulaFamily family : families) {
    for (double band : bands) {
      table.rows.push_back(CvRow{family, band, 0.0, 0});
      liks.push_back(std::make_unique<LocalLikelihood>(data, with_family_band(cfg, family, band)));
      densities.push_back(
          std::make_unique<DensityEvaluator>(family, liks.back()->config().nu));
    }
  }

  // Every (row, held-out point) refit is an independent work item; terms are
  // summed per row in held-out order afterwards.
  const std::size_t per_row = idx.size();
  std::vector<HeldOutTerm> terms(table.rows.size() * per_row);
  parallel_for(terms.size(), threads, [&](std::size_t item) {
    const std::size_t r = item / per_row;
    const std::size_t j = item % per_row;
    terms[item] = held_out_term(*liks[r], *densities[r], data, idx[j], taus[j]);
  });

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    double total = 0.0;
    for (std::size_t j = 0; j < per_row; ++j) {
      total += terms[r * per_row + j].value;
      table.rows[r].n_failed += terms[r * per_row + j].failed ? 1 : 0;
    }
    table.rows[r].cv = total;
  }

  table.selected = best_row(table.rows);
  return table;
}

}  // namespace localcop
