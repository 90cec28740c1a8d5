#pragma once

// Family and bandwidth selection by leave-one-out cross-validation on a
// deterministic subsample of held-out observations.

#include <cstddef>
#include <vector>

#include "localcop/copula.hpp"
#include "localcop/dataset.hpp"
#include "localcop/local_fit.hpp"

namespace localcop {

/// Score given to a held-out term whose refit failed.
inline constexpr double kFailedTermScore = -1e6;

struct SelectionGrid {
  std::vector<CopulaFamily> families;
  std::vector<double> bands;
  std::size_t n_loo = 0;
};

struct CvRow {
  CopulaFamily family = CopulaFamily::Gaussian;
  double band = 0.0;
  double cv = 0.0;
  std::size_t n_failed = 0;  // held-out terms scored as kFailedTermScore
};

struct CvTable {
  std::vector<CvRow> rows;  // family code ascending, then band ascending
  std::size_t selected = 0;
};

/// Observations at ranks floor((j + 0.5) n / n_loo), j < n_loo, of the
/// stably sorted covariate. Duplicate ranks are replaced by the nearest
/// unused rank. Returned in rank order.
std::vector<std::size_t> loo_indices(std::size_t n, std::size_t n_loo,
                                     const std::vector<double>& x);

/// Sum over held-out i of log c(u_i, v_i | g^{-1}(eta_{-i}(x_i))), where
/// eta_{-i} is the local fit at x_i without observation i. `cfg` supplies
/// kernel kind, degree, nu and optimizer settings; family and band are the
/// arguments.
double cv_score(const Dataset& data, CopulaFamily family, double band,
                const FitConfig& cfg, const std::vector<std::size_t>& idx,
                std::size_t* n_failed = nullptr, unsigned threads = 1);

/// Index of the best row of a canonically ordered table: largest cv, ties
/// to the smaller family code, then the larger band.
std::size_t best_row(const std::vector<CvRow>& rows);

/// One row per distinct (family, band) pair in canonical order. The
/// selected row maximizes cv; ties go to the smaller family code, then the
/// larger band. The result does not depend on `threads`.
CvTable select_model(const Dataset& data, const SelectionGrid& grid,
                     const FitConfig& cfg, unsigned threads = 0);

}  // namespace localcop
