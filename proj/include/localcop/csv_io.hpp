#pragma once

// CSV formats for datasets, fitted curves and cross-validation tables.
// Numbers are written with 17 significant digits so files re-read exactly.

#include <string>
#include <vector>

#include "localcop/dataset.hpp"
#include "localcop/local_fit.hpp"
#include "localcop/selection.hpp"

namespace localcop {

struct CurveRow {
  double x0 = 0.0;
  double eta = 0.0;
  double theta = 0.0;
  double tau = 0.0;
  bool converged = false;
};

std::string format_number(double value);
/// Locale-independent; the whole field must parse. Accepts nan/inf.
double parse_number(const std::string& field);

/// Header u1,u2,x. LF or CRLF line endings, blank trailing lines ignored.
Dataset parse_dataset(const std::string& text);
Dataset read_dataset(const std::string& path);
std::string format_dataset(const Dataset& data);

std::vector<CurveRow> curve_rows(const LocalFitCurve& curve);
std::string format_curve(const std::vector<CurveRow>& rows);
std::vector<CurveRow> parse_curve(const std::string& text);

std::string format_cv_table(const CvTable& table);

/// Whole-file helpers. write_file_atomic writes to a sibling temporary file
/// and renames it over `path`, so a failed write never leaves a partial
/// file behind. Both throw IoError.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace localcop
