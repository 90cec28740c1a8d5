#include "localcop/csv_io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "localcop/errors.hpp"

namespace localcop {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string field = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = field.find_first_not_of(" \t");
    const auto last = field.find_last_not_of(" \t");
    fields.push_back(first == std::string::npos ? std::string() : field.substr(first, last - first + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::vector<std::vector<std::string>> parse_table(const std::string& text,
                                                  const std::vector<std::string>& header,
                                                  const char* what) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty() || split_fields(lines[0]) != header) {
    std::string expected;
    for (const std::string& h : header) expected += (expected.empty() ? "" : ",") + h;
    throw IoError(std::string(what) + ": expected header line '" + expected + "'");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> fields = split_fields(lines[i]);
    if (fields.size() != header.size()) {
      throw IoError(std::string(what) + ": line " + std::to_string(i + 1) + " has " +
                    std::to_string(fields.size()) + " fields, expected " +
                    std::to_string(header.size()));
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

bool parse_bool(const std::string& field) {
  if (field == "true") return true;
  if (field == "false") return false;
  throw IoError("expected true or false, got '" + field + "'");
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double parse_number(const std::string& field) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw IoError("not a number: '" + field + "'");
  }
  return value;
}

Dataset parse_dataset(const std::string& text) {
  const auto rows = parse_table(text, {"u1", "u2", "x"}, "dataset");
  if (rows.empty()) throw IoError("dataset: no data rows");
  std::vector<double> u1, u2, x;
  for (const auto& r : rows) {
    u1.push_back(parse_number(r[0]));
    u2.push_back(parse_number(r[1]));
    x.push_back(parse_number(r[2]));
  }
  try {
    return make_dataset(std::move(u1), std::move(u2), std::move(x));
  } catch (const std::exception& e) {
    throw IoError(std::string("dataset: ") + e.what());
  }
}

Dataset read_dataset(const std::string& path) {
  return parse_dataset(read_file(path));
}

std::string format_dataset(const Dataset& data) {
  std::string out = "u1,u2,x\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out += format_number(data.u1[i]) + ',' + format_number(data.u2[i]) + ',' +
           format_number(data.x[i]) + '\n';
  }
  return out;
}

std::vector<CurveRow> curve_rows(const LocalFitCurve& curve) {
  const auto taus = curve_to_tau(curve);
  std::vector<CurveRow> rows;
  rows.reserve(curve.points.size());
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const LocalFitPoint& p = curve.points[i];
    const double theta = std::isfinite(p.eta) ? eta_to_par(curve.family, p.eta) : p.eta;
    rows.push_back(CurveRow{p.x0, p.eta, theta, taus[i].second, p.converged});
  }
  return rows;
}

std::string format_curve(const std::vector<CurveRow>& rows) {
  std::string out = "x0,eta,theta,tau,converged\n";
  for (const CurveRow& r : rows) {
    out += format_number(r.x0) + ',' + format_number(r.eta) + ',' + format_number(r.theta) +
           ',' + format_number(r.tau) + ',' + (r.converged ? "true" : "false") + '\n';
  }
  return out;
}

std::vector<CurveRow> parse_curve(const std::string& text) {
  const auto rows = parse_table(text, {"x0", "eta", "theta", "tau", "converged"}, "curve");
  std::vector<CurveRow> out;
  for (const auto& r : rows) {
    out.push_back(CurveRow{parse_number(r[0]), parse_number(r[1]), parse_number(r[2]),
                           parse_number(r[3]), parse_bool(r[4])});
  }
  return out;
}

std::string format_cv_table(const CvTable& table) {
  std::string out = "family,band,cv,selected\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const CvRow& r = table.rows[i];
    out += std::to_string(family_code(r.family)) + ',' + format_number(r.band) + ',' +
           format_number(r.cv) + ',' + (i == table.selected ? "true" : "false") + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw IoError("error while writing '" + path + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const int err = errno;
    std::remove(tmp.c_str());
    throw IoError("cannot move output into place at '" + path + "' (errno " +
                  std::to_string(err) + ")");
  }
}

}  // namespace localcop
