#include "localcop/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "localcop/copula.hpp"
#include "localcop/csv_io.hpp"
#include "localcop/errors.hpp"
#include "localcop/kernels.hpp"
#include "localcop/local_fit.hpp"
#include "localcop/selection.hpp"
#include "localcop/simulate.hpp"
#include "localcop/svg_plot.hpp"

namespace localcop {
namespace {

constexpr std::size_t kMaxGridPoints = 1000000;

CopulaFamily family_arg(const std::string& text) {
  const auto family = parse_family(text);
  if (!family) {
    throw ConfigError("unknown family '" + text +
                      "' (use 1-5 or gaussian, t, clayton, gumbel, frank)");
  }
  return *family;
}

KernelKind kernel_arg(const std::string& text) {
  const auto kind = parse_kernel(text);
  if (!kind) {
    throw ConfigError("unknown kernel '" + text + "' (use gaussian, epanechnikov, rectangular)");
  }
  return *kind;
}

double number_arg(const std::string& text, const char* what) {
  try {
    return parse_number(text);
  } catch (const IoError&) {
    throw ConfigError(std::string(what) + ": not a number: '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    items.push_back(text.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

std::optional<double> nu_arg(const std::optional<double>& nu) {
  if (nu && (!(*nu > 0.0) || !std::isfinite(*nu))) {
    throw ConfigError("--nu must be positive and finite");
  }
  return nu;
}

EtaSpec eta_arg(const std::string& text) {
  if (text == "sincos") return EtaSpec::sine_cosine();
  if (text.rfind("const:", 0) == 0) {
    const double value = number_arg(text.substr(6), "--eta");
    if (!std::isfinite(value)) throw ConfigError("--eta constant must be finite");
    return EtaSpec::constant(value);
  }
  throw ConfigError("--eta must be const:<value> or sincos");
}

std::vector<double> read_grid_file(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<double> grid;
  std::size_t start = 0;
  bool first = true;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first && line == "x0") {
      first = false;
      continue;
    }
    first = false;
    grid.push_back(parse_number(line));
  }
  if (grid.empty()) throw IoError("grid file '" + path + "' contains no values");
  return grid;
}

struct SimulateArgs {
  long long n = 0;
  std::string family;
  std::string eta;
  std::optional<double> nu;
  std::uint64_t seed = 1;
  std::string out;
};

struct FitArgs {
  std::string in;
  std::string family;
  std::optional<double> nu;
  double band = 0.0;
  std::string kernel = "gaussian";
  int degree = 1;
  std::string grid;
  std::string grid_file;
  std::string init = "global";
  std::string out;
  std::string svg;
  unsigned threads = 0;
};

struct SelectArgs {
  std::string in;
  std::string families = "1,2,3,4,5";
  std::string bands;
  long long n_loo = 0;
  std::string kernel = "gaussian";
  int degree = 1;
  std::optional<double> nu;
  std::string out;
  unsigned threads = 0;
};

struct TauArgs {
  std::string family;
  std::string direction;
  std::string value;
  std::optional<double> nu;
};

int cmd_simulate(const SimulateArgs& a) {
  if (a.n < 1) throw ConfigError("--n must be at least 1");
  const CopulaFamily family = family_arg(a.family);
  const EtaSpec spec = eta_arg(a.eta);
  const std::optional<double> nu = nu_arg(a.nu);
  Dataset data;
  try {
    data = simulate_dataset(static_cast<std::size_t>(a.n), family, spec, nu, a.seed);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  write_file_atomic(a.out, format_dataset(data));
  return kExitOk;
}

int cmd_fit(const FitArgs& a, std::ostream& err) {
  FitConfig cfg;
  cfg.family = family_arg(a.family);
  cfg.nu = nu_arg(a.nu);
  cfg.kernel.kind = kernel_arg(a.kernel);
  cfg.kernel.band = a.band;
  cfg.degree = a.degree;
  if (a.init != "global" && a.init != "warm") throw ConfigError("--init must be global or warm");
  if (!a.grid.empty() && !a.grid_file.empty()) {
    throw ConfigError("give either --grid or --grid-file, not both");
  }
  try {
    validate_config(cfg);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  std::vector<double> grid =
      a.grid_file.empty() ? parse_grid(a.grid.empty() ? "0:1:0.01" : a.grid) : read_grid_file(a.grid_file);

  const Dataset data = read_dataset(a.in);
  const LocalFitCurve curve =
      fit_curve(data, grid, cfg, a.init == "warm" ? InitStrategy::Warm : InitStrategy::Global,
                a.threads);
  const std::size_t n_converged = static_cast<std::size_t>(std::count_if(
      curve.points.begin(), curve.points.end(), [](const LocalFitPoint& p) { return p.converged; }));
  if (n_converged == 0) {
    err << "fit: no grid point converged\n";
    return kExitNoConvergence;
  }
  if (n_converged < curve.points.size()) {
    err << "fit: " << curve.points.size() - n_converged << " of " << curve.points.size()
        << " grid points did not converge\n";
  }
  const std::vector<CurveRow> rows = curve_rows(curve);
  if (!a.svg.empty()) {
    std::vector<std::pair<double, double>> pts;
    for (const CurveRow& r : rows) pts.emplace_back(r.x0, r.tau);
    const std::string title = "Conditional Kendall tau, " + std::string(family_name(cfg.family)) +
                              " copula, h = " + format_number(cfg.kernel.band);
    const std::string svg = render_line_svg(pts, title, "x0", "Kendall tau");
    write_file_atomic(a.svg, svg);
  }
  write_file_atomic(a.out, format_curve(rows));
  return kExitOk;
}

int cmd_select(const SelectArgs& a, std::ostream& err) {
  SelectionGrid grid;
  for (const std::string& f : split_list(a.families)) grid.families.push_back(family_arg(f));
  if (a.bands.empty()) throw ConfigError("--bands is required");
  for (const std::string& b : split_list(a.bands)) {
    const double band = number_arg(b, "--bands");
    if (!(band > 0.0) || !std::isfinite(band)) throw ConfigError("--bands values must be positive");
    grid.bands.push_back(band);
  }
  FitConfig cfg;
  cfg.nu = nu_arg(a.nu);
  cfg.kernel.kind = kernel_arg(a.kernel);
  cfg.degree = a.degree;
  try {
    validate_config(cfg);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (a.n_loo < 0) throw ConfigError("--n-loo must be positive");

  const Dataset data = read_dataset(a.in);
  grid.n_loo = a.n_loo == 0 ? data.size() : static_cast<std::size_t>(a.n_loo);
  if (grid.n_loo > data.size()) {
    throw ConfigError("--n-loo (" + std::to_string(grid.n_loo) +
                      ") exceeds the number of observations (" + std::to_string(data.size()) + ")");
  }
  const CvTable table = select_model(data, grid, cfg, a.threads);
  for (const CvRow& r : table.rows) {
    if (r.n_failed > 0) {
      err << "select: family " << family_code(r.family) << ", band " << format_number(r.band)
          << ": " << r.n_failed << " held-out refits failed\n";
    }
  }
  write_file_atomic(a.out, format_cv_table(table));
  return kExitOk;
}

int cmd_tau(const TauArgs& a, std::ostream& out) {
  const CopulaFamily family = family_arg(a.family);
  const double value = number_arg(a.value, "--value");
  double result = 0.0;
  try {
    if (a.direction == "par2tau") {
      CopulaParams params{value, nu_arg(a.nu).value_or(kDefaultNu)};
      validate_params(family, params);
      result = par_to_tau(family, value);
    } else if (a.direction == "tau2par") {
      result = tau_to_par(family, value);
    } else if (a.direction == "eta2tau") {
      if (!std::isfinite(value)) throw DomainError("eta must be finite");
      result = eta_to_tau(family, value);
    } else {
      throw ConfigError("--direction must be par2tau, tau2par or eta2tau");
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", result);
  out << buf << '\n';
  return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3) throw ConfigError("grid must be lo:hi:step or lo,hi,step");
  const double lo = number_arg(parts[0], "--grid");
  const double hi = number_arg(parts[1], "--grid");
  const double step = number_arg(parts[2], "--grid");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(step > 0.0) || !std::isfinite(step)) {
    throw ConfigError("grid bounds must be finite and the step positive");
  }
  if (hi < lo) throw ConfigError("grid upper bound is below the lower bound");
  const double count = std::round((hi - lo) / step) + 1.0;
  if (count > static_cast<double>(kMaxGridPoints)) throw ConfigError("grid has too many points");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = lo + static_cast<double>(k) * step;
  return grid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local likelihood estimation of conditional copulas", "localcop"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Simulate a conditional-copula dataset");
  simulate->add_option("--n", sim.n, "Number of observations")->required();
  simulate->add_option("--family", sim.family, "Family code 1-5 or name")->required();
  simulate->add_option("--eta", sim.eta, "Calibration function: const:<value> or sincos")->required();
  simulate->add_option("--nu", sim.nu, "Student-t degrees of freedom (default 4)");
  simulate->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  simulate->add_option("--out", sim.out, "Output dataset CSV")->required();

  FitArgs fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Estimate the calibration function on a grid");
  fit_cmd->add_option("--in", fit.in, "Input dataset CSV (u1,u2,x)")->required();
  fit_cmd->add_option("--family", fit.family, "Family code 1-5 or name")->required();
  fit_cmd->add_option("--nu", fit.nu, "Student-t degrees of freedom (default 4)");
  fit_cmd->add_option("--band", fit.band, "Kernel bandwidth")->required();
  fit_cmd->add_option("--kernel", fit.kernel, "gaussian, epanechnikov or rectangular")->capture_default_str();
  fit_cmd->add_option("--degree", fit.degree, "Local polynomial degree (0-4)")->capture_default_str();
  fit_cmd->add_option("--grid", fit.grid, "Grid lo:hi:step (default 0:1:0.01)");
  fit_cmd->add_option("--grid-file", fit.grid_file, "File with one x0 value per line");
  fit_cmd->add_option("--init", fit.init, "global or warm")->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "Output curve CSV")->required();
  fit_cmd->add_option("--svg", fit.svg, "Optional SVG plot of tau(x0)");
  fit_cmd->add_option("--threads", fit.threads, "Worker threads (0 = all cores)");

  SelectArgs sel;
  CLI::App* select = app.add_subcommand("select", "Choose family and bandwidth by LOO-CV");
  select->add_option("--in", sel.in, "Input dataset CSV (u1,u2,x)")->required();
  select->add_option("--families", sel.families, "Comma-separated families")->capture_default_str();
  select->add_option("--bands", sel.bands, "Comma-separated bandwidths")->required();
  select->add_option("--n-loo", sel.n_loo, "Number of held-out observations (default n)");
  select->add_option("--kernel", sel.kernel, "gaussian, epanechnikov or rectangular")->capture_default_str();
  select->add_option("--degree", sel.degree, "Local polynomial degree (0-4)")->capture_default_str();
  select->add_option("--nu", sel.nu, "Student-t degrees of freedom (default 4)");
  select->add_option("--out", sel.out, "Output CV table CSV")->required();
  select->add_option("--threads", sel.threads, "Worker threads (0 = all cores)");

  TauArgs tau;
  CLI::App* tau_cmd = app.add_subcommand("tau", "Convert between parameter, eta and Kendall tau");
  tau_cmd->add_option("--family", tau.family, "Family code 1-5 or name")->required();
  tau_cmd->add_option("--direction", tau.direction, "par2tau, tau2par or eta2tau")->required();
  tau_cmd->add_option("--value", tau.value, "Input value")->required();
  tau_cmd->add_option("--nu", tau.nu, "Student-t degrees of freedom (default 4)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "localcop: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim);
    if (fit_cmd->parsed()) return cmd_fit(fit, err);
    if (select->parsed()) return cmd_select(sel, err);
    return cmd_tau(tau, out);
  } catch (const ConfigError& e) {
    err << "localcop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "localcop: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "localcop: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace localcop
