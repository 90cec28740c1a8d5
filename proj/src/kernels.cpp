#include "localcop/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "localcop/errors.hpp"
#include "localcop/specials.hpp"

namespace localcop {

double kernel_eval(KernelKind kind, double z) {
  switch (kind) {
    case KernelKind::Gaussian:
      return std::exp(-0.5 * z * z) / std::sqrt(2.0 * specials::kPi);
    case KernelKind::Epanechnikov:
      return std::abs(z) < 1.0 ? 0.75 * (1.0 - z * z) : 0.0;
    case KernelKind::Rectangular:
      return std::abs(z) <= 1.0 ? 0.5 : 0.0;
  }
  return 0.0;
}

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Gaussian: return "gaussian";
    case KernelKind::Epanechnikov: return "epanechnikov";
    case KernelKind::Rectangular: return "rectangular";
  }
  return "unknown";
}

std::optional<KernelKind> parse_kernel(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (KernelKind kind :
       {KernelKind::Gaussian, KernelKind::Epanechnikov, KernelKind::Rectangular}) {
    if (lower == kernel_name(kind)) return kind;
  }
  return std::nullopt;
}

std::vector<double> local_weights(const std::vector<double>& x, double x0,
                                  const KernelSpec& spec) {
  if (!(spec.band > 0.0) || !std::isfinite(spec.band)) {
    throw DomainError("bandwidth must be positive and finite");
  }
  if (x.empty()) {
    throw LengthError("local_weights: empty covariate sequence");
  }
  std::vector<double> w(x.size());
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double k = kernel_eval(spec.kind, (x[i] - x0) / spec.band);
    w[i] = k < kWeightFloor ? 0.0 : k;
    any = any || w[i] > 0.0;
  }
  if (!any) {
    throw DegenerateWindowError("no observation has positive kernel weight");
  }
  return w;
}

}  // namespace localcop
