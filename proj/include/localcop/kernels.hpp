#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace localcop {

enum class KernelKind { Gaussian, Epanechnikov, Rectangular };

struct KernelSpec {
  KernelKind kind = KernelKind::Gaussian;
  double band = 0.1;
};

/// Weights below this are treated as exactly zero.
inline constexpr double kWeightFloor = 1e-12;

double kernel_eval(KernelKind kind, double z);

std::string_view kernel_name(KernelKind kind);
/// "gaussian", "epanechnikov" or "rectangular", case insensitive.
std::optional<KernelKind> parse_kernel(std::string_view text);

/// w_i = K((x_i - x0) / band), unnormalized, with values below kWeightFloor
/// set to zero. Throws DegenerateWindowError when every weight is zero.
std::vector<double> local_weights(const std::vector<double>& x, double x0,
                                  const KernelSpec& spec);

}  // namespace localcop
