#include "localcop/dataset.hpp"

#include <cmath>

#include "localcop/copula.hpp"
#include "localcop/errors.hpp"

namespace localcop {

Dataset make_dataset(std::vector<double> u1, std::vector<double> u2,
                     std::vector<double> x) {
  if (u1.size() != u2.size() || u1.size() != x.size()) {
    throw LengthError("dataset columns u1, u2 and x must have equal length");
  }
  if (x.empty()) throw LengthError("dataset must contain at least one observation");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw DomainError("covariate values must be finite");
    if (!(u1[i] >= 0.0 && u1[i] <= 1.0) || !(u2[i] >= 0.0 && u2[i] <= 1.0)) {
      throw DomainError("pseudo-observations must lie in [0, 1]");
    }
    u1[i] = clamp_unit(u1[i]);
    u2[i] = clamp_unit(u2[i]);
  }
  return Dataset{std::move(u1), std::move(u2), std::move(x)};
}

}  // namespace localcop
