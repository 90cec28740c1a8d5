#pragma once

#include <cstddef>
#include <vector>

namespace localcop {

/// Aligned pseudo-observations (u1_i, u2_i) and covariate values x_i.
struct Dataset {
  std::vector<double> u1;
  std::vector<double> u2;
  std::vector<double> x;

  std::size_t size() const { return x.size(); }
};

/// Checks equal, nonzero lengths and finite values, and clamps u1, u2 into
/// [kUnitClamp, 1 - kUnitClamp]. Throws LengthError or DomainError.
Dataset make_dataset(std::vector<double> u1, std::vector<double> u2,
                     std::vector<double> x);

}  // namespace localcop
