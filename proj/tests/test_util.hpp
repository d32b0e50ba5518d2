#pragma once

#include "tenspect/rng.hpp"
#include "tenspect/tensor.hpp"

namespace tenspect::testutil {

inline DenseTensor random_real(const Shape& shape, Rng& rng, double lo = -1.0,
                               double hi = 1.0) {
  DenseTensor t{shape};
  for (auto& v : t.flat()) v = rng.uniform(lo, hi);
  return t;
}

inline DenseTensor random_complex(const Shape& shape, Rng& rng) {
  DenseTensor t{shape};
  for (auto& v : t.flat()) {
    v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  }
  return t;
}

inline DenseTensor random_integer(const Shape& shape, Rng& rng, int lo = -4,
                                  int hi = 4) {
  DenseTensor t{shape};
  for (auto& v : t.flat()) {
    v = static_cast<double>(lo + static_cast<int>(rng.below(hi - lo + 1)));
  }
  return t;
}

inline DenseTensor basis_tensor(const Shape& shape, std::vector<int> idx) {
  DenseTensor t{shape};
  t.at(idx) = 1.0;
  return t;
}

}  // namespace tenspect::testutil
