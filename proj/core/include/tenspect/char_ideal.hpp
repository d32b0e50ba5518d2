#pragma once

#include <vector>

#include "tenspect/poly.hpp"

namespace tenspect {

/// Exact rational square matrix, 1-based access.
class RationalMatrix {
 public:
  explicit RationalMatrix(int side) : side_(side), a_(side * side) {}

  int side() const { return side_; }
  const mpq_class& at(int i, int j) const {
    return a_[(i - 1) * side_ + (j - 1)];
  }
  mpq_class& at(int i, int j) { return a_[(i - 1) * side_ + (j - 1)]; }
  bool symmetric() const;

 private:
  int side_;
  std::vector<mpq_class> a_;
};

/// Exact rational cubic 3-tensor, 1-based access.
class RationalTensor3 {
 public:
  explicit RationalTensor3(int side) : side_(side), a_(side * side * side) {}

  int side() const { return side_; }
  const mpq_class& at(int m, int n, int p) const {
    return a_[((m - 1) * side_ + (n - 1)) * side_ + (p - 1)];
  }
  mpq_class& at(int m, int n, int p) {
    return a_[((m - 1) * side_ + (n - 1)) * side_ + (p - 1)];
  }

 private:
  int side_;
  std::vector<mpq_class> a_;
};

struct CharIdeal {
  VarRegistryPtr registry;
  std::vector<MultiPoly> generators;
};

/// Spectral ideal of a symmetric rational matrix over the variables
/// Q > R > lambda_1 > ... > lambda_l:
///
///   sum_k l_k q_{k,m} r_{k,n} - a_{m,n},   sum_k q_{k,m} r_{k,n} - d_{m,n}
///
/// for 1 <= m <= n <= l. Variable names: q<k>_<m>, r<k>_<m>, l<k>.
CharIdeal matrix_char_ideal(const RationalMatrix& a);

/// Spectral ideal of a cubic rational 3-tensor in the real-variable regime,
/// variables ranked Q > R > S > D > E > F; sides above 2 are rejected.
/// Names: q<m>_<k>_<p> etc. for the factor blocks, d<i>_<j> / e<i>_<j> /
/// f<i>_<j> for the scaling matrices.
CharIdeal tensor3_char_ideal(const RationalTensor3& a);

/// The lambda variables / scaling variables kept by the characteristic set.
std::vector<std::string> matrix_eliminated_keep(int side);  // {"l<side>"}
std::vector<std::string> tensor3_scaling_keep(int side);    // all d, e, f

}  // namespace tenspect
