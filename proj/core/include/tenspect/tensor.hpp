#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tenspect/polar.hpp"

namespace tenspect {

/// Ordered list of positive extents (d_1, ..., d_n), n >= 1.
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<int> dims) : Shape(std::vector<int>(dims)) {}
  explicit Shape(std::vector<int> dims);

  int order() const { return static_cast<int>(dims_.size()); }

  /// Dimension operator: d_k for 1 <= k <= n, 0 otherwise.
  int dim(int k) const {
    return (k >= 1 && k <= order()) ? dims_[k - 1] : 0;
  }

  std::size_t size() const;  // product of extents
  const std::vector<int>& dims() const { return dims_; }
  bool cubic() const;

  bool operator==(const Shape& other) const { return dims_ == other.dims_; }

  std::string str() const;  // e.g. "2x3x4"

 private:
  std::vector<int> dims_;
};

/// Dense complex tensor of arbitrary order. Row-major storage (last index
/// varies fastest); public indices are 1-based. Values are immutable from the
/// point of view of every algebra operation; all operations return copies.
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(Shape shape);
  DenseTensor(Shape shape, std::vector<Complex> entries);

  const Shape& shape() const { return shape_; }
  int order() const { return shape_.order(); }
  int dim(int k) const { return shape_.dim(k); }
  std::size_t size() const { return data_.size(); }

  /// 1-based multi-index access.
  const Complex& at(std::span<const int> idx) const {
    return data_[offset(idx)];
  }
  Complex& at(std::span<const int> idx) { return data_[offset(idx)]; }
  const Complex& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  Complex& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  std::span<const Complex> flat() const { return data_; }
  std::span<Complex> flat() { return data_; }

  bool same_shape(const DenseTensor& other) const {
    return shape_ == other.shape_;
  }

  DenseTensor& operator+=(const DenseTensor& other);
  DenseTensor& operator-=(const DenseTensor& other);
  DenseTensor& operator*=(Complex scale);
  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) {
    return a += b;
  }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) {
    return a -= b;
  }
  friend DenseTensor operator*(Complex s, DenseTensor a) { return a *= s; }

  bool is_real() const;

 private:
  std::size_t offset(std::span<const int> idx) const;

  Shape shape_;
  std::vector<Complex> data_;
};

/// Steps a 1-based multi-index through the whole domain in row-major order.
/// Returns false once the index has wrapped past the end.
bool advance_index(std::vector<int>& idx, const Shape& shape);

/// d(A, k): extent of the k-th mode, 0 when k is out of range.
inline int dim(const DenseTensor& a, int k) { return a.dim(k); }

/// k-fold cyclic transpose. One application puts the entry of A at
/// (i_n, i_1, ..., i_{n-1}) into position (i_1, ..., i_n); equivalently an
/// entry at (j_1, ..., j_n) moves to (j_2, ..., j_n, j_1). The tower is a
/// cyclic group action: n applications give back A exactly. k may be any
/// integer and is reduced modulo the order.
DenseTensor transpose_k(const DenseTensor& a, long k = 1);

/// k-fold adjoint: positions move exactly as in transpose_k and every entry
/// is replaced by its order-n conjugate of exponent k, computed from the
/// original entry's polar form (direct formula, not iterated application).
DenseTensor adjoint_k(const DenseTensor& a, long k = 1);

enum class Conformance { Symmetric, Hermitian };

struct ConformanceReport {
  bool ok = false;
  double max_deviation = 0.0;
};

/// Structural predicate on cubic tensors. Symmetric compares A against all
/// its cyclic transposes; hermitian compares A against its adjoint.
ConformanceReport conformance(const DenseTensor& a, Conformance kind,
                              double tol = 1e-12);

double max_abs(const DenseTensor& a);
double max_abs_diff(const DenseTensor& a, const DenseTensor& b);

/// Embeds a matrix as an oriented order-3 slice with a singleton extent at
/// the given slot (1, 2 or 3): an a*b matrix becomes 1*a*b, a*1*b or a*b*1.
DenseTensor embed_slice(const DenseTensor& m, int singleton_slot);

DenseTensor ones(const Shape& shape);
DenseTensor zeros(const Shape& shape);

}  // namespace tenspect
