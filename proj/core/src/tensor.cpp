#include "tenspect/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "tenspect/errors.hpp"

namespace tenspect {

Shape::Shape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ShapeError("shape: order must be >= 1");
  for (int d : dims_) {
    if (d < 1) throw ShapeError("shape: every extent must be >= 1");
  }
}

std::size_t Shape::size() const {
  std::size_t n = 1;
  for (int d : dims_) n *= static_cast<std::size_t>(d);
  return n;
}

bool Shape::cubic() const {
  return std::all_of(dims_.begin(), dims_.end(),
                     [&](int d) { return d == dims_[0]; });
}

std::string Shape::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << 'x';
    os << dims_[i];
  }
  return os.str();
}

DenseTensor::DenseTensor(Shape shape)
    : shape_(std::move(shape)), data_(shape_.size()) {}

DenseTensor::DenseTensor(Shape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), data_(std::move(entries)) {
  if (data_.size() != shape_.size()) {
    throw ShapeError("tensor: entry count does not match shape " +
                     shape_.str());
  }
}

std::size_t DenseTensor::offset(std::span<const int> idx) const {
  assert(static_cast<int>(idx.size()) == order());
  std::size_t off = 0;
  for (int k = 0; k < order(); ++k) {
    assert(idx[k] >= 1 && idx[k] <= shape_.dims()[k]);
    off = off * static_cast<std::size_t>(shape_.dims()[k]) +
          static_cast<std::size_t>(idx[k] - 1);
  }
  return off;
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& other) {
  if (!same_shape(other)) throw ShapeError("tensor +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& other) {
  if (!same_shape(other)) throw ShapeError("tensor -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

bool DenseTensor::is_real() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Complex v) { return v.imag() == 0.0; });
}

bool advance_index(std::vector<int>& idx, const Shape& shape) {
  for (int k = shape.order() - 1; k >= 0; --k) {
    if (idx[k] < shape.dims()[k]) {
      ++idx[k];
      return true;
    }
    idx[k] = 1;
  }
  return false;
}

namespace {

// Rotates a 1-based index k steps: source position for the entry at idx.
// One transpose application reads from (i_n, i_1, ..., i_{n-1}).
std::vector<int> rotate_right(const std::vector<int>& idx, long k) {
  const int n = static_cast<int>(idx.size());
  std::vector<int> out(n);
  for (int t = 0; t < n; ++t) {
    out[t] = idx[((t - k) % n + n) % n];
  }
  return out;
}

long reduce_mod(long k, int n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

DenseTensor transpose_k(const DenseTensor& a, long k) {
  if (a.order() < 2) throw ShapeError("transpose: order must be >= 2");
  const long km = reduce_mod(k, a.order());
  if (km == 0) return a;
  std::vector<int> out_dims(a.order());
  for (int t = 0; t < a.order(); ++t) {
    // result position t is read from source slot (t + km) mod n
    out_dims[t] =
        a.shape().dims()[reduce_mod(static_cast<long>(t) + km, a.order())];
  }
  DenseTensor out{Shape(out_dims)};
  std::vector<int> idx(a.order(), 1);
  do {
    out.at(idx) = a.at(rotate_right(idx, km));
  } while (advance_index(idx, out.shape()));
  return out;
}

DenseTensor adjoint_k(const DenseTensor& a, long k) {
  if (a.order() < 2) throw ShapeError("adjoint: order must be >= 2");
  const int n = a.order();
  const long km = reduce_mod(k, n);
  DenseTensor out = transpose_k(a, km);
  if (km == 0) return out;
  for (auto& v : out.flat()) v = order_conjugate(v, n, km);
  return out;
}

ConformanceReport conformance(const DenseTensor& a, Conformance kind,
                              double tol) {
  if (!a.shape().cubic()) {
    throw ShapeError("conformance: tensor must be cubic, got " +
                     a.shape().str());
  }
  double dev = 0.0;
  if (kind == Conformance::Symmetric) {
    for (int k = 1; k < a.order(); ++k) {
      dev = std::max(dev, max_abs_diff(a, transpose_k(a, k)));
    }
  } else {
    dev = max_abs_diff(a, adjoint_k(a, 1));
  }
  return {dev <= tol, dev};
}

double max_abs(const DenseTensor& a) {
  double m = 0.0;
  for (const auto& v : a.flat()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  if (!a.same_shape(b)) throw ShapeError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.flat()[i] - b.flat()[i]));
  }
  return m;
}

DenseTensor embed_slice(const DenseTensor& m, int singleton_slot) {
  if (m.order() != 2) throw ShapeError("embed: input must be a matrix");
  if (singleton_slot < 1 || singleton_slot > 3) {
    throw ShapeError("embed: slot must be 1, 2 or 3");
  }
  std::vector<int> dims;
  switch (singleton_slot) {
    case 1: dims = {1, m.dim(1), m.dim(2)}; break;
    case 2: dims = {m.dim(1), 1, m.dim(2)}; break;
    default: dims = {m.dim(1), m.dim(2), 1}; break;
  }
  return DenseTensor{Shape(dims), {m.flat().begin(), m.flat().end()}};
}

DenseTensor ones(const Shape& shape) {
  DenseTensor t{shape};
  for (auto& v : t.flat()) v = 1.0;
  return t;
}

DenseTensor zeros(const Shape& shape) { return DenseTensor{shape}; }

}  // namespace tenspect
