#include "tenspect/special.hpp"

#include <algorithm>

#include "tenspect/errors.hpp"
#include "tenspect/products.hpp"

namespace tenspect {

DenseTensor kronecker(int order, int side) {
  if (order < 2) throw ShapeError("kronecker: order must be >= 2");
  if (side < 1) throw ShapeError("kronecker: side must be >= 1");
  DenseTensor t{Shape(std::vector<int>(order, side))};
  std::vector<int> idx(order, 1);
  do {
    if (std::all_of(idx.begin(), idx.end(),
                    [&](int i) { return i == idx[0]; })) {
      t.at(idx) = 1.0;
    }
  } while (advance_index(idx, t.shape()));
  return t;
}

IdentityFamily identity_family(int side) {
  if (side < 1) throw ShapeError("identity: side must be >= 1");
  DenseTensor i{Shape{side, side, side}};
  for (int m = 1; m <= side; ++m) {
    for (int n = 1; n <= side; ++n) i.at({m, n, n}) = 1.0;
  }
  return {i, transpose_k(i, 1), transpose_k(i, 2)};
}

void validate_permutation(const Permutation& sigma) {
  const int l = static_cast<int>(sigma.size());
  if (l == 0) throw ShapeError("permutation: empty");
  std::vector<bool> seen(l, false);
  for (int v : sigma) {
    if (v < 1 || v > l || seen[v - 1]) {
      throw ShapeError("permutation: not a bijection of {1..l}");
    }
    seen[v - 1] = true;
  }
}

Permutation compose(const Permutation& tau, const Permutation& sigma) {
  validate_permutation(tau);
  validate_permutation(sigma);
  if (tau.size() != sigma.size()) {
    throw ShapeError("permutation compose: sizes differ");
  }
  Permutation out(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    out[k] = tau[sigma[k] - 1];
  }
  return out;
}

Permutation inverse(const Permutation& sigma) {
  validate_permutation(sigma);
  Permutation out(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    out[sigma[k] - 1] = static_cast<int>(k) + 1;
  }
  return out;
}

std::vector<std::pair<int, int>> transposition_factors(const Permutation& s) {
  validate_permutation(s);
  const int l = static_cast<int>(s.size());
  std::vector<std::pair<int, int>> factors;
  std::vector<bool> visited(l, false);
  for (int start = 1; start <= l; ++start) {
    if (visited[start - 1]) continue;
    std::vector<int> cycle;
    int cur = start;
    while (!visited[cur - 1]) {
      visited[cur - 1] = true;
      cycle.push_back(cur);
      cur = s[cur - 1];
    }
    // (c1 c2 ... ck) = (c1 ck) o ... o (c1 c2), applied (c1 c2) first
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      factors.emplace_back(cycle[0], cycle[i]);
    }
  }
  return factors;
}

DenseTensor permutation_tensor(const Permutation& sigma) {
  validate_permutation(sigma);
  const int l = static_cast<int>(sigma.size());
  DenseTensor p{Shape{l, l, l}};
  for (int m = 1; m <= l; ++m) {
    for (int n = 1; n <= l; ++n) p.at({m, n, sigma[n - 1]}) = 1.0;
  }
  return p;
}

DenseTensor slice_permute(const DenseTensor& a, const Permutation& sigma,
                          SliceAxis axis) {
  validate_permutation(sigma);
  if (a.order() != 3 || !a.shape().cubic()) {
    throw ShapeError("slice permute: tensor must be cubic order 3");
  }
  if (static_cast<int>(sigma.size()) != a.dim(1)) {
    throw ShapeError("slice permute: permutation size does not match side");
  }
  DenseTensor out = a;
  for (const auto& [x, y] : transposition_factors(sigma)) {
    Permutation tau(sigma.size());
    for (std::size_t k = 0; k < tau.size(); ++k) {
      tau[k] = static_cast<int>(k) + 1;
    }
    std::swap(tau[x - 1], tau[y - 1]);
    const DenseTensor p = permutation_tensor(tau);
    switch (axis) {
      case SliceAxis::Depth:
        out = ternary_product(p, out, transpose_k(p, 2));
        break;
      case SliceAxis::Row:
        out = ternary_product(transpose_k(p, 1), transpose_k(p, 2), out);
        break;
      case SliceAxis::Column:
        out = ternary_product(out, p, transpose_k(p, 1));
        break;
    }
  }
  return out;
}

ScalingFamily::ScalingFamily(const DenseTensor& w, int order)
    : order_(order), side_(w.dim(1)), w_(w) {
  if (order_ < 3) throw ShapeError("scaling family: order must be >= 3");
  if (w.order() != 2 || w.dim(1) != w.dim(2)) {
    throw ShapeError("scaling family: W must be a square matrix");
  }
  for (int m = 1; m <= side_; ++m) {
    for (int n = 1; n <= side_; ++n) {
      if (w.at({m, n}) != w.at({n, m})) {
        throw ShapeError("scaling family: W must be symmetric");
      }
    }
  }

  // Member t couples slot 2 to slot 2+t (slot 1 to 2 for the last member),
  // which pins the summation index of the n-ary product, and weights by
  // w read against a slot the delta leaves free. Under the product
  // o(Q, S^(1), ..., S^(n-1)) the members jointly contribute
  // prod_{k != 2} w(i_2, i_k); with W all-ones they are the identity family.
  const int n = order_;
  const int l = side_;
  for (int t = 1; t <= n - 1; ++t) {
    DenseTensor s{Shape(std::vector<int>(n, l))};
    std::vector<int> idx(n, 1);
    do {
      if (t == n - 1) {
        // S^(n-1): delta(j1, j2) * w(j1, j_n)
        if (idx[0] == idx[1]) {
          s.at(idx) = w_.at({idx[0], idx[n - 1]});
        }
      } else if (t == 1) {
        // S^(1): delta(j2, j3) * w(j2, j1)
        if (idx[1] == idx[2]) {
          s.at(idx) = w_.at({idx[1], idx[0]});
        }
      } else {
        // S^(t): delta(j2, j_{2+t}) * w(j2, j_{1+t})
        if (idx[1] == idx[1 + t]) {
          s.at(idx) = w_.at({idx[1], idx[t]});
        }
      }
    } while (advance_index(idx, s.shape()));
    members_.push_back(std::move(s));
  }
}

std::vector<DenseTensor> ScalingFamily::diagonal_triple() const {
  if (order_ != 3) {
    throw ShapeError("scaling family: diagonal triple is order-3 only");
  }
  const int l = side_;
  DenseTensor a{Shape{l, l, l}}, b{Shape{l, l, l}}, c{Shape{l, l, l}};
  for (int m = 1; m <= l; ++m) {
    for (int n = 1; n <= l; ++n) {
      for (int p = 1; p <= l; ++p) {
        if (m == p) a.at({m, n, p}) = w_.at({p, n});
        if (n == p) b.at({m, n, p}) = w_.at({m, p});
        if (m == n) c.at({m, n, p}) = w_.at({p, m});
      }
    }
  }
  return {a, b, c};
}

double diagonal_residual(const DenseTensor& d) {
  if (d.order() != 3 || !d.shape().cubic()) {
    throw ShapeError("diagonal residual: tensor must be cubic order 3");
  }
  DenseTensor cube = d;
  for (auto& v : cube.flat()) v = v * v * v;
  const DenseTensor lhs =
      ternary_product(transpose_k(d, 1), transpose_k(d, 2), d);
  return max_abs_diff(lhs, cube);
}

OrthogonalityResiduals orthogonality_residuals(const DenseTensor& q) {
  if (q.order() != 3 || !q.shape().cubic()) {
    throw ShapeError("orthogonality: tensor must be cubic order 3");
  }
  const DenseTensor delta = kronecker(3, q.dim(1));
  const DenseTensor qd = adjoint_k(q, 1);
  const DenseTensor qd2 = adjoint_k(q, 2);

  OrthogonalityResiduals res;
  res.first = max_abs_diff(ternary_product(q, qd2, qd), delta);
  const DenseTensor inner = ternary_product(qd, qd2, delta);
  const DenseTensor mid = ternary_product(q, inner, qd2);
  res.kronecker_invariance =
      max_abs_diff(ternary_product(mid, q, qd), delta);
  return res;
}

double inverse_pair_residual(const DenseTensor& b1, const DenseTensor& b2,
                             const DenseTensor& a1, const DenseTensor& a2,
                             const DenseTensor& m) {
  return max_abs_diff(ternary_product(b1, ternary_product(a1, m, a2), b2), m);
}

}  // namespace tenspect
