#include "tenspect/tucker.hpp"

#include <cmath>

#include "tenspect/errors.hpp"
#include "tenspect/products.hpp"
#include "tenspect/rng.hpp"

namespace tenspect {

namespace {

void check_orthonormal(const DenseTensor& m, const char* name) {
  if (m.order() != 2 || m.dim(1) != m.dim(2)) {
    throw ShapeError(std::string("tucker triple: ") + name +
                     " must be a square matrix");
  }
  if (!m.is_real()) {
    throw ShapeError(std::string("tucker triple: ") + name +
                     " must be real");
  }
  const int l = m.dim(1);
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      Complex dot = 0.0;
      for (int k = 1; k <= l; ++k) dot += m.at({k, i}) * m.at({k, j});
      const double target = i == j ? 1.0 : 0.0;
      if (std::abs(dot - target) > 1e-10) {
        throw ShapeError(std::string("tucker triple: ") + name +
                         " columns are not orthonormal");
      }
    }
  }
}

DenseTensor transpose2(const DenseTensor& m) {
  DenseTensor out{Shape{m.dim(2), m.dim(1)}};
  for (int i = 1; i <= m.dim(1); ++i) {
    for (int j = 1; j <= m.dim(2); ++j) out.at({j, i}) = m.at({i, j});
  }
  return out;
}

}  // namespace

TuckerTriple::TuckerTriple(DenseTensor q, DenseTensor s, DenseTensor u)
    : q_(std::move(q)), s_(std::move(s)), u_(std::move(u)) {
  check_orthonormal(q_, "Q");
  check_orthonormal(s_, "S");
  check_orthonormal(u_, "U");
}

DenseTensor tucker_core(const DenseTensor& d, const TuckerTriple& t) {
  if (d.order() != 3) throw ShapeError("tucker core: D must be a 3-tensor");
  if (t.q().dim(1) != d.dim(1) || t.s().dim(1) != d.dim(2) ||
      t.u().dim(1) != d.dim(3)) {
    throw ShapeError("tucker core: matrix sides must match D " +
                     d.shape().str());
  }
  return bg_matrix_product(transpose2(t.q()), transpose2(t.s()), t.u(), d);
}

DenseTensor tucker_reconstruct(const DenseTensor& core,
                               const TuckerTriple& t) {
  if (core.order() != 3) {
    throw ShapeError("tucker reconstruct: core must be a 3-tensor");
  }
  if (t.q().dim(1) != core.dim(1) || t.s().dim(1) != core.dim(2) ||
      t.u().dim(1) != core.dim(3)) {
    throw ShapeError("tucker reconstruct: matrix sides must match core " +
                     core.shape().str());
  }
  return bg_matrix_product(t.q(), t.s(), transpose2(t.u()), core);
}

double total_orthogonality_residual(const DenseTensor& t) {
  if (t.order() != 3 || !t.shape().cubic()) {
    throw ShapeError("total orthogonality: tensor must be cubic order 3");
  }
  const int l = t.dim(1);
  double res = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    auto slice_entry = [&](int alpha, int i, int j) -> Complex {
      switch (axis) {
        case 1: return t.at({i, j, alpha});  // depth slices
        case 2: return t.at({i, alpha, j});  // column slices
        default: return t.at({alpha, i, j});  // row slices
      }
    };
    for (int alpha = 1; alpha <= l; ++alpha) {
      for (int beta = 1; beta <= l; ++beta) {
        Complex prod = 0.0, norm2 = 0.0;
        for (int i = 1; i <= l; ++i) {
          for (int j = 1; j <= l; ++j) {
            prod += slice_entry(alpha, i, j) * slice_entry(beta, i, j);
            norm2 += slice_entry(alpha, i, j) * slice_entry(alpha, i, j);
          }
        }
        const Complex target = alpha == beta ? norm2 : Complex(0.0);
        res = std::max(res, std::abs(prod - target));
      }
    }
  }
  return res;
}

double rank1_objective(std::span<const std::array<DenseTensor, 3>> slices,
                       std::span<const double> lambdas, const DenseTensor& a) {
  if (a.order() != 3) throw ShapeError("rank1: A must be a 3-tensor");
  if (slices.size() != lambdas.size()) {
    throw ShapeError("rank1: one lambda per slice triple required");
  }
  if (slices.empty()) return lp_norm(a, 3);

  const int m = a.dim(1), n = a.dim(2), p = a.dim(3);
  const int r = static_cast<int>(slices.size());
  DenseTensor ms{Shape{m, r, p}}, ns{Shape{m, n, r}}, ps{Shape{r, n, p}};
  for (int k = 1; k <= r; ++k) {
    const auto& [mk, nk, pk] = slices[k - 1];
    if (mk.dim(1) != m || mk.dim(2) != p || nk.dim(1) != m ||
        nk.dim(2) != n || pk.dim(1) != n || pk.dim(2) != p) {
      throw ShapeError("rank1: slice triple " + std::to_string(k) +
                       " does not match A " + a.shape().str());
    }
    const double lam = lambdas[k - 1];
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= p; ++j) ms.at({i, k, j}) = lam * mk.at({i, j});
    }
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) ns.at({i, j, k}) = lam * nk.at({i, j});
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= p; ++j) ps.at({k, i, j}) = lam * pk.at({i, j});
    }
  }
  return lp_norm(ternary_product(ms, ns, ps) - a, 3);
}

double rank1_objective_vectors(
    std::span<const std::array<DenseTensor, 3>> vectors,
    std::span<const double> lambdas, const DenseTensor& a) {
  if (a.order() != 3) throw ShapeError("rank1: A must be a 3-tensor");
  if (vectors.size() != lambdas.size()) {
    throw ShapeError("rank1: one lambda per vector triple required");
  }
  DenseTensor sum{a.shape()};
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const auto& [u, v, w] = vectors[k];
    if (u.order() != 1 || v.order() != 1 || w.order() != 1 ||
        u.dim(1) != a.dim(1) || v.dim(1) != a.dim(2) || w.dim(1) != a.dim(3)) {
      throw ShapeError("rank1: vector triple " + std::to_string(k + 1) +
                       " does not match A " + a.shape().str());
    }
    const double l3 = lambdas[k] * lambdas[k] * lambdas[k];
    for (int i = 1; i <= a.dim(1); ++i) {
      for (int j = 1; j <= a.dim(2); ++j) {
        for (int t = 1; t <= a.dim(3); ++t) {
          sum.at({i, j, t}) += l3 * u.at({i}) * v.at({j}) * w.at({t});
        }
      }
    }
  }
  return lp_norm(sum - a, 3);
}

std::array<DenseTensor, 3> replicate_vectors_to_slices(const DenseTensor& u,
                                                       const DenseTensor& v,
                                                       const DenseTensor& w) {
  if (u.order() != 1 || v.order() != 1 || w.order() != 1) {
    throw ShapeError("replicate: u, v, w must be vectors");
  }
  const int m = u.dim(1), n = v.dim(1), p = w.dim(1);
  DenseTensor mk{Shape{m, p}}, nk{Shape{m, n}}, pk{Shape{n, p}};
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= p; ++j) mk.at({i, j}) = u.at({i});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) nk.at({i, j}) = v.at({j});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= p; ++j) pk.at({i, j}) = w.at({j});
  }
  return {mk, nk, pk};
}

DenseTensor random_orthonormal(int side, std::uint64_t seed) {
  if (side < 1) throw ShapeError("orthonormal: side must be >= 1");
  Rng rng(seed);
  DenseTensor q{Shape{side, side}};
  for (int i = 1; i <= side; ++i) q.at({i, i}) = 1.0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 1; i <= side; ++i) {
      for (int j = i + 1; j <= side; ++j) {
        const double theta = rng.uniform(0.0, 2.0 * M_PI);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int k = 1; k <= side; ++k) {
          const Complex qi = q.at({k, i}), qj = q.at({k, j});
          q.at({k, i}) = c * qi - s * qj;
          q.at({k, j}) = s * qi + c * qj;
        }
      }
    }
  }
  return q;
}

}  // namespace tenspect
