#include "tenspect/products.hpp"

#include <cmath>
#include <sstream>

#include "tenspect/errors.hpp"

namespace tenspect {

namespace {

std::vector<int> rotated_index(const std::vector<int>& idx, int steps) {
  const int n = static_cast<int>(idx.size());
  std::vector<int> out(n);
  for (int s = 0; s < n; ++s) out[s] = idx[((s - steps) % n + n) % n];
  return out;
}

}  // namespace

ProductPlan plan_nary_product(std::span<const Shape> operands) {
  const int n = static_cast<int>(operands.size());
  if (n < 2) throw ShapeError("product: needs at least 2 operands");
  for (int t = 0; t < n; ++t) {
    if (operands[t].order() != n) {
      std::ostringstream os;
      os << "product: operand " << (t + 1) << " must have order " << n
         << ", got order " << operands[t].order();
      throw ShapeError(os.str());
    }
  }

  // d(A^(1),2) = d(A^(2),3) = ... = d(A^(n),1) is the summation length.
  const int l = operands[0].dim(ProductPlan::summation_slot(1, n));
  for (int t = 2; t <= n; ++t) {
    const int slot = ProductPlan::summation_slot(t, n);
    if (operands[t - 1].dim(slot) != l) {
      std::ostringstream os;
      os << "product: chain constraint d(A(1),2) = d(A(" << t << ")," << slot
         << ") violated: " << l << " != " << operands[t - 1].dim(slot);
      throw ShapeError(os.str());
    }
  }

  // Output extent k comes from operand k's own slot k; every operand must
  // match the output shape outside its summation slot.
  std::vector<int> out_dims(n);
  for (int k = 1; k <= n; ++k) out_dims[k - 1] = operands[k - 1].dim(k);
  for (int t = 1; t <= n; ++t) {
    const int kslot = ProductPlan::summation_slot(t, n);
    for (int k = 1; k <= n; ++k) {
      if (k == kslot) continue;
      if (operands[t - 1].dim(k) != out_dims[k - 1]) {
        std::ostringstream os;
        os << "product: cross constraint d(A(" << t << ")," << k
           << ") = " << out_dims[k - 1] << " violated, got "
           << operands[t - 1].dim(k);
        throw ShapeError(os.str());
      }
    }
  }

  ProductPlan plan;
  plan.operand_shapes.assign(operands.begin(), operands.end());
  plan.output_shape = Shape(out_dims);
  plan.summation_length = l;
  return plan;
}

DenseTensor ternary_product(const DenseTensor& a, const DenseTensor& b,
                            const DenseTensor& c) {
  const Shape shapes[] = {a.shape(), b.shape(), c.shape()};
  const ProductPlan plan = plan_nary_product(shapes);
  const int m = plan.output_shape.dim(1);
  const int n = plan.output_shape.dim(2);
  const int p = plan.output_shape.dim(3);
  const int l = plan.summation_length;

  DenseTensor d{plan.output_shape};
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= p; ++k) {
        Complex sum = 0.0;
        for (int t = 1; t <= l; ++t) {
          sum += a.at({i, t, k}) * b.at({i, j, t}) * c.at({t, j, k});
        }
        d.at({i, j, k}) = sum;
      }
    }
  }
  return d;
}

DenseTensor nary_product(std::span<const DenseTensor> operands) {
  std::vector<Shape> shapes;
  shapes.reserve(operands.size());
  for (const auto& op : operands) shapes.push_back(op.shape());
  const ProductPlan plan = plan_nary_product(shapes);
  const int n = static_cast<int>(operands.size());
  const int l = plan.summation_length;

  DenseTensor out{plan.output_shape};
  std::vector<int> idx(n, 1);
  std::vector<int> op_idx(n);
  do {
    Complex sum = 0.0;
    for (int k = 1; k <= l; ++k) {
      Complex term = 1.0;
      for (int t = 1; t <= n; ++t) {
        op_idx.assign(idx.begin(), idx.end());
        op_idx[ProductPlan::summation_slot(t, n) - 1] = k;
        term *= operands[t - 1].at(op_idx);
      }
      sum += term;
    }
    out.at(idx) = sum;
  } while (advance_index(idx, out.shape()));
  return out;
}

DenseTensor tensor_action(const DenseTensor& actor,
                          std::span<const DenseTensor> operands) {
  const int n = actor.order();
  if (static_cast<int>(operands.size()) != n - 1) {
    std::ostringstream os;
    os << "action: order-" << n << " tensor acts on " << (n - 1)
       << " operands, got " << operands.size();
    throw ShapeError(os.str());
  }
  for (const auto& op : operands) {
    if (op.order() != n || op.dim(1) != 1) {
      throw ShapeError(
          "action: operands must carry a leading singleton index, got " +
          op.shape().str());
    }
  }
  std::vector<DenseTensor> all(operands.begin(), operands.end());
  all.push_back(actor);
  return nary_product(all);
}

DenseTensor outer_product(std::span<const DenseTensor> slices) {
  std::vector<Shape> shapes;
  shapes.reserve(slices.size());
  for (const auto& s : slices) shapes.push_back(s.shape());
  const ProductPlan plan = plan_nary_product(shapes);
  if (plan.summation_length != 1) {
    std::ostringstream os;
    os << "outer product: every operand needs extent 1 in its summation "
          "slot, got chain length "
       << plan.summation_length;
    throw ShapeError(os.str());
  }
  return nary_product(slices);
}

Complex bg_triple_dot(const DenseTensor& u, const DenseTensor& v,
                      const DenseTensor& w, const DenseTensor& t) {
  if (u.order() != 1 || v.order() != 1 || w.order() != 1) {
    throw ShapeError("triplet dot: u, v, w must be vectors");
  }
  const int l = u.dim(1);
  if (v.dim(1) != l || w.dim(1) != l) {
    throw ShapeError("triplet dot: vector lengths differ");
  }
  if (t.order() != 3 || t.dim(1) != l || t.dim(2) != l || t.dim(3) != l) {
    throw ShapeError("triplet dot: background tensor must be " +
                     std::to_string(l) + "^3, got " + t.shape().str());
  }
  Complex sum = 0.0;
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      const Complex uv = u.at({i}) * order_conjugate(v.at({j}), 3, 1);
      for (int k = 1; k <= l; ++k) {
        sum += uv * order_conjugate(w.at({k}), 3, 2) * t.at({i, j, k});
      }
    }
  }
  return sum;
}

DenseTensor bg_matrix_product(const DenseTensor& a, const DenseTensor& b,
                              const DenseTensor& c, const DenseTensor& t) {
  if (a.order() != 2 || b.order() != 2 || c.order() != 2) {
    throw ShapeError("background product: A, B, C must be matrices");
  }
  if (t.order() != 3) {
    throw ShapeError("background product: T must be a 3-tensor");
  }
  const int m = a.dim(1), n = b.dim(1), p = c.dim(2);
  if (a.dim(2) != t.dim(1) || b.dim(2) != t.dim(2) || c.dim(1) != t.dim(3)) {
    throw ShapeError(
        "background product: inner dimensions must match T " +
        t.shape().str() + ", got A " + a.shape().str() + ", B " +
        b.shape().str() + ", C " + c.shape().str());
  }
  DenseTensor d{Shape{m, n, p}};
  for (int mi = 1; mi <= m; ++mi) {
    for (int ni = 1; ni <= n; ++ni) {
      for (int pi = 1; pi <= p; ++pi) {
        Complex sum = 0.0;
        for (int i = 1; i <= t.dim(1); ++i) {
          for (int j = 1; j <= t.dim(2); ++j) {
            const Complex ab = a.at({mi, i}) * b.at({ni, j});
            for (int k = 1; k <= t.dim(3); ++k) {
              sum += ab * c.at({k, pi}) * t.at({i, j, k});
            }
          }
        }
        d.at({mi, ni, pi}) = sum;
      }
    }
  }
  return d;
}

Complex inner_p(std::span<const DenseTensor> operands) {
  const int p = static_cast<int>(operands.size());
  if (p < 2) throw ShapeError("inner product: needs p >= 2 operands");
  for (const auto& op : operands) {
    if (!op.same_shape(operands[0])) {
      throw ShapeError("inner product: operand shapes differ");
    }
  }
  Complex sum = 0.0;
  std::vector<int> idx(operands[0].order(), 1);
  do {
    Complex term = 1.0;
    for (int t = 0; t < p; ++t) {
      term *= order_conjugate(operands[t].at(rotated_index(idx, t)), p,
                              (p - t) % p);
    }
    sum += term;
  } while (advance_index(idx, operands[0].shape()));
  return sum;
}

double lp_norm(const DenseTensor& x, int p) {
  if (p < 2) throw ShapeError("lp norm: needs p >= 2");
  double sum = 0.0;
  for (const auto& v : x.flat()) {
    Complex prod = 1.0;
    for (int j = 1; j <= p; ++j) prod *= order_conjugate(v, p, j);
    sum += std::max(prod.real(), 0.0);
  }
  return std::pow(sum, 1.0 / p);
}

Complex hermitian_norm_witness(const DenseTensor& a) {
  if (a.order() != 3 || !a.shape().cubic()) {
    throw ShapeError("hermitian norm witness: tensor must be cubic order 3");
  }
  const int l = a.dim(1);
  const DenseTensor aaa = ternary_product(a, a, a);
  Complex sum = 0.0;
  for (int k = 1; k <= l; ++k) sum += aaa.at({k, k, k});
  for (int i = 1; i <= l; ++i) {
    for (int j = i + 1; j <= l; ++j) {
      for (int k = j + 1; k <= l; ++k) {
        sum += a.at({i, j, k}) * order_conjugate(a.at({k, i, j}), 3, 2) *
               order_conjugate(a.at({j, k, i}), 3, 1);
      }
    }
  }
  return sum;
}

}  // namespace tenspect
