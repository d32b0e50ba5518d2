#pragma once

#include <span>
#include <vector>

#include "tenspect/tensor.hpp"

namespace tenspect {

/// Validated shapes for an n-ary product. Operand t (1-based) carries the
/// summation index in slot t+1, wrapping to slot 1 for the last operand; all
/// other slots must match the output shape.
struct ProductPlan {
  std::vector<Shape> operand_shapes;
  Shape output_shape;
  int summation_length = 0;

  static int summation_slot(int t, int n) { return t < n ? t + 1 : 1; }
};

/// Checks the chain and cross dimension constraints, naming the first
/// violated one. Requires n >= 2 operands, each of order n.
ProductPlan plan_nary_product(std::span<const Shape> operands);

/// Ternary product of 3-tensors (A: m*l*p, B: m*n*l, C: l*n*p):
///
///   d_{i,j,k} = sum_t a_{i,t,k} * b_{i,j,t} * c_{t,j,k}
DenseTensor ternary_product(const DenseTensor& a, const DenseTensor& b,
                            const DenseTensor& c);

/// General product of n tensors of order n; agrees with the matrix product
/// at n = 2 and with ternary_product at n = 3 exactly.
DenseTensor nary_product(std::span<const DenseTensor> operands);

/// Action of an order-n tensor on an (n-1)-tuple of operands embedded with a
/// leading singleton index. Same summation pattern as the n-ary product with
/// the actor in the last slot.
DenseTensor tensor_action(const DenseTensor& actor,
                          std::span<const DenseTensor> operands);

/// Outer product of n operands of order n with one singleton index each:
/// the n-ary product pattern with no summation (chain length 1).
DenseTensor outer_product(std::span<const DenseTensor> slices);

/// Triplet dot product against a background tensor T:
///
///   sum_{i,j,k} u_i * v_j^{c3^1} * w_k^{c3^2} * t_{i,j,k}
Complex bg_triple_dot(const DenseTensor& u, const DenseTensor& v,
                      const DenseTensor& w, const DenseTensor& t);

/// Product of three matrices through a background tensor (no conjugation):
///
///   d_{m,n,p} = sum_{i,j,k} a_{m,i} * b_{n,j} * c_{k,p} * t_{i,j,k}
///
/// A is m*l, B is n*l, C is l*p, T is l*l*l.
DenseTensor bg_matrix_product(const DenseTensor& a, const DenseTensor& b,
                              const DenseTensor& c, const DenseTensor& t);

/// Inner product of a p-tuple of equal-shape tensors. Operand t is read at
/// the t-fold cyclically rotated index and carries the order-p conjugate of
/// exponent p - t; operand 0 is unconjugated.
Complex inner_p(std::span<const DenseTensor> operands);

/// Entrywise l_p norm, evaluated through the conjugate-product form: the
/// product of all p order-p conjugates of an entry collapses to |x|^p.
double lp_norm(const DenseTensor& x, int p);

/// The positivity witness for cubic hermitian 3-tensors:
///
///   sum_k {o(A,A,A)}_{k,k,k}
///     + sum_{i<j<k} a_{i,j,k} * a_{k,i,j}^{c3^2} * a_{j,k,i}^{c3^1}
Complex hermitian_norm_witness(const DenseTensor& a);

}  // namespace tenspect
