#pragma once

#include <utility>
#include <vector>

#include "tenspect/tensor.hpp"

namespace tenspect {

/// Kronecker delta n-tensor of side l: 1 exactly where all indices agree.
DenseTensor kronecker(int order, int side);

/// The identity tensors I, I^T, I^T2 with patterns delta(n,p), delta(m,n),
/// delta(m,p). o(I, A, I^T2) = A for every cubic A of matching side.
struct IdentityFamily {
  DenseTensor i;
  DenseTensor i_t;
  DenseTensor i_t2;
};
IdentityFamily identity_family(int side);

/// Permutations use one-line notation with 1-based values: sigma[k-1] is the
/// image of k.
using Permutation = std::vector<int>;

void validate_permutation(const Permutation& sigma);
Permutation compose(const Permutation& tau, const Permutation& sigma);
Permutation inverse(const Permutation& sigma);

/// Factors sigma into transpositions so that sigma = f_s o ... o f_1 with
/// f_1 listed first (the order the conjugation sandwiches are applied in).
std::vector<std::pair<int, int>> transposition_factors(const Permutation& s);

/// P_sigma = o(1, 1, sum_k e_k (x) e_k (x) e_sigma(k)); entrywise this is
/// 1 exactly where the depth index is sigma of the column index.
DenseTensor permutation_tensor(const Permutation& sigma);

enum class SliceAxis { Row, Column, Depth };

/// Permutes the slices of a cubic tensor along the chosen axis: slice k of A
/// ends up at position sigma(k). Realized as the finite sequence of
/// transposition conjugations
///
///   depth:  o(P, A, P^T2)   row:  o(P^T, P^T2, A)   column:  o(A, P, P^T)
///
/// one sandwich per transposition factor of sigma.
DenseTensor slice_permute(const DenseTensor& a, const Permutation& sigma,
                          SliceAxis axis);

/// Scaling tensors built from a symmetric matrix W: the delta-patterned
/// family generalizing diagonal matrices. Construction rejects asymmetric W.
class ScalingFamily {
 public:
  ScalingFamily(const DenseTensor& w, int order);

  int order() const { return order_; }
  int side() const { return side_; }
  const DenseTensor& w() const { return w_; }

  /// The n-1 scaling tensors S^(1), ..., S^(n-1).
  const std::vector<DenseTensor>& members() const { return members_; }

  /// Order-3 only: the triple (a, b, c) with a = delta(m,p) w(p,n),
  /// b = delta(n,p) w(m,p), c = delta(m,n) w(p,m), whose ternary product is
  /// the cube pattern w(m,n)^3 delta(m,p).
  std::vector<DenseTensor> diagonal_triple() const;

 private:
  int order_;
  int side_;
  DenseTensor w_;
  std::vector<DenseTensor> members_;
};

/// Max-norm of o(D^T, D^T2, D) minus the entrywise cube of D; zero certifies
/// diagonality.
double diagonal_residual(const DenseTensor& d);

struct OrthogonalityResiduals {
  /// || o(Q, Q^dag2, Q^dag) - Delta ||_max
  double first = 0.0;
  /// || o(o(Q, o(Q^dag, Q^dag2, Delta), Q^dag2), Q, Q^dag) - Delta ||_max
  double kronecker_invariance = 0.0;
};
OrthogonalityResiduals orthogonality_residuals(const DenseTensor& q);

/// || o(B1, o(A1, M, A2), B2) - M ||_max
double inverse_pair_residual(const DenseTensor& b1, const DenseTensor& b2,
                             const DenseTensor& a1, const DenseTensor& a2,
                             const DenseTensor& m);

}  // namespace tenspect
