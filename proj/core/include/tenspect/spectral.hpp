#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tenspect/tensor.hpp"

namespace tenspect {

/// Candidate factors for the 3-tensor spectral system: three cubic factor
/// tensors plus the three scaling matrices. In the default regime every
/// block is real nonnegative.
struct SpectralCandidate3 {
  DenseTensor q, r, s;     // l*l*l
  DenseTensor mu, nu, xi;  // l*l real scaling matrices

  int side() const { return q.dim(1); }
};

/// Max-norm deviations of the two blocks of the spectral system, evaluated
/// verbatim from the scalar equations:
///
///   a_{m,n,p} = sum_k (mu_{m,k} q_{m,k,p} mu_{k,p})
///                     * (nu_{n,k} r_{n,k,m} nu_{k,m})^{c3^2}
///                     * (xi_{p,k} s_{p,k,n} xi_{k,n})^{c3^1}
///   d_{m,n,p} = sum_k q_{m,k,p} * r_{n,k,m}^{c3^2} * s_{p,k,n}^{c3^1}
///
/// Returns (residual_a, residual_delta).
std::pair<double, double> spectral_residual3(const DenseTensor& a,
                                             const SpectralCandidate3& c);

struct SolveConfig {
  std::uint64_t seed = 0;
  int restarts = 8;
  int max_iter = 400;
  double tol = 1e-6;
};

struct SolveReport {
  SpectralCandidate3 candidate;
  double residual_a = 0.0;
  double residual_delta = 0.0;
  int iterations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
};

/// Damped Gauss-Newton least squares over the nonnegative orthant with a
/// finite-difference Jacobian and seeded restarts. Rejects norm-zero and
/// norm-one inputs (distinct error types); non-convergence is reported in
/// the SolveReport, never thrown.
SolveReport solve_spectral3(const DenseTensor& a, const SolveConfig& config);

/// Classical eigendecomposition route for hermitian matrices, pinned to the
/// two-block matrix spectral system. Rejects norm-zero/norm-one inputs.
struct MatrixSpectral {
  DenseTensor q, r;                // l*l complex, entries q_{k,m}
  std::vector<Complex> mu, nu;     // conj(mu_k) * nu_k = lambda_k
  std::vector<Complex> eigenvalues;
  double residual_a = 0.0;
  double residual_delta = 0.0;
};
MatrixSpectral matrix_spectral_oracle(const DenseTensor& a);

/// Scaled factors: q~_{m,k,p} = mu_{m,k} mu_{k,p} q_{m,k,p} and analogues.
struct ScaledFactors {
  DenseTensor q, r, s;
};
ScaledFactors scaled_factors(const SpectralCandidate3& c);

/// The eigen-matrices: middle-slot slices of a scaled factor tensor,
/// Q~(k) = (q~_{m,k,p})_{m,p} for k = 1..l.
std::vector<DenseTensor> eigen_matrices(const DenseTensor& scaled);

/// Outer-product expansion of the decomposition:
///
///   sum_k (x) ( q~_{.,k,.}, r~ slice ^{c3^2}, s~ slice ^{c3^1} )
///
/// which agrees with o(Q~, R~^dag2, S~^dag).
DenseTensor outer_reconstruct(const ScaledFactors& f);

/// Theorem-2 style residuals for an order-n system: the delta block from the
/// plain factors, the reconstruction block from the scaled factors, both
/// through n-ary products of adjoint powers t -> dagger^(n+1-t).
std::pair<double, double> spectral_residual_n(
    const DenseTensor& a, std::span<const DenseTensor> factors,
    std::span<const DenseTensor> scaled);

/// Node of the spectral hierarchy. Order-3 nodes hold the scaled factor
/// tensors and one child per eigen-matrix; leaves hold scaled left/right
/// eigenvector matrices and the eigenvalues. A defective (non-diagonalizable)
/// matrix stops the recursion with truncated = true.
struct HierarchyNode {
  int level_order = 2;
  std::vector<DenseTensor> scaled_factors;
  std::vector<Complex> eigenvalues;
  std::vector<HierarchyNode> children;
  bool truncated = false;
  double residual = 0.0;
};

HierarchyNode spectral_hierarchy(const DenseTensor& a,
                                 const SolveConfig& config);

/// Nested reconstruction: leaves from their scaled eigenvector pairs,
/// order-3 nodes by reassembling the scaled factors from their children and
/// applying the outer-product expansion.
DenseTensor hierarchy_reconstruct(const HierarchyNode& node);

/// Decomposition of a general square complex matrix into scaled right/left
/// eigenvector pairs: A = sum_k (sqrt(l_k) x_k) (x) (sqrt(l_k) y_k) with
/// Y^T X = I. Defective inputs come back with diagonalizable = false.
struct GeneralMatrixSpectral {
  bool diagonalizable = false;
  std::vector<Complex> eigenvalues;
  DenseTensor right_scaled;  // columns sqrt(l_k) x_k
  DenseTensor left_scaled;   // columns sqrt(l_k) y_k
  double residual = 0.0;
};
GeneralMatrixSpectral general_matrix_spectral(const DenseTensor& m);

/// Random hermitian test instance: nonnegative, constant on cyclic index
/// orbits, rescaled away from l3 norm 1.
DenseTensor hermitian_generator(int side, std::uint64_t seed);

/// Instance with a known exactly-solving candidate (both residual blocks
/// vanish by construction), for solver tests.
struct PlantedInstance {
  DenseTensor a;
  SpectralCandidate3 candidate;
};
PlantedInstance plant_spectral3(int side, std::uint64_t seed);

}  // namespace tenspect
