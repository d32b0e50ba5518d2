#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tenspect/tensor.hpp"

namespace tenspect {

/// Three square real matrices with orthonormal columns (checked within
/// 1e-10 at construction).
class TuckerTriple {
 public:
  TuckerTriple(DenseTensor q, DenseTensor s, DenseTensor u);

  const DenseTensor& q() const { return q_; }
  const DenseTensor& s() const { return s_; }
  const DenseTensor& u() const { return u_; }

 private:
  DenseTensor q_, s_, u_;
};

/// Core tensor of the Tucker decomposition through the background-tensor
/// product:  t_{y,r,v} = sum_{i,j,k} q_{i,y} s_{j,r} u_{k,v} d_{i,j,k}
DenseTensor tucker_core(const DenseTensor& d, const TuckerTriple& t);

/// Inverse map: d_{m,n,p} = sum_{y,r,v} q_{m,y} s_{n,r} u_{p,v} t_{y,r,v};
/// composing with tucker_core is the identity for orthonormal triples.
DenseTensor tucker_reconstruct(const DenseTensor& core, const TuckerTriple& t);

/// Max deviation over the three slice-orthogonality conditions of a core
/// tensor: for every axis and index pair (alpha, beta),
/// | sum of slice products - delta_{alpha,beta} * (slice norm squared) |.
double total_orthogonality_residual(const DenseTensor& t);

/// Rank-1 fitting objective, slice form: stacks the lambda-scaled slice
/// triples into three 3-tensors M, N, P and evaluates
/// || o(M, N, P) - A ||_l3. An empty factor list scores || A ||_l3.
double rank1_objective(std::span<const std::array<DenseTensor, 3>> slices,
                       std::span<const double> lambdas, const DenseTensor& a);

/// Rank-1 fitting objective, vector form:
/// || sum_k lambda_k^3 u_k (x) v_k (x) w_k  -  A ||_l3.
double rank1_objective_vectors(
    std::span<const std::array<DenseTensor, 3>> vectors,
    std::span<const double> lambdas, const DenseTensor& a);

/// Replicates a vector triple into the slice matrices whose outer product
/// is the plain rank-1 tensor u (x) v (x) w.
std::array<DenseTensor, 3> replicate_vectors_to_slices(const DenseTensor& u,
                                                       const DenseTensor& v,
                                                       const DenseTensor& w);

/// Deterministic orthonormal matrix from a seeded product of Givens
/// rotations.
DenseTensor random_orthonormal(int side, std::uint64_t seed);

}  // namespace tenspect
