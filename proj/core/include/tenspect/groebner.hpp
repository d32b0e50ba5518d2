#pragma once

#include <span>
#include <string>
#include <vector>

#include "tenspect/poly.hpp"

namespace tenspect {

/// Remainder of f under multivariate division by G: no term of the result is
/// divisible by any leading monomial of G, and f minus the result lies in
/// the ideal generated by G.
MultiPoly poly_reduce(const MultiPoly& f, std::span<const MultiPoly> basis);

struct GroebnerLimits {
  int max_basis = 500;
  int max_degree = 12;
  double max_seconds = 60.0;
};

enum class LimitHit { None, BasisCap, DegreeCap, TimeCap };

struct GroebnerBasis {
  VarRegistryPtr registry;
  std::vector<MultiPoly> generators;
  bool reduced = false;
  LimitHit limits_hit = LimitHit::None;
};

/// Buchberger's algorithm under the registry's lex order. Pair selection is
/// the normal strategy (smallest lcm degree) with the coprime-leading-term
/// criterion as the only pruning. Resource exhaustion is not an error: the
/// partial basis comes back with limits_hit set and reduced = false.
GroebnerBasis buchberger(std::span<const MultiPoly> gens,
                         const GroebnerLimits& limits = {});

/// The members of a reduced basis lying entirely in the subring of the kept
/// variables (elimination theorem). The kept variables must rank below every
/// eliminated variable; anything else is an order error.
std::vector<MultiPoly> characteristic_set(const GroebnerBasis& basis,
                                          const std::vector<std::string>& keep);

}  // namespace tenspect
