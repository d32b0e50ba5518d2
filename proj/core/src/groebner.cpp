#include "tenspect/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace tenspect {

MultiPoly poly_reduce(const MultiPoly& f, std::span<const MultiPoly> basis) {
  MultiPoly work = f;
  MultiPoly remainder{f.registry()};
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const mpq_class& lc = work.leading_coeff();
    bool divided = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lm)) {
        MultiPoly factor{f.registry()};
        factor.add_term(lm.quotient_by(g.leading_monomial()),
                        lc / g.leading_coeff());
        work -= factor * g;
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      MultiPoly lead{f.registry()};
      lead.add_term(lm, lc);
      work -= lead;
    }
  }
  return remainder;
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
  int degree;
};

// Minimal-degree lcm first, ties broken by the lex order, then indices, so
// runs are deterministic.
bool pair_less(const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  MonomialLexGreater gt;
  if (gt(b.lcm, a.lcm)) return true;
  if (gt(a.lcm, b.lcm)) return false;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const Monomial& lcm) {
  MultiPoly mf{f.registry()};
  mf.add_term(lcm.quotient_by(f.leading_monomial()),
              mpq_class(1) / f.leading_coeff());
  MultiPoly mg{g.registry()};
  mg.add_term(lcm.quotient_by(g.leading_monomial()),
              mpq_class(1) / g.leading_coeff());
  return mf * f - mg * g;
}

// Smallest basis: drops members whose leading monomial another member's
// leading monomial divides, then fully reduces each member by the rest.
void reduce_basis(std::vector<MultiPoly>& basis) {
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const bool j_kept_earlier =
          j < i || !basis[i].leading_monomial().divides(
                       basis[j].leading_monomial());
      if (basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
          j_kept_earlier) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    MultiPoly r = poly_reduce(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  MonomialLexGreater gt;
  std::sort(reduced.begin(), reduced.end(),
            [&](const MultiPoly& a, const MultiPoly& b) {
              return gt(a.leading_monomial(), b.leading_monomial());
            });
  basis = std::move(reduced);
}

}  // namespace

GroebnerBasis buchberger(std::span<const MultiPoly> gens,
                         const GroebnerLimits& limits) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  GroebnerBasis out;
  out.registry = gens[0].registry();

  std::vector<MultiPoly> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) {
    out.generators = {};
    out.reduced = true;
    return out;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  };

  std::vector<Pair> pairs;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      // first criterion: coprime leading terms reduce to zero
      if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) {
        continue;
      }
      Monomial lcm = Monomial::lcm(basis[i].leading_monomial(),
                                   basis[j].leading_monomial());
      pairs.push_back({i, j, lcm, lcm.total_degree()});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    if (elapsed() > limits.max_seconds) {
      out.limits_hit = LimitHit::TimeCap;
      break;
    }
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *best;
    pairs.erase(best);

    MultiPoly s = s_polynomial(basis[p.i], basis[p.j], p.lcm);
    MultiPoly r = poly_reduce(s, basis);
    if (r.is_zero()) continue;
    if (r.total_degree() > limits.max_degree) {
      out.limits_hit = LimitHit::DegreeCap;
      break;
    }
    basis.push_back(r.monic());
    if (static_cast<int>(basis.size()) > limits.max_basis) {
      out.limits_hit = LimitHit::BasisCap;
      break;
    }
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  reduce_basis(basis);
  out.generators = std::move(basis);
  out.reduced = out.limits_hit == LimitHit::None;
  return out;
}

std::vector<MultiPoly> characteristic_set(
    const GroebnerBasis& basis, const std::vector<std::string>& keep) {
  const auto& reg = basis.registry;
  std::vector<bool> kept(reg->arity(), false);
  int min_kept = reg->arity();
  for (const auto& name : keep) {
    int idx = reg->index_of(name);
    if (idx < 0) {
      throw std::invalid_argument("characteristic set: unknown variable " +
                                  name);
    }
    kept[idx] = true;
    min_kept = std::min(min_kept, idx);
  }
  for (int i = min_kept; i < reg->arity(); ++i) {
    if (!kept[i]) {
      throw std::invalid_argument(
          "characteristic set: kept variables must rank below every "
          "eliminated variable (order incompatible with elimination)");
    }
  }
  std::vector<MultiPoly> out;
  for (const auto& g : basis.generators) {
    if (g.uses_only(kept)) out.push_back(g);
  }
  return out;
}

}  // namespace tenspect
