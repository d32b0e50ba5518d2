#include <doctest.h>

#include <complex>
#include <vector>

#include "tenspect/char_ideal.hpp"
#include "tenspect/groebner.hpp"
#include "tenspect/rng.hpp"
#include "tenspect/spectral.hpp"

using namespace tenspect;

namespace {

mpq_class rat(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// independent oracle: det(A - lambda I) for a rational 2x2 matrix,
// expanded directly in the single variable "lam"
MultiPoly det_minus_lambda_2x2(const RationalMatrix& a,
                               const VarRegistryPtr& reg, int lam_var) {
  const MultiPoly lam = MultiPoly::variable(reg, lam_var);
  const MultiPoly d11 = MultiPoly::constant(reg, a.at(1, 1)) - lam;
  const MultiPoly d22 = MultiPoly::constant(reg, a.at(2, 2)) - lam;
  return d11 * d22 -
         MultiPoly::constant(reg, a.at(1, 2) * a.at(2, 1));
}

}  // namespace

TEST_CASE("multivariate division") {
  auto reg = std::make_shared<const VarRegistry>(
      std::vector<std::string>{"x", "y"});
  const MultiPoly x = MultiPoly::variable(reg, 0);
  const MultiPoly y = MultiPoly::variable(reg, 1);
  const MultiPoly one = MultiPoly::constant(reg, 1);

  // member of the basis reduces to zero
  const MultiPoly f = x * x - one;
  CHECK(poly_reduce(f, std::vector{f}).is_zero());

  // x^2 - 1 by {x - 1} divides out completely
  CHECK(poly_reduce(x * x - one, std::vector{x - one}).is_zero());

  // x*y by {x} is zero, by {y^2} is untouched
  CHECK(poly_reduce(x * y, std::vector{x}).is_zero());
  CHECK(poly_reduce(x * y, std::vector{y * y}) == x * y);

  // remainder has no term divisible by a leading term
  const MultiPoly r = poly_reduce(x * x * y + x * y * y + y * y,
                                  std::vector{x * y - one, y * y - one});
  for (const auto& [mono, coeff] : r.terms()) {
    CHECK_FALSE((x * y).leading_monomial().divides(mono));
    CHECK_FALSE((y * y).leading_monomial().divides(mono));
  }
}

TEST_CASE("buchberger on textbook ideals") {
  auto reg = std::make_shared<const VarRegistry>(
      std::vector<std::string>{"x", "y"});
  const MultiPoly x = MultiPoly::variable(reg, 0);
  const MultiPoly y = MultiPoly::variable(reg, 1);
  const MultiPoly one = MultiPoly::constant(reg, 1);

  SUBCASE("x^2-1, xy-1 reduces to x-y, y^2-1") {
    const std::vector<MultiPoly> gens{x * x - one, x * y - one};
    const GroebnerBasis g = buchberger(gens);
    CHECK(g.reduced);
    CHECK(g.limits_hit == LimitHit::None);
    REQUIRE(g.generators.size() == 2);
    CHECK(g.generators[0] == x - y);
    CHECK(g.generators[1] == y * y - one);
    // every input generator reduces to zero by the basis
    for (const auto& f : gens) {
      CHECK(poly_reduce(f, g.generators).is_zero());
    }
  }

  SUBCASE("single generator is normalized monic") {
    const GroebnerBasis g =
        buchberger(std::vector{(x * x - one) * mpq_class(3)});
    REQUIRE(g.generators.size() == 1);
    CHECK(g.generators[0] == x * x - one);
  }

  SUBCASE("x, y is already a basis") {
    const GroebnerBasis g = buchberger(std::vector{x, y});
    REQUIRE(g.generators.size() == 2);
    CHECK(g.generators[0] == x);
    CHECK(g.generators[1] == y);
  }

  SUBCASE("s-polynomials of the output reduce to zero") {
    const GroebnerBasis g =
        buchberger(std::vector{x * x * y - one, x * y * y - x});
    CHECK(g.reduced);
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
        const auto& f1 = g.generators[i];
        const auto& f2 = g.generators[j];
        const Monomial lcm =
            Monomial::lcm(f1.leading_monomial(), f2.leading_monomial());
        MultiPoly m1{reg}, m2{reg};
        m1.add_term(lcm.quotient_by(f1.leading_monomial()),
                    mpq_class(1) / f1.leading_coeff());
        m2.add_term(lcm.quotient_by(f2.leading_monomial()),
                    mpq_class(1) / f2.leading_coeff());
        CHECK(poly_reduce(m1 * f1 - m2 * f2, g.generators).is_zero());
      }
    }
  }
}

TEST_CASE("ideal membership: combinations of generators reduce to zero") {
  RationalMatrix a(2);
  a.at(1, 1) = 2;
  a.at(2, 2) = 2;
  a.at(1, 2) = a.at(2, 1) = 1;
  const CharIdeal ideal = matrix_char_ideal(a);
  const GroebnerBasis g = buchberger(ideal.generators);
  REQUIRE(g.reduced);

  Rng rng(65);
  const auto reg = ideal.registry;
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly combo{reg};
    for (const auto& gen : ideal.generators) {
      MultiPoly factor{reg};
      Monomial m{std::vector<unsigned short>(reg->arity(), 0)};
      m.exps[rng.below(reg->arity())] = 1;
      factor.add_term(m, mpq_class(static_cast<long>(rng.below(7)) - 3));
      combo += factor * gen;
    }
    CHECK(poly_reduce(combo, g.generators).is_zero());
  }
}

TEST_CASE("matrix characteristic ideal") {
  SUBCASE("l = 1 instantiation") {
    RationalMatrix a(1);
    a.at(1, 1) = 3;
    const CharIdeal ideal = matrix_char_ideal(a);
    REQUIRE(ideal.generators.size() == 2);
    CHECK(ideal.generators[0].str() == "1*q1_1*r1_1*l1 + -3");
    CHECK(ideal.generators[1].str() == "1*q1_1*r1_1 + -1");

    const GroebnerBasis g = buchberger(ideal.generators);
    const auto cs = characteristic_set(g, {"l1"});
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].str() == "1*l1 + -3");
  }

  SUBCASE("l = 2 generator and variable counts") {
    RationalMatrix a(2);
    a.at(1, 1) = 2;
    a.at(2, 2) = 2;
    a.at(1, 2) = a.at(2, 1) = 1;
    const CharIdeal ideal = matrix_char_ideal(a);
    // full (m, n) range: one spectral + one orthogonality generator per pair
    CHECK(ideal.generators.size() == 8);
    CHECK(ideal.registry->arity() == 10);
  }

  SUBCASE("asymmetric input is rejected") {
    RationalMatrix a(2);
    a.at(1, 2) = 1;
    CHECK_THROWS(matrix_char_ideal(a));
  }

  SUBCASE("generators vanish at the oracle solution") {
    RationalMatrix a(2);
    a.at(1, 1) = 2;
    a.at(2, 2) = 2;
    a.at(1, 2) = a.at(2, 1) = 1;
    const CharIdeal ideal = matrix_char_ideal(a);

    DenseTensor am{Shape{2, 2}};
    am.at({1, 1}) = am.at({2, 2}) = 2.0;
    am.at({1, 2}) = am.at({2, 1}) = 1.0;
    const MatrixSpectral spec = matrix_spectral_oracle(am);

    // substitute q, r and the eigenvalues into the generators
    std::vector<std::complex<double>> vals(ideal.registry->arity());
    for (int k = 1; k <= 2; ++k) {
      for (int m = 1; m <= 2; ++m) {
        vals[ideal.registry->index_of("q" + std::to_string(k) + "_" +
                                      std::to_string(m))] =
            spec.q.at({k, m});
        vals[ideal.registry->index_of("r" + std::to_string(k) + "_" +
                                      std::to_string(m))] =
            spec.r.at({k, m});
      }
      vals[ideal.registry->index_of("l" + std::to_string(k))] =
          spec.eigenvalues[k - 1];
    }
    for (const auto& gen : ideal.generators) {
      CHECK(std::abs(gen.eval(vals)) <= 1e-9);
    }
  }
}

TEST_CASE("characteristic set equals the determinant expansion") {
  Rng rng(62);
  for (int trial = 0; trial < 12; ++trial) {
    RationalMatrix a(2);
    if (trial == 0) {
      a.at(1, 1) = 2; a.at(2, 2) = 2; a.at(1, 2) = a.at(2, 1) = 1;
    } else if (trial == 1) {
      a.at(1, 1) = 2; a.at(2, 2) = 3;
    } else {
      a.at(1, 1) = rat(static_cast<long>(rng.below(9)) - 4,
                       1 + static_cast<long>(rng.below(3)));
      a.at(2, 2) = rat(static_cast<long>(rng.below(9)) - 4,
                       1 + static_cast<long>(rng.below(3)));
      a.at(1, 2) = a.at(2, 1) = rat(static_cast<long>(rng.below(9)) - 4,
                                    1 + static_cast<long>(rng.below(3)));
    }
    const CharIdeal ideal = matrix_char_ideal(a);
    const GroebnerBasis g = buchberger(ideal.generators);
    REQUIRE(g.reduced);
    const auto cs = characteristic_set(g, {"l2"});
    REQUIRE(!cs.empty());

    const MultiPoly expect =
        det_minus_lambda_2x2(a, ideal.registry,
                             ideal.registry->index_of("l2"))
            .monic();
    bool found = false;
    for (const auto& member : cs) {
      found |= member.monic() == expect;
    }
    CHECK(found);
  }
}

TEST_CASE("characteristic set rejects incompatible elimination") {
  RationalMatrix a(2);
  a.at(1, 1) = 2; a.at(2, 2) = 3;
  const GroebnerBasis g = buchberger(matrix_char_ideal(a).generators);
  CHECK_THROWS(characteristic_set(g, {"l1"}));   // l2 ranks below l1
  CHECK_THROWS(characteristic_set(g, {"zz"}));
  CHECK_NOTHROW(characteristic_set(g, {"l1", "l2"}));
}

TEST_CASE("3-tensor characteristic ideal") {
  SUBCASE("l = 1 instantiation") {
    RationalTensor3 a(1);
    a.at(1, 1, 1) = 5;
    const CharIdeal ideal = tensor3_char_ideal(a);
    REQUIRE(ideal.generators.size() == 2);
    CHECK(ideal.generators[0].str() ==
          "1*q1_1_1*r1_1_1*s1_1_1*d1_1^2*e1_1^2*f1_1^2 + -5");
    CHECK(ideal.generators[1].str() == "1*q1_1_1*r1_1_1*s1_1_1 + -1");

    // the scalar case eliminates in closed form: d^2 e^2 f^2 - a
    const GroebnerBasis g = buchberger(ideal.generators);
    CHECK(g.reduced);
    const auto cs = characteristic_set(g, tensor3_scaling_keep(1));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].str() == "1*d1_1^2*e1_1^2*f1_1^2 + -5");
  }

  SUBCASE("l = 2 counts") {
    RationalTensor3 a(2);
    const CharIdeal ideal = tensor3_char_ideal(a);
    CHECK(ideal.generators.size() == 8);
    CHECK(ideal.registry->arity() == 36);
  }

  SUBCASE("l = 3 is rejected") {
    RationalTensor3 a(3);
    CHECK_THROWS(tensor3_char_ideal(a));
  }

  SUBCASE("generators vanish on a planted candidate") {
    const PlantedInstance inst = plant_spectral3(2, 63);
    RationalTensor3 a(2);
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n)
        for (int p = 1; p <= 2; ++p)
          a.at(m, n, p) = mpq_class(inst.a.at({m, n, p}).real());
    const CharIdeal ideal = tensor3_char_ideal(a);

    std::vector<std::complex<double>> vals(ideal.registry->arity());
    const auto& c = inst.candidate;
    for (int m = 1; m <= 2; ++m) {
      for (int k = 1; k <= 2; ++k) {
        for (int p = 1; p <= 2; ++p) {
          const std::string suffix = std::to_string(m) + "_" +
                                     std::to_string(k) + "_" +
                                     std::to_string(p);
          vals[ideal.registry->index_of("q" + suffix)] = c.q.at({m, k, p});
          vals[ideal.registry->index_of("r" + suffix)] = c.r.at({m, k, p});
          vals[ideal.registry->index_of("s" + suffix)] = c.s.at({m, k, p});
        }
        const std::string ij =
            std::to_string(m) + "_" + std::to_string(k);
        vals[ideal.registry->index_of("d" + ij)] = c.mu.at({m, k});
        vals[ideal.registry->index_of("e" + ij)] = c.nu.at({m, k});
        vals[ideal.registry->index_of("f" + ij)] = c.xi.at({m, k});
      }
    }
    for (const auto& gen : ideal.generators) {
      CHECK(std::abs(gen.eval(vals)) <= 1e-6);
    }
  }

  SUBCASE("buchberger honors resource limits") {
    RationalTensor3 a(2);
    Rng rng(64);
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n)
        for (int p = 1; p <= 2; ++p)
          a.at(m, n, p) = rat(static_cast<long>(rng.below(5)) + 1, 2);
    const CharIdeal ideal = tensor3_char_ideal(a);
    GroebnerLimits limits;
    limits.max_seconds = 0.25;
    limits.max_basis = 40;
    const GroebnerBasis g = buchberger(ideal.generators, limits);
    if (g.limits_hit != LimitHit::None) {
      CHECK_FALSE(g.reduced);
    }
  }
}
