#include <doctest.h>

#include <array>
#include <cmath>

#include "tenspect/errors.hpp"
#include "tenspect/products.hpp"
#include "tenspect/special.hpp"
#include "tenspect/spectral.hpp"
#include "tenspect/tensor_io.hpp"
#include "test_util.hpp"

using namespace tenspect;
using namespace tenspect::testutil;

TEST_CASE("matrix oracle on a fixed symmetric matrix") {
  DenseTensor a{Shape{2, 2}};
  a.at({1, 1}) = a.at({2, 2}) = 2.0;
  a.at({1, 2}) = a.at({2, 1}) = 1.0;
  const MatrixSpectral spec = matrix_spectral_oracle(a);
  CHECK(spec.residual_a <= 1e-10);
  CHECK(spec.residual_delta <= 1e-10);
  REQUIRE(spec.eigenvalues.size() == 2);
  const double lo = std::min(spec.eigenvalues[0].real(),
                             spec.eigenvalues[1].real());
  const double hi = std::max(spec.eigenvalues[0].real(),
                             spec.eigenvalues[1].real());
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hi == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("matrix oracle on diagonal and degenerate inputs") {
  DenseTensor d{Shape{2, 2}};
  d.at({1, 1}) = 5.0;
  d.at({2, 2}) = 2.0;
  const MatrixSpectral spec = matrix_spectral_oracle(d);
  CHECK(spec.residual_a <= 1e-12);
  const double lo = std::min(spec.eigenvalues[0].real(),
                             spec.eigenvalues[1].real());
  CHECK(lo == doctest::Approx(2.0).epsilon(1e-12));

  DenseTensor two_i{Shape{3, 3}};
  for (int i = 1; i <= 3; ++i) two_i.at({i, i}) = 2.0;
  CHECK(matrix_spectral_oracle(two_i).residual_a <= 1e-12);
}

TEST_CASE("matrix oracle soundness over random symmetric matrices") {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = 2 + static_cast<int>(rng.below(5));
    DenseTensor a{Shape{l, l}};
    for (int i = 1; i <= l; ++i) {
      for (int j = i; j <= l; ++j) {
        a.at({i, j}) = rng.uniform(-2.0, 2.0);
        a.at({j, i}) = a.at({i, j});
      }
    }
    if (std::abs(lp_norm(a, 2) - 1.0) <= 1e-9) continue;
    const MatrixSpectral spec = matrix_spectral_oracle(a);
    CHECK(spec.residual_a <= 1e-9);
    CHECK(spec.residual_delta <= 1e-9);
  }
}

TEST_CASE("matrix oracle handles complex hermitian and negative spectra") {
  DenseTensor a{Shape{2, 2}};
  a.at({1, 1}) = -2.0;
  a.at({2, 2}) = 1.0;
  a.at({1, 2}) = Complex{0.0, 1.0};
  a.at({2, 1}) = Complex{0.0, -1.0};
  const MatrixSpectral spec = matrix_spectral_oracle(a);
  CHECK(spec.residual_a <= 1e-10);
  CHECK(spec.residual_delta <= 1e-10);
}

TEST_CASE("matrix oracle gates its hypotheses") {
  CHECK_THROWS_AS(matrix_spectral_oracle(DenseTensor{Shape{2, 2}}),
                  NormZeroError);
  DenseTensor unit{Shape{2, 2}};
  unit.at({1, 1}) = 1.0;
  CHECK_THROWS_AS(matrix_spectral_oracle(unit), NormOneError);
  DenseTensor nonherm{Shape{2, 2}};
  nonherm.at({1, 2}) = 1.0;
  CHECK_THROWS_AS(matrix_spectral_oracle(nonherm), ShapeError);
}

TEST_CASE("spectral residual on planted and trivial candidates") {
  const PlantedInstance inst = plant_spectral3(2, 72);
  const auto [ra, rd] = spectral_residual3(inst.a, inst.candidate);
  CHECK(ra <= 1e-12);
  CHECK(rd <= 1e-12);

  // zero candidate: block a misses by the tensor itself, delta block by 1
  SpectralCandidate3 zero;
  zero.q = zero.r = zero.s = DenseTensor{Shape{2, 2, 2}};
  zero.mu = zero.nu = zero.xi = DenseTensor{Shape{2, 2}};
  const auto [za, zd] = spectral_residual3(inst.a, zero);
  CHECK(za == doctest::Approx(max_abs(inst.a)).epsilon(1e-12));
  CHECK(zd == 1.0);

  // delta-slice candidate with unit scalings solves its own reconstruction
  const int l = 2;
  SpectralCandidate3 delta_c;
  delta_c.q = delta_c.r = delta_c.s = kronecker(3, l);
  delta_c.mu = delta_c.nu = delta_c.xi = ones(Shape{l, l});
  const DenseTensor target = outer_reconstruct(scaled_factors(delta_c));
  const auto [da, dd] = spectral_residual3(target, delta_c);
  CHECK(da <= 1e-12);
  CHECK(dd <= 1e-12);
}

TEST_CASE("solver preconditions") {
  SolveConfig cfg;
  CHECK_THROWS_AS(solve_spectral3(DenseTensor{Shape{2, 2, 2}}, cfg),
                  NormZeroError);
  DenseTensor unit{Shape{2, 2, 2}};
  unit.at({1, 1, 1}) = 1.0;
  CHECK_THROWS_AS(solve_spectral3(unit, cfg), NormOneError);
  CHECK_THROWS_AS(solve_spectral3(DenseTensor{Shape{2, 3, 2}}, cfg),
                  ShapeError);
}

TEST_CASE("solver converges on planted instances") {
  SolveConfig cfg;
  cfg.tol = 1e-6;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const PlantedInstance inst = plant_spectral3(2, 100 + seed);
    cfg.seed = seed;
    const SolveReport report = solve_spectral3(inst.a, cfg);
    CHECK(report.converged);
    CHECK(report.residual_a <= cfg.tol);
    CHECK(report.residual_delta <= cfg.tol);
    const DenseTensor rebuilt =
        outer_reconstruct(scaled_factors(report.candidate));
    CHECK(max_abs_diff(rebuilt, inst.a) <= 1e-5);
  }
}

TEST_CASE("solver converges on side-3 planted instances") {
  SolveConfig cfg;
  cfg.tol = 1e-6;
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    const PlantedInstance inst = plant_spectral3(3, 4000 + seed);
    cfg.seed = seed;
    const SolveReport report = solve_spectral3(inst.a, cfg);
    CHECK(report.converged);
  }
}

TEST_CASE("solver reports are deterministic") {
  const PlantedInstance inst = plant_spectral3(2, 73);
  SolveConfig cfg;
  cfg.seed = 9;
  cfg.restarts = 2;
  cfg.max_iter = 40;
  const SolveReport r1 = solve_spectral3(inst.a, cfg);
  const SolveReport r2 = solve_spectral3(inst.a, cfg);
  CHECK(r1.residual_a == r2.residual_a);
  CHECK(r1.residual_delta == r2.residual_delta);
  CHECK(r1.iterations == r2.iterations);
  CHECK(tensor_to_json(r1.candidate.q) == tensor_to_json(r2.candidate.q));
  CHECK(tensor_to_json(r1.candidate.xi) == tensor_to_json(r2.candidate.xi));
}

TEST_CASE("scaled factors and eigen-matrices") {
  const PlantedInstance inst = plant_spectral3(2, 74);
  const ScaledFactors f = scaled_factors(inst.candidate);

  // unit scalings leave the factors unchanged
  SpectralCandidate3 unit = inst.candidate;
  unit.mu = unit.nu = unit.xi = ones(Shape{2, 2});
  CHECK(max_abs_diff(scaled_factors(unit).q, unit.q) == 0.0);

  // zero scalings wipe them out
  SpectralCandidate3 zeroed = inst.candidate;
  zeroed.mu = DenseTensor{Shape{2, 2}};
  CHECK(max_abs(scaled_factors(zeroed).q) == 0.0);

  // the eigen-matrices are the middle-index slices
  const auto slices = eigen_matrices(f.q);
  REQUIRE(slices.size() == 2);
  for (int k = 1; k <= 2; ++k) {
    for (int m = 1; m <= 2; ++m) {
      for (int p = 1; p <= 2; ++p) {
        CHECK(slices[k - 1].at({m, p}) == f.q.at({m, k, p}));
      }
    }
  }
}

TEST_CASE("outer reconstruction equals the ternary-product route") {
  Rng rng(75);
  for (int trial = 0; trial < 5; ++trial) {
    SpectralCandidate3 c;
    c.q = random_real(Shape{2, 2, 2}, rng, 0.0, 1.0);
    c.r = random_real(Shape{2, 2, 2}, rng, 0.0, 1.0);
    c.s = random_real(Shape{2, 2, 2}, rng, 0.0, 1.0);
    c.mu = random_real(Shape{2, 2}, rng, 0.0, 1.0);
    c.nu = random_real(Shape{2, 2}, rng, 0.0, 1.0);
    c.xi = random_real(Shape{2, 2}, rng, 0.0, 1.0);
    const ScaledFactors f = scaled_factors(c);
    const DenseTensor via_outer = outer_reconstruct(f);
    const DenseTensor via_product =
        ternary_product(f.q, adjoint_k(f.r, 2), adjoint_k(f.s, 1));
    CHECK(max_abs_diff(via_outer, via_product) <= 1e-12);
  }

  // single-k factors produce a single outer-product term
  SpectralCandidate3 c;
  c.q = c.r = c.s = DenseTensor{Shape{2, 2, 2}};
  c.mu = c.nu = c.xi = ones(Shape{2, 2});
  c.q.at({1, 1, 1}) = 2.0;
  c.r.at({1, 1, 1}) = 3.0;
  c.s.at({1, 1, 1}) = 5.0;
  const DenseTensor rec = outer_reconstruct(scaled_factors(c));
  CHECK(rec.at({1, 1, 1}) == Complex{30.0});
  CHECK(max_abs(rec) == 30.0);
}

TEST_CASE("n-tensor spectral residual") {
  // the 3-tensor system written through the n-ary machinery matches the
  // candidate evaluation
  const PlantedInstance inst = plant_spectral3(2, 76);
  const ScaledFactors f = scaled_factors(inst.candidate);
  const DenseTensor factors[] = {inst.candidate.q, inst.candidate.r,
                                 inst.candidate.s};
  const DenseTensor scaled[] = {f.q, f.r, f.s};
  const auto [ra, rd] = spectral_residual_n(inst.a, factors, scaled);
  CHECK(ra <= 1e-12);
  CHECK(rd <= 1e-12);

  // order-2 case: the delta block of an orthogonal matrix vanishes
  DenseTensor rot{Shape{2, 2}};
  const double c0 = std::cos(0.3), s0 = std::sin(0.3);
  rot.at({1, 1}) = c0;
  rot.at({1, 2}) = -s0;
  rot.at({2, 1}) = s0;
  rot.at({2, 2}) = c0;
  const DenseTensor a2 = nary_product(std::array{rot, transpose_k(rot, 1)});
  const DenseTensor factors2[] = {rot, rot};
  const auto [ra2, rd2] = spectral_residual_n(a2, factors2, factors2);
  CHECK(rd2 <= 1e-12);

  // order-4 case: the Kronecker tensor solves its own system exactly
  const DenseTensor d4 = kronecker(4, 2);
  const std::vector<DenseTensor> quad(4, d4);
  const auto [ra4, rd4] = spectral_residual_n(d4, quad, quad);
  CHECK(ra4 == 0.0);
  CHECK(rd4 == 0.0);
}

TEST_CASE("general matrix spectral decomposition") {
  Rng rng(77);
  const DenseTensor m = random_real(Shape{3, 3}, rng, 0.0, 1.0);
  const GeneralMatrixSpectral spec = general_matrix_spectral(m);
  REQUIRE(spec.diagonalizable);
  // A = sum_k (sqrt(l) x_k) (x) (sqrt(l) y_k)
  DenseTensor rebuilt{Shape{3, 3}};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      Complex sum = 0.0;
      for (int k = 1; k <= 3; ++k) {
        sum += spec.right_scaled.at({i, k}) * spec.left_scaled.at({j, k});
      }
      rebuilt.at({i, j}) = sum;
    }
  }
  CHECK(max_abs_diff(rebuilt, m) <= 1e-9);

  // a Jordan block is flagged as defective
  DenseTensor jordan{Shape{2, 2}};
  jordan.at({1, 1}) = jordan.at({2, 2}) = 1.0;
  jordan.at({1, 2}) = 1.0;
  CHECK_FALSE(general_matrix_spectral(jordan).diagonalizable);
}

TEST_CASE("hierarchy base case and truncation flag") {
  // order-2 input: single eigendecomposition node
  DenseTensor a{Shape{2, 2}};
  a.at({1, 1}) = 2.0;
  a.at({1, 2}) = a.at({2, 1}) = 1.0;
  a.at({2, 2}) = 3.0;
  const HierarchyNode node = spectral_hierarchy(a, SolveConfig{});
  CHECK(node.level_order == 2);
  CHECK_FALSE(node.truncated);
  CHECK(node.children.empty());
  CHECK(max_abs_diff(hierarchy_reconstruct(node), a) <= 1e-10);

  // planted Jordan block: truncation flag set
  DenseTensor jordan{Shape{2, 2}};
  jordan.at({1, 1}) = jordan.at({2, 2}) = 1.0;
  jordan.at({1, 2}) = 1.0;
  const HierarchyNode defective = spectral_hierarchy(jordan, SolveConfig{});
  CHECK(defective.truncated);

  CHECK_THROWS_AS(spectral_hierarchy(DenseTensor{Shape{2, 2, 2, 2}},
                                     SolveConfig{}),
                  ShapeError);
}

TEST_CASE("hierarchy round trip on a planted instance") {
  const PlantedInstance inst = plant_spectral3(2, 78);
  SolveConfig cfg;
  cfg.seed = 5;
  const HierarchyNode tree = spectral_hierarchy(inst.a, cfg);
  CHECK(tree.level_order == 3);
  REQUIRE(tree.children.size() == 6);
  if (!tree.truncated) {
    CHECK(max_abs_diff(hierarchy_reconstruct(tree), inst.a) <= 1e-5);
    for (const auto& child : tree.children) {
      CHECK(child.level_order == 2);
      CHECK(child.eigenvalues.size() == 2);
    }
  }
}

TEST_CASE("hermitian generator") {
  // single scalar, never unit norm
  const DenseTensor one = hermitian_generator(1, 80);
  CHECK(one.at({1, 1, 1}).real() > 0.0);
  CHECK(std::abs(lp_norm(one, 3) - 1.0) > 1e-6);

  const DenseTensor a = hermitian_generator(2, 81);
  const auto report = conformance(a, Conformance::Hermitian, 0.0);
  CHECK(report.ok);
  CHECK(report.max_deviation == 0.0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const double norm = lp_norm(hermitian_generator(3, seed), 3);
    CHECK(std::abs(norm - 1.0) > 1e-6);
  }
}
