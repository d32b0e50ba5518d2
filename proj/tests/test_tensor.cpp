#include <doctest.h>

#include <cmath>
#include <cstring>

#include "tenspect/errors.hpp"
#include "tenspect/special.hpp"
#include "tenspect/tensor.hpp"
#include "tenspect/tensor_io.hpp"
#include "test_util.hpp"

using namespace tenspect;
using namespace tenspect::testutil;

TEST_CASE("dimension operator") {
  DenseTensor a{Shape{2, 3, 4}};
  CHECK(dim(a, 2) == 3);
  CHECK(dim(a, 5) == 0);
  CHECK(dim(a, 0) == 0);
  DenseTensor v{Shape{7}};
  CHECK(dim(v, 1) == 7);
}

TEST_CASE("transpose moves a single entry along the cycle") {
  DenseTensor a{Shape{2, 3, 4}};
  a.at({1, 2, 3}) = 5.0;
  const DenseTensor at = transpose_k(a, 1);
  CHECK(at.shape() == Shape{3, 4, 2});
  CHECK(at.at({2, 3, 1}) == Complex{5.0});
  double total = 0.0;
  for (const auto& v : at.flat()) total += std::abs(v);
  CHECK(total == 5.0);
}

TEST_CASE("transpose rotates non-cubic shapes at higher order") {
  DenseTensor a{Shape{2, 3, 4, 5}};
  a.at({1, 2, 3, 4}) = 7.0;
  const DenseTensor at = transpose_k(a, 1);
  CHECK(at.shape() == Shape{3, 4, 5, 2});
  CHECK(at.at({2, 3, 4, 1}) == Complex{7.0});
  const DenseTensor at3 = transpose_k(a, 3);
  CHECK(at3.shape() == Shape{5, 2, 3, 4});
  CHECK(at3.at({4, 1, 2, 3}) == Complex{7.0});
  CHECK(max_abs_diff(transpose_k(a, 4), a) == 0.0);
}

TEST_CASE("transpose tower is a cyclic group action") {
  Rng rng(21);
  for (int order = 2; order <= 4; ++order) {
    const DenseTensor a =
        random_complex(Shape{std::vector<int>(order, 3)}, rng);
    CHECK(max_abs_diff(transpose_k(a, order), a) == 0.0);
    CHECK(max_abs_diff(transpose_k(a, -1), transpose_k(a, order - 1)) == 0.0);
    for (int x = 0; x <= order; ++x) {
      for (int y = 0; y <= order; ++y) {
        CHECK(max_abs_diff(transpose_k(transpose_k(a, x), y),
                           transpose_k(a, x + y)) == 0.0);
      }
    }
  }
}

TEST_CASE("order-2 transpose and adjoint are the matrix operations") {
  Rng rng(22);
  const DenseTensor a = random_complex(Shape{3, 4}, rng);
  const DenseTensor at = transpose_k(a, 1);
  const DenseTensor ad = adjoint_k(a, 1);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 4; ++j) {
      CHECK(at.at({j, i}) == a.at({i, j}));
      CHECK(ad.at({j, i}) == std::conj(a.at({i, j})));
    }
  }
}

TEST_CASE("adjoint of a real nonnegative tensor is its transpose") {
  Rng rng(23);
  const DenseTensor a = random_real(Shape{3, 3, 3}, rng, 0.0, 2.0);
  for (int k = 0; k <= 3; ++k) {
    CHECK(max_abs_diff(adjoint_k(a, k), transpose_k(a, k)) == 0.0);
  }
}

TEST_CASE("adjoint period equals the order") {
  Rng rng(24);
  for (int order = 2; order <= 4; ++order) {
    const DenseTensor a =
        random_complex(Shape{std::vector<int>(order, 3)}, rng);
    CHECK(max_abs_diff(adjoint_k(a, order), a) <= 1e-13);
  }
}

TEST_CASE("adjoint entry formula at k=1") {
  // entry 1.7 e^{i 0.6} at (1,2,3); frozen from a long-double evaluation
  DenseTensor a{Shape{3, 3, 3}};
  a.at({1, 2, 3}) = std::polar(1.7, 0.6);
  const Complex got = adjoint_k(a, 1).at({2, 3, 1});
  CHECK(got.real() == doctest::Approx(0.96591576618822309864).epsilon(1e-14));
  CHECK(got.imag() == doctest::Approx(-0.2987927605514706535).epsilon(1e-14));
}

TEST_CASE("iterated adjoint disagrees with the direct formula") {
  DenseTensor a{Shape{2, 2, 2}};
  a.at({1, 2, 1}) = Complex{0.0, 1.0};
  const DenseTensor twice = adjoint_k(adjoint_k(a, 1), 1);
  const DenseTensor direct = adjoint_k(a, 2);
  CHECK(max_abs_diff(twice, direct) > 1e-3);
}

TEST_CASE("conformance verdicts") {
  const DenseTensor delta = kronecker(3, 2);
  const auto sym = conformance(delta, Conformance::Symmetric);
  CHECK(sym.ok);
  CHECK(sym.max_deviation == 0.0);
  const auto herm = conformance(delta, Conformance::Hermitian);
  CHECK(herm.ok);
  CHECK(herm.max_deviation == 0.0);

  DenseTensor off = delta;
  off.at({1, 2, 1}) = 0.5;
  CHECK_FALSE(conformance(off, Conformance::Symmetric).ok);

  CHECK_THROWS_AS(conformance(DenseTensor{Shape{2, 3, 2}},
                              Conformance::Symmetric),
                  ShapeError);
}

TEST_CASE("transpose rejects vectors") {
  CHECK_THROWS_AS(transpose_k(DenseTensor{Shape{4}}, 1), ShapeError);
  CHECK_THROWS_AS(adjoint_k(DenseTensor{Shape{4}}, 1), ShapeError);
}

TEST_CASE("json round trip is bit exact") {
  Rng rng(25);
  DenseTensor t = random_complex(Shape{2, 3}, rng);
  t.at({1, 1}) = Complex{0.1, 1e-300};
  t.at({1, 2}) = Complex{-0.0, 3.0};
  const DenseTensor back = tensor_from_json(tensor_to_json(t));
  REQUIRE(back.shape() == t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double re[2] = {t.flat()[i].real(), back.flat()[i].real()};
    const double im[2] = {t.flat()[i].imag(), back.flat()[i].imag()};
    CHECK(std::memcmp(&re[0], &re[1], sizeof(double)) == 0);
    CHECK(std::memcmp(&im[0], &im[1], sizeof(double)) == 0);
  }

  // real tensors omit the "im" block and read back as real
  const DenseTensor real_t = random_real(Shape{4}, rng);
  const std::string text = tensor_to_json(real_t);
  CHECK(text.find("\"im\"") == std::string::npos);
  CHECK(max_abs_diff(tensor_from_json(text), real_t) == 0.0);
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(tensor_from_json("{\"shape\":[2]}"), ShapeError);
  CHECK_THROWS_AS(tensor_from_json("{\"shape\":[2],\"re\":[1.0]}"),
                  ShapeError);
  CHECK_THROWS_AS(tensor_from_json("not json"), ShapeError);
}
