#include "tenspect/char_ideal.hpp"

#include <stdexcept>
#include <string>

namespace tenspect {

namespace {

std::string qn(const std::string& base, std::initializer_list<int> idx) {
  std::string s = base;
  bool first = true;
  for (int i : idx) {
    if (!first) s += '_';
    first = false;
    s += std::to_string(i);
  }
  return s;
}

}  // namespace

bool RationalMatrix::symmetric() const {
  for (int i = 1; i <= side_; ++i) {
    for (int j = i + 1; j <= side_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

CharIdeal matrix_char_ideal(const RationalMatrix& a) {
  if (!a.symmetric()) {
    throw std::invalid_argument("matrix ideal: matrix must be symmetric");
  }
  const int l = a.side();
  std::vector<std::string> names;
  for (int k = 1; k <= l; ++k) {
    for (int m = 1; m <= l; ++m) names.push_back(qn("q", {k, m}));
  }
  for (int k = 1; k <= l; ++k) {
    for (int m = 1; m <= l; ++m) names.push_back(qn("r", {k, m}));
  }
  for (int k = 1; k <= l; ++k) names.push_back("l" + std::to_string(k));
  auto reg = std::make_shared<const VarRegistry>(std::move(names));

  auto var = [&](const std::string& name) {
    return MultiPoly::variable(reg, reg->index_of(name));
  };

  CharIdeal ideal;
  ideal.registry = reg;
  // Full index range: restricting to m <= n leaves lambda_l free on the
  // solution variety (three of the four entries of Q^T R pinned is not
  // enough), and the elimination ideal collapses to zero. The full range is
  // the ideal the existence proof actually works with.
  for (int m = 1; m <= l; ++m) {
    for (int n = 1; n <= l; ++n) {
      MultiPoly spectral{reg};
      MultiPoly ortho{reg};
      for (int k = 1; k <= l; ++k) {
        const MultiPoly qr = var(qn("q", {k, m})) * var(qn("r", {k, n}));
        spectral += var("l" + std::to_string(k)) * qr;
        ortho += qr;
      }
      spectral -= MultiPoly::constant(reg, a.at(m, n));
      ortho -= MultiPoly::constant(reg, m == n ? 1 : 0);
      ideal.generators.push_back(std::move(spectral));
      ideal.generators.push_back(std::move(ortho));
    }
  }
  return ideal;
}

CharIdeal tensor3_char_ideal(const RationalTensor3& a) {
  const int l = a.side();
  if (l > 2) {
    throw std::invalid_argument(
        "tensor ideal: sides above 2 are rejected (combinatorial blow-up)");
  }
  std::vector<std::string> names;
  for (const char* base : {"q", "r", "s"}) {
    for (int m = 1; m <= l; ++m) {
      for (int k = 1; k <= l; ++k) {
        for (int p = 1; p <= l; ++p) names.push_back(qn(base, {m, k, p}));
      }
    }
  }
  for (const char* base : {"d", "e", "f"}) {
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) names.push_back(qn(base, {i, j}));
    }
  }
  auto reg = std::make_shared<const VarRegistry>(std::move(names));
  auto var = [&](const std::string& name) {
    return MultiPoly::variable(reg, reg->index_of(name));
  };

  CharIdeal ideal;
  ideal.registry = reg;
  for (int m = 1; m <= l; ++m) {
    for (int n = m; n <= l; ++n) {
      for (int p = n; p <= l; ++p) {
        MultiPoly spectral{reg};
        MultiPoly ortho{reg};
        for (int k = 1; k <= l; ++k) {
          const MultiPoly qrs = var(qn("q", {m, k, p})) *
                                var(qn("r", {n, k, m})) *
                                var(qn("s", {p, k, n}));
          spectral += var(qn("d", {m, k})) * var(qn("d", {k, p})) *
                      var(qn("e", {n, k})) * var(qn("e", {k, m})) *
                      var(qn("f", {p, k})) * var(qn("f", {k, n})) * qrs;
          ortho += qrs;
        }
        spectral -= MultiPoly::constant(reg, a.at(m, n, p));
        ortho -= MultiPoly::constant(reg, (m == n && n == p) ? 1 : 0);
        ideal.generators.push_back(std::move(spectral));
        ideal.generators.push_back(std::move(ortho));
      }
    }
  }
  return ideal;
}

std::vector<std::string> matrix_eliminated_keep(int side) {
  return {"l" + std::to_string(side)};
}

std::vector<std::string> tensor3_scaling_keep(int side) {
  std::vector<std::string> keep;
  for (const char* base : {"d", "e", "f"}) {
    for (int i = 1; i <= side; ++i) {
      for (int j = 1; j <= side; ++j) keep.push_back(qn(base, {i, j}));
    }
  }
  return keep;
}

}  // namespace tenspect
