#include "audit.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tenspect/products.hpp"
#include "tenspect/rng.hpp"
#include "tenspect/special.hpp"
#include "tenspect/spectral.hpp"
#include "tenspect/tensor.hpp"

namespace tenspect::cli {

namespace {

struct Table {
  std::ostream& out;
  AuditOutcome outcome;

  void invariant(const std::string& name, double dev, double tol) {
    ++outcome.invariants;
    const bool ok = dev <= tol;
    if (!ok) ++outcome.invariant_failures;
    row("INVARIANT", name, dev, ok ? "PASS" : "FAIL");
  }
  void audit(const std::string& name, double dev, double tol) {
    ++outcome.audit_items;
    const bool ok = dev <= tol;
    if (!ok) ++outcome.audit_warnings;
    row("AUDIT", name, dev, ok ? "PASS" : "WARN");
  }
  void row(const char* kind, const std::string& name, double dev,
           const char* verdict) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-9s %-34s max_dev %.3e  %s", kind,
                  name.c_str(), dev, verdict);
    out << buf << '\n';
  }
};

DenseTensor random_cubic(Rng& rng, int side, bool complex_entries) {
  DenseTensor t{Shape{side, side, side}};
  for (auto& v : t.flat()) {
    v = complex_entries
            ? Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}
            : Complex{rng.uniform(-1.0, 1.0), 0.0};
  }
  return t;
}

}  // namespace

AuditOutcome run_audit(std::uint64_t seed, std::ostream& out) {
  out << "tenspect claims audit (seed " << seed << ")\n";
  Table table{out, {}};
  Rng rng(seed);

  {  // product of the p order-p conjugates collapses to |z|^p
    double dev = 0.0;
    for (int p = 2; p <= 6; ++p) {
      for (int i = 0; i < 1000; ++i) {
        const Complex z{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        Complex prod = 1.0;
        for (int j = 1; j <= p; ++j) prod *= order_conjugate(z, p, j);
        const double target = std::pow(std::abs(z), p);
        dev = std::max(dev,
                       std::abs(prod - target) / std::max(1.0, target));
      }
    }
    table.invariant("conjugate-product-law", dev, 1e-12);
  }

  {  // o(I, A, I^T2) = A
    double dev = 0.0;
    for (int side = 2; side <= 4; ++side) {
      const auto fam = identity_family(side);
      for (int i = 0; i < 20; ++i) {
        const DenseTensor a = random_cubic(rng, side, true);
        dev = std::max(dev,
                       max_abs_diff(ternary_product(fam.i, a, fam.i_t2), a));
      }
    }
    table.invariant("identity-sandwich", dev, 1e-12);
  }

  {  // transpose tower period and adjoint period
    double dev_t = 0.0, dev_a = 0.0;
    for (int order = 2; order <= 4; ++order) {
      DenseTensor a{Shape{std::vector<int>(order, 3)}};
      for (auto& v : a.flat()) {
        v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      }
      dev_t = std::max(dev_t, max_abs_diff(transpose_k(a, order), a));
      dev_a = std::max(dev_a, max_abs_diff(adjoint_k(a, order), a));
      dev_t = std::max(dev_t, max_abs_diff(transpose_k(transpose_k(a, 1), 1),
                                           transpose_k(a, 2)));
    }
    table.invariant("transpose-tower-period", dev_t, 0.0);
    table.invariant("adjoint-period", dev_a, 1e-13);
  }

  {  // [o(A,B,C)]^T = o(B^T, C^T, A^T) and the T^2 variant
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const DenseTensor a = random_cubic(rng, 3, true);
      const DenseTensor b = random_cubic(rng, 3, true);
      const DenseTensor c = random_cubic(rng, 3, true);
      const DenseTensor abc = ternary_product(a, b, c);
      dev = std::max(
          dev, max_abs_diff(transpose_k(abc, 1),
                            ternary_product(transpose_k(b, 1),
                                            transpose_k(c, 1),
                                            transpose_k(a, 1))));
      dev = std::max(
          dev, max_abs_diff(transpose_k(abc, 2),
                            ternary_product(transpose_k(c, 2),
                                            transpose_k(a, 2),
                                            transpose_k(b, 2))));
    }
    table.invariant("transpose-of-product", dev, 1e-12);
  }

  {  // product as a sum of slice outer products
    double dev = 0.0;
    for (int i = 0; i < 10; ++i) {
      const DenseTensor a = random_cubic(rng, 3, true);
      const DenseTensor b = random_cubic(rng, 3, true);
      const DenseTensor c = random_cubic(rng, 3, true);
      DenseTensor sum{Shape{3, 3, 3}};
      for (int t = 1; t <= 3; ++t) {
        DenseTensor at{Shape{3, 1, 3}}, bt{Shape{3, 3, 1}}, ct{Shape{1, 3, 3}};
        for (int x = 1; x <= 3; ++x) {
          for (int y = 1; y <= 3; ++y) {
            at.at({x, 1, y}) = a.at({x, t, y});
            bt.at({x, y, 1}) = b.at({x, y, t});
            ct.at({1, x, y}) = c.at({t, x, y});
          }
        }
        const std::array<DenseTensor, 3> ops{at, bt, ct};
        sum += outer_product(ops);
      }
      dev = std::max(dev, max_abs_diff(sum, ternary_product(a, b, c)));
    }
    table.invariant("outer-product-expansion", dev, 1e-12);
  }

  {  // weak distributivity
    double dev = 0.0;
    for (int i = 0; i < 10; ++i) {
      const DenseTensor a = random_cubic(rng, 3, true);
      const DenseTensor b = random_cubic(rng, 3, true);
      const DenseTensor c = random_cubic(rng, 3, true);
      const DenseTensor d = random_cubic(rng, 3, true);
      dev = std::max(dev, max_abs_diff(ternary_product(a + b, c, d),
                                       ternary_product(a, c, d) +
                                           ternary_product(b, c, d)));
    }
    table.invariant("weak-distributivity", dev, 1e-12);
  }

  {  // scaling action and the diagonal cube pattern
    double dev_scale = 0.0, dev_cube = 0.0, dev_diag = 0.0;
    for (int i = 0; i < 10; ++i) {
      const int l = 2 + static_cast<int>(rng.below(2));
      DenseTensor w{Shape{l, l}};
      for (int m = 1; m <= l; ++m) {
        for (int n = m; n <= l; ++n) {
          w.at({m, n}) = rng.uniform(-1.0, 1.0);
          w.at({n, m}) = w.at({m, n});
        }
      }
      const ScalingFamily fam(w, 3);
      const DenseTensor a = random_cubic(rng, l, true);
      const DenseTensor scaled =
          ternary_product(a, fam.members()[0], fam.members()[1]);
      for (int m = 1; m <= l; ++m)
        for (int n = 1; n <= l; ++n)
          for (int p = 1; p <= l; ++p)
            dev_scale = std::max(
                dev_scale,
                std::abs(scaled.at({m, n, p}) - w.at({m, n}) *
                                                    a.at({m, n, p}) *
                                                    w.at({n, p})));
      const auto triple = fam.diagonal_triple();
      const DenseTensor cube =
          ternary_product(triple[0], triple[1], triple[2]);
      for (int m = 1; m <= l; ++m)
        for (int n = 1; n <= l; ++n)
          for (int p = 1; p <= l; ++p) {
            const Complex expect =
                m == p ? std::pow(w.at({m, n}), 3) : Complex{0.0};
            dev_cube = std::max(dev_cube,
                                std::abs(cube.at({m, n, p}) - expect));
          }
      DenseTensor diag{Shape{l, l, l}};
      for (int m = 1; m <= l; ++m)
        for (int n = 1; n <= l; ++n) diag.at({m, n, n}) = w.at({m, n});
      dev_diag = std::max(dev_diag, diagonal_residual(diag));
    }
    table.invariant("scaling-action", dev_scale, 1e-12);
    table.invariant("diagonal-cube-pattern", dev_cube, 1e-12);
    table.invariant("diagonal-residual", dev_diag, 1e-12);
  }

  {  // o(A, A^T2, A^T) is symmetric
    double dev = 0.0;
    for (int i = 0; i < 10; ++i) {
      const DenseTensor a = random_cubic(rng, 3, i % 2 == 1);
      const DenseTensor b =
          ternary_product(a, transpose_k(a, 2), transpose_k(a, 1));
      dev = std::max(dev,
                     conformance(b, Conformance::Symmetric, 0.0).max_deviation);
    }
    table.invariant("self-product-symmetry", dev, 1e-12);
  }

  {  // inner-product positivity of <z, ..., z>
    double dev = 0.0;
    for (int i = 0; i < 200; ++i) {
      const int p = 2 + static_cast<int>(rng.below(4));
      DenseTensor z{Shape{3}};
      for (auto& v : z.flat()) {
        v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      }
      const std::vector<DenseTensor> copies(p, z);
      const Complex val = inner_p(copies);
      dev = std::max(dev, std::max(-val.real(), std::abs(val.imag())));
    }
    table.invariant("inner-product-positivity", dev, 1e-12);
  }

  {  // non-associativity witness must stay separated
    const DenseTensor a = random_cubic(rng, 2, false);
    const DenseTensor b = random_cubic(rng, 2, false);
    const DenseTensor c = random_cubic(rng, 2, false);
    const DenseTensor d = random_cubic(rng, 2, false);
    const DenseTensor e = random_cubic(rng, 2, false);
    const double gap = std::min(
        {max_abs_diff(ternary_product(ternary_product(a, b, c), d, e),
                      ternary_product(a, ternary_product(b, c, d), e)),
         max_abs_diff(ternary_product(a, ternary_product(b, c, d), e),
                      ternary_product(a, b, ternary_product(c, d, e))),
         max_abs_diff(ternary_product(ternary_product(a, b, c), d, e),
                      ternary_product(a, b, ternary_product(c, d, e)))});
    // inverted: the claim holds when the gap stays large
    table.invariant("non-associativity-witness", gap > 1e-6 ? 0.0 : 1.0, 0.5);
  }

  {  // permutation conjugation equals direct slice permutation on S_3
    const std::vector<Permutation> s3 = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1},
                                         {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
    DenseTensor a{Shape{3, 3, 3}};
    for (auto& v : a.flat()) {
      v = static_cast<double>(static_cast<int>(rng.below(9)) - 4);
    }
    double dev = 0.0;
    for (const auto& sigma : s3) {
      const Permutation inv = inverse(sigma);
      DenseTensor direct{a.shape()};
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          for (int k = 1; k <= 3; ++k)
            direct.at({i, j, k}) = a.at({i, j, inv[k - 1]});
      dev = std::max(dev, max_abs_diff(
                              slice_permute(a, sigma, SliceAxis::Depth),
                              direct));
    }
    table.invariant("permutation-representation", dev, 0.0);
  }

  // ---- audit items: paper claims checked empirically ----

  {  // hermicity of o(A, A^dag2, A^dag) for general complex A
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const DenseTensor a = random_cubic(rng, 3, true);
      const DenseTensor b =
          ternary_product(a, adjoint_k(a, 2), adjoint_k(a, 1));
      dev = std::max(dev,
                     conformance(b, Conformance::Hermitian, 0.0).max_deviation);
    }
    table.audit("adjoint-product-hermicity", dev, 1e-10);
  }

  {  // first-orthogonality expansion reproduces the printed index pattern
    double dev = 0.0;
    for (int i = 0; i < 10; ++i) {
      const DenseTensor q = random_cubic(rng, 3, true);
      const DenseTensor lhs =
          ternary_product(q, adjoint_k(q, 2), adjoint_k(q, 1));
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
          for (int p = 1; p <= 3; ++p) {
            Complex sum = 0.0;
            for (int k = 1; k <= 3; ++k) {
              sum += q.at({m, k, p}) *
                     order_conjugate(q.at({n, k, m}), 3, 2) *
                     order_conjugate(q.at({p, k, n}), 3, 1);
            }
            dev = std::max(dev, std::abs(lhs.at({m, n, p}) - sum));
          }
    }
    table.audit("first-orthogonality-pattern", dev, 1e-12);
  }

  {  // Kronecker invariance does not follow from first orthogonality
    const auto witness =
        orthogonality_residuals(permutation_tensor({2, 3, 1}));
    const bool holds = witness.first == 0.0 &&
                       witness.kronecker_invariance > 1e-6;
    table.audit("orthogonality-non-implication", holds ? 0.0 : 1.0, 0.5);
  }

  {  // triple dot with Delta background versus the tuple inner product
    double dev = 0.0;
    for (int i = 0; i < 50; ++i) {
      DenseTensor u{Shape{3}}, v{Shape{3}}, w{Shape{3}};
      for (auto* vec : {&u, &v, &w}) {
        for (auto& x : vec->flat()) {
          x = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        }
      }
      const Complex lhs = bg_triple_dot(u, v, w, kronecker(3, 3));
      const Complex rhs = inner_p(std::array{u, v, w});
      dev = std::max(dev, std::abs(lhs - rhs));
    }
    table.audit("delta-background-vs-inner", dev, 1e-12);
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "RESULT %s (%d invariants, %d failed; %d audit items, %d "
                "warned)",
                table.outcome.invariant_failures == 0 ? "PASS" : "FAIL",
                table.outcome.invariants, table.outcome.invariant_failures,
                table.outcome.audit_items, table.outcome.audit_warnings);
  out << buf << '\n';
  return table.outcome;
}

}  // namespace tenspect::cli
