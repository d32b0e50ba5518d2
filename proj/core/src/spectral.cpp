#include "tenspect/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "tenspect/errors.hpp"
#include "tenspect/products.hpp"
#include "tenspect/rng.hpp"
#include "tenspect/special.hpp"

namespace tenspect {

namespace {

void require_cubic3(const DenseTensor& a, const char* who) {
  if (a.order() != 3 || !a.shape().cubic()) {
    throw ShapeError(std::string(who) + ": tensor must be cubic order 3, got " +
                     a.shape().str());
  }
}

void gate_norm(double norm, const char* who) {
  if (norm <= 1e-12) {
    throw NormZeroError(std::string(who) + ": norm is zero");
  }
  if (std::abs(norm - 1.0) <= 1e-12) {
    throw NormOneError(std::string(who) +
                       ": norm 1 violates the theorem hypothesis");
  }
}

Eigen::MatrixXcd to_eigen(const DenseTensor& m) {
  Eigen::MatrixXcd out(m.dim(1), m.dim(2));
  for (int i = 1; i <= m.dim(1); ++i) {
    for (int j = 1; j <= m.dim(2); ++j) out(i - 1, j - 1) = m.at({i, j});
  }
  return out;
}

DenseTensor from_eigen(const Eigen::MatrixXcd& m) {
  DenseTensor out{Shape{static_cast<int>(m.rows()), static_cast<int>(m.cols())}};
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out.at({i + 1, j + 1}) = m(i, j);
  }
  return out;
}

}  // namespace

std::pair<double, double> spectral_residual3(const DenseTensor& a,
                                             const SpectralCandidate3& c) {
  require_cubic3(a, "spectral residual");
  const int l = a.dim(1);
  if (c.side() != l) {
    throw ShapeError("spectral residual: candidate side does not match");
  }
  double res_a = 0.0, res_d = 0.0;
  for (int m = 1; m <= l; ++m) {
    for (int n = 1; n <= l; ++n) {
      for (int p = 1; p <= l; ++p) {
        Complex sum_a = 0.0, sum_d = 0.0;
        for (int k = 1; k <= l; ++k) {
          const Complex qa =
              c.mu.at({m, k}) * c.q.at({m, k, p}) * c.mu.at({k, p});
          const Complex rb =
              c.nu.at({n, k}) * c.r.at({n, k, m}) * c.nu.at({k, m});
          const Complex sc =
              c.xi.at({p, k}) * c.s.at({p, k, n}) * c.xi.at({k, n});
          sum_a += qa * order_conjugate(rb, 3, 2) * order_conjugate(sc, 3, 1);
          sum_d += c.q.at({m, k, p}) *
                   order_conjugate(c.r.at({n, k, m}), 3, 2) *
                   order_conjugate(c.s.at({p, k, n}), 3, 1);
        }
        const double delta = (m == n && n == p) ? 1.0 : 0.0;
        res_a = std::max(res_a, std::abs(sum_a - a.at({m, n, p})));
        res_d = std::max(res_d, std::abs(sum_d - delta));
      }
    }
  }
  return {res_a, res_d};
}

namespace {

// Real-arithmetic view of the system used inside the solver; valid on the
// nonnegative orthant where the order-3 conjugates act as the identity.
class RealSystem {
 public:
  RealSystem(const DenseTensor& a) : l_(a.dim(1)), a_re_(a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a_re_[i] = a.flat()[i].real();
    }
  }

  int side() const { return l_; }
  int nvars() const { return 3 * l_ * l_ * l_ + 3 * l_ * l_; }
  int nres() const { return 2 * l_ * l_ * l_; }

  int q_off() const { return 0; }
  int r_off() const { return l_ * l_ * l_; }
  int s_off() const { return 2 * l_ * l_ * l_; }
  int mu_off() const { return 3 * l_ * l_ * l_; }
  int nu_off() const { return mu_off() + l_ * l_; }
  int xi_off() const { return nu_off() + l_ * l_; }

  int i3(int m, int k, int p) const {
    return ((m - 1) * l_ + (k - 1)) * l_ + (p - 1);
  }
  int i2(int i, int j) const { return (i - 1) * l_ + (j - 1); }

  void residual(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const int l = l_;
    const int l3 = l * l * l;
    for (int m = 1; m <= l; ++m) {
      for (int n = 1; n <= l; ++n) {
        for (int p = 1; p <= l; ++p) {
          double sum_a = 0.0, sum_d = 0.0;
          for (int k = 1; k <= l; ++k) {
            const double q = x[q_off() + i3(m, k, p)];
            const double r = x[r_off() + i3(n, k, m)];
            const double s = x[s_off() + i3(p, k, n)];
            const double qa =
                x[mu_off() + i2(m, k)] * q * x[mu_off() + i2(k, p)];
            const double rb =
                x[nu_off() + i2(n, k)] * r * x[nu_off() + i2(k, m)];
            const double sc =
                x[xi_off() + i2(p, k)] * s * x[xi_off() + i2(k, n)];
            sum_a += qa * rb * sc;
            sum_d += q * r * s;
          }
          const int e = i3(m, n, p);
          const double delta = (m == n && n == p) ? 1.0 : 0.0;
          f[e] = sum_a - a_re_[e];
          f[l3 + e] = sum_d - delta;
        }
      }
    }
  }

  std::pair<double, double> block_max(const Eigen::VectorXd& f) const {
    const int l3 = l_ * l_ * l_;
    double ma = 0.0, md = 0.0;
    for (int i = 0; i < l3; ++i) ma = std::max(ma, std::abs(f[i]));
    for (int i = 0; i < l3; ++i) md = std::max(md, std::abs(f[l3 + i]));
    return {ma, md};
  }

 private:
  int l_;
  std::vector<double> a_re_;
};

SpectralCandidate3 unpack_candidate(const RealSystem& sys,
                                    const Eigen::VectorXd& x) {
  const int l = sys.side();
  SpectralCandidate3 c;
  c.q = DenseTensor{Shape{l, l, l}};
  c.r = DenseTensor{Shape{l, l, l}};
  c.s = DenseTensor{Shape{l, l, l}};
  c.mu = DenseTensor{Shape{l, l}};
  c.nu = DenseTensor{Shape{l, l}};
  c.xi = DenseTensor{Shape{l, l}};
  for (int i = 0; i < l * l * l; ++i) {
    c.q.flat()[i] = x[sys.q_off() + i];
    c.r.flat()[i] = x[sys.r_off() + i];
    c.s.flat()[i] = x[sys.s_off() + i];
  }
  for (int i = 0; i < l * l; ++i) {
    c.mu.flat()[i] = x[sys.mu_off() + i];
    c.nu.flat()[i] = x[sys.nu_off() + i];
    c.xi.flat()[i] = x[sys.xi_off() + i];
  }
  return c;
}

}  // namespace

SolveReport solve_spectral3(const DenseTensor& a, const SolveConfig& config) {
  require_cubic3(a, "spectral solve");
  gate_norm(lp_norm(a, 3), "spectral solve");

  const RealSystem sys(a);
  const int nv = sys.nvars();
  const int nr = sys.nres();
  const double fd_step = 1e-7;

  Rng rng(config.seed);
  SolveReport best;
  double best_key = -1.0;
  int best_restart = -1;

  for (int restart = 0; restart < std::max(1, config.restarts); ++restart) {
    Eigen::VectorXd x(nv);
    for (int i = 0; i < nv; ++i) x[i] = rng.uniform();

    Eigen::VectorXd f(nr), f_try(nr), f_pert(nr);
    sys.residual(x, f);
    double cost = 0.5 * f.squaredNorm();
    double lambda = 1e-3;
    Eigen::MatrixXd jac(nr, nv);
    int iter = 0;
    bool converged = false;

    for (; iter < config.max_iter; ++iter) {
      auto [ma, md] = sys.block_max(f);
      if (ma <= config.tol && md <= config.tol) {
        converged = true;
        break;
      }
      for (int j = 0; j < nv; ++j) {
        Eigen::VectorXd xp = x;
        xp[j] += fd_step;
        sys.residual(xp, f_pert);
        jac.col(j) = (f_pert - f) / fd_step;
      }
      const Eigen::MatrixXd h = jac.transpose() * jac;
      const Eigen::VectorXd g = jac.transpose() * f;

      bool accepted = false;
      for (int attempt = 0; attempt < 24; ++attempt) {
        Eigen::MatrixXd damped = h;
        damped.diagonal() += lambda * h.diagonal().cwiseMax(1e-8);
        const Eigen::VectorXd step = damped.ldlt().solve(-g);
        const Eigen::VectorXd x_try = (x + step).cwiseMax(0.0);
        sys.residual(x_try, f_try);
        const double cost_try = 0.5 * f_try.squaredNorm();
        if (cost_try < cost) {
          x = x_try;
          f = f_try;
          cost = cost_try;
          lambda = std::max(lambda * 0.3, 1e-12);
          accepted = true;
          break;
        }
        lambda = std::min(lambda * 4.0, 1e12);
      }
      if (!accepted) break;  // stalled
    }

    auto [ma, md] = sys.block_max(f);
    const double key = std::max(ma, md);
    if (best_restart < 0 || key < best_key) {
      best_key = key;
      best_restart = restart;
      best.candidate = unpack_candidate(sys, x);
      best.iterations = iter;
      best.converged = converged;
    }
  }

  best.seed = config.seed;
  std::tie(best.residual_a, best.residual_delta) =
      spectral_residual3(a, best.candidate);
  best.converged = best.residual_a <= config.tol &&
                   best.residual_delta <= config.tol;
  return best;
}

MatrixSpectral matrix_spectral_oracle(const DenseTensor& a) {
  if (a.order() != 2 || a.dim(1) != a.dim(2)) {
    throw ShapeError("matrix oracle: input must be a square matrix");
  }
  const int l = a.dim(1);
  double herm_dev = 0.0;
  for (int m = 1; m <= l; ++m) {
    for (int n = 1; n <= l; ++n) {
      herm_dev = std::max(herm_dev,
                          std::abs(a.at({m, n}) - std::conj(a.at({n, m}))));
    }
  }
  if (herm_dev > 1e-12 * std::max(1.0, max_abs(a))) {
    throw ShapeError("matrix oracle: input is not hermitian");
  }
  gate_norm(lp_norm(a, 2), "matrix oracle");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a));
  if (es.info() != Eigen::Success) {
    throw EigenSolveError("matrix oracle: eigendecomposition failed");
  }

  MatrixSpectral out;
  out.q = DenseTensor{Shape{l, l}};
  out.r = DenseTensor{Shape{l, l}};
  out.mu.resize(l);
  out.nu.resize(l);
  out.eigenvalues.resize(l);
  for (int k = 0; k < l; ++k) {
    const double lam = es.eigenvalues()[k];
    out.eigenvalues[k] = lam;
    const Complex root = std::sqrt(Complex(lam, 0.0));
    out.nu[k] = root;
    out.mu[k] = std::conj(root);  // conj(mu_k) * nu_k = lambda_k
    for (int m = 0; m < l; ++m) {
      const Complex v = es.eigenvectors()(m, k);
      out.q.at({k + 1, m + 1}) = std::conj(v);
      out.r.at({k + 1, m + 1}) = std::conj(v);
    }
  }

  for (int m = 1; m <= l; ++m) {
    for (int n = 1; n <= l; ++n) {
      Complex sum_a = 0.0, sum_d = 0.0;
      for (int k = 0; k < l; ++k) {
        const Complex q = out.q.at({k + 1, m});
        const Complex r = out.r.at({k + 1, n});
        sum_a += std::conj(out.mu[k] * q) * (out.nu[k] * r);
        sum_d += std::conj(q) * r;
      }
      out.residual_a =
          std::max(out.residual_a, std::abs(sum_a - a.at({m, n})));
      out.residual_delta = std::max(
          out.residual_delta, std::abs(sum_d - (m == n ? 1.0 : 0.0)));
    }
  }
  return out;
}

ScaledFactors scaled_factors(const SpectralCandidate3& c) {
  const int l = c.side();
  ScaledFactors f{c.q, c.r, c.s};
  auto scale = [l](DenseTensor& t, const DenseTensor& w) {
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) {
        for (int k = 1; k <= l; ++k) {
          t.at({i, j, k}) *= w.at({i, j}) * w.at({j, k});
        }
      }
    }
  };
  scale(f.q, c.mu);
  scale(f.r, c.nu);
  scale(f.s, c.xi);
  return f;
}

std::vector<DenseTensor> eigen_matrices(const DenseTensor& scaled) {
  require_cubic3(scaled, "eigen matrices");
  const int l = scaled.dim(1);
  std::vector<DenseTensor> slices;
  for (int k = 1; k <= l; ++k) {
    DenseTensor m{Shape{l, l}};
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) m.at({i, j}) = scaled.at({i, k, j});
    }
    slices.push_back(std::move(m));
  }
  return slices;
}

DenseTensor outer_reconstruct(const ScaledFactors& f) {
  require_cubic3(f.q, "outer reconstruct");
  const int l = f.q.dim(1);
  if (f.r.dim(1) != l || f.s.dim(1) != l || !f.r.shape().cubic() ||
      !f.s.shape().cubic()) {
    throw ShapeError("outer reconstruct: factor sides do not match");
  }
  DenseTensor sum{Shape{l, l, l}};
  for (int k = 1; k <= l; ++k) {
    DenseTensor qa{Shape{l, 1, l}}, rb{Shape{l, l, 1}}, sc{Shape{1, l, l}};
    for (int m = 1; m <= l; ++m) {
      for (int p = 1; p <= l; ++p) qa.at({m, 1, p}) = f.q.at({m, k, p});
    }
    for (int m = 1; m <= l; ++m) {
      for (int n = 1; n <= l; ++n) {
        rb.at({m, n, 1}) = order_conjugate(f.r.at({n, k, m}), 3, 2);
      }
    }
    for (int n = 1; n <= l; ++n) {
      for (int p = 1; p <= l; ++p) {
        sc.at({1, n, p}) = order_conjugate(f.s.at({p, k, n}), 3, 1);
      }
    }
    const DenseTensor term[] = {qa, rb, sc};
    sum += outer_product(term);
  }
  return sum;
}

std::pair<double, double> spectral_residual_n(
    const DenseTensor& a, std::span<const DenseTensor> factors,
    std::span<const DenseTensor> scaled) {
  const int n = a.order();
  if (!a.shape().cubic()) {
    throw ShapeError("spectral residual: tensor must be cubic");
  }
  if (static_cast<int>(factors.size()) != n ||
      static_cast<int>(scaled.size()) != n) {
    throw ShapeError("spectral residual: need one factor per order");
  }
  std::vector<DenseTensor> delta_ops, a_ops;
  for (int t = 1; t <= n; ++t) {
    delta_ops.push_back(adjoint_k(factors[t - 1], n + 1 - t));
    a_ops.push_back(adjoint_k(scaled[t - 1], n + 1 - t));
  }
  const double rd =
      max_abs_diff(nary_product(delta_ops), kronecker(n, a.dim(1)));
  const double ra = max_abs_diff(nary_product(a_ops), a);
  return {ra, rd};
}

GeneralMatrixSpectral general_matrix_spectral(const DenseTensor& m) {
  if (m.order() != 2 || m.dim(1) != m.dim(2)) {
    throw ShapeError("matrix spectral: input must be a square matrix");
  }
  const int l = m.dim(1);
  const Eigen::MatrixXcd a = to_eigen(m);

  GeneralMatrixSpectral out;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a);
  if (es.info() != Eigen::Success) {
    throw EigenSolveError("matrix spectral: eigendecomposition failed");
  }
  const Eigen::MatrixXcd v = es.eigenvectors();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  if (!lu.isInvertible()) {
    out.diagonalizable = false;
    return out;
  }
  const Eigen::MatrixXcd vinv = lu.inverse();

  Eigen::MatrixXcd right(l, l), left(l, l);
  for (int k = 0; k < l; ++k) {
    const Complex root = std::sqrt(es.eigenvalues()[k]);
    right.col(k) = root * v.col(k);
    left.col(k) = root * vinv.row(k).transpose();
  }
  const double res = (right * left.transpose() - a).cwiseAbs().maxCoeff();
  if (!(res <= 1e-8 * std::max(1.0, a.cwiseAbs().maxCoeff()))) {
    // numerically defective: eigenvector basis too ill-conditioned
    out.diagonalizable = false;
    return out;
  }

  out.diagonalizable = true;
  out.eigenvalues.assign(es.eigenvalues().data(),
                         es.eigenvalues().data() + l);
  out.right_scaled = from_eigen(right);
  out.left_scaled = from_eigen(left);
  out.residual = res;
  return out;
}

namespace {

HierarchyNode matrix_node(const DenseTensor& m) {
  HierarchyNode node;
  node.level_order = 2;
  const GeneralMatrixSpectral spec = general_matrix_spectral(m);
  if (!spec.diagonalizable) {
    node.truncated = true;
    node.scaled_factors = {m};
    return node;
  }
  node.scaled_factors = {spec.right_scaled, spec.left_scaled};
  node.eigenvalues = spec.eigenvalues;
  node.residual = spec.residual;
  return node;
}

}  // namespace

HierarchyNode spectral_hierarchy(const DenseTensor& a,
                                 const SolveConfig& config) {
  if (a.order() == 2) {
    if (a.dim(1) != a.dim(2)) {
      throw ShapeError("hierarchy: matrix input must be square");
    }
    return matrix_node(a);
  }
  if (a.order() != 3) {
    throw ShapeError(
        "hierarchy: solving is implemented for orders 2 and 3 only");
  }
  const SolveReport report = solve_spectral3(a, config);
  const ScaledFactors f = scaled_factors(report.candidate);

  HierarchyNode node;
  node.level_order = 3;
  node.scaled_factors = {f.q, f.r, f.s};
  node.residual = std::max(report.residual_a, report.residual_delta);
  for (const DenseTensor* factor : {&f.q, &f.r, &f.s}) {
    for (const DenseTensor& slice : eigen_matrices(*factor)) {
      node.children.push_back(matrix_node(slice));
      node.truncated |= node.children.back().truncated;
    }
  }
  return node;
}

DenseTensor hierarchy_reconstruct(const HierarchyNode& node) {
  if (node.level_order == 2) {
    if (node.truncated) return node.scaled_factors.at(0);
    const DenseTensor& u = node.scaled_factors.at(0);
    const DenseTensor& w = node.scaled_factors.at(1);
    const int l = u.dim(1);
    DenseTensor m{Shape{l, l}};
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) {
        Complex sum = 0.0;
        for (int k = 1; k <= l; ++k) sum += u.at({i, k}) * w.at({j, k});
        m.at({i, j}) = sum;
      }
    }
    return m;
  }

  const int l = node.scaled_factors.at(0).dim(1);
  if (static_cast<int>(node.children.size()) != 3 * l) {
    throw ShapeError("hierarchy reconstruct: malformed node");
  }
  ScaledFactors f{DenseTensor{Shape{l, l, l}}, DenseTensor{Shape{l, l, l}},
                  DenseTensor{Shape{l, l, l}}};
  for (int k = 1; k <= l; ++k) {
    const DenseTensor qk = hierarchy_reconstruct(node.children[k - 1]);
    const DenseTensor rk = hierarchy_reconstruct(node.children[l + k - 1]);
    const DenseTensor sk = hierarchy_reconstruct(node.children[2 * l + k - 1]);
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) {
        f.q.at({i, k, j}) = qk.at({i, j});
        f.r.at({i, k, j}) = rk.at({i, j});
        f.s.at({i, k, j}) = sk.at({i, j});
      }
    }
  }
  return outer_reconstruct(f);
}

DenseTensor hermitian_generator(int side, std::uint64_t seed) {
  if (side < 1) throw ShapeError("hermitian generator: side must be >= 1");
  DenseTensor t{Shape{side, side, side}};
  Rng rng(seed);
  std::vector<int> idx(3, 1);
  do {
    // canonical orbit representative: lexicographic minimum of the cycle
    const int u = idx[0], v = idx[1], w = idx[2];
    const std::vector<int> rot1 = {v, w, u};
    const std::vector<int> rot2 = {w, u, v};
    if (idx <= rot1 && idx <= rot2) {
      const double value = rng.uniform(0.1, 1.1);
      t.at(idx) = value;
      t.at(rot1) = value;
      t.at(rot2) = value;
    }
  } while (advance_index(idx, t.shape()));
  if (std::abs(lp_norm(t, 3) - 1.0) <= 1e-6) t *= 2.0;
  return t;
}

PlantedInstance plant_spectral3(int side, std::uint64_t seed) {
  const int l = side;
  Rng rng(seed);
  SpectralCandidate3 c;
  c.q = DenseTensor{Shape{l, l, l}};
  c.r = DenseTensor{Shape{l, l, l}};
  c.s = DenseTensor{Shape{l, l, l}};
  c.mu = DenseTensor{Shape{l, l}};
  c.nu = DenseTensor{Shape{l, l}};
  c.xi = DenseTensor{Shape{l, l}};

  // Concentrated factor patterns keep the delta block exact by construction:
  // q_{m,k,p} nonzero only at k = p, r_{n,k,m} at k = m, s_{p,k,n} at k = n,
  // with the diagonal products normalized to one.
  DenseTensor alpha{Shape{l, l}}, beta{Shape{l, l}}, gamma{Shape{l, l}};
  for (auto* m : {&alpha, &beta, &gamma}) {
    for (auto& v : m->flat()) v = rng.uniform(0.5, 1.5);
  }
  for (int m = 1; m <= l; ++m) {
    gamma.at({m, m}) = 1.0 / (alpha.at({m, m}) * beta.at({m, m})).real();
  }
  for (int m = 1; m <= l; ++m) {
    for (int p = 1; p <= l; ++p) {
      c.q.at({m, p, p}) = alpha.at({m, p});
      c.r.at({m, p, p}) = beta.at({m, p});
      c.s.at({m, p, p}) = gamma.at({m, p});
    }
  }
  for (auto* m : {&c.mu, &c.nu, &c.xi}) {
    for (auto& v : m->flat()) v = rng.uniform(0.5, 1.5);
  }

  PlantedInstance inst;
  inst.candidate = c;
  inst.a = outer_reconstruct(scaled_factors(c));
  if (std::abs(lp_norm(inst.a, 3) - 1.0) <= 1e-3) {
    c.mu *= 2.0;
    inst.candidate = c;
    inst.a = outer_reconstruct(scaled_factors(c));
  }
  return inst;
}

}  // namespace tenspect
