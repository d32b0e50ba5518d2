#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "audit.hpp"
#include "tenspect/char_ideal.hpp"
#include "tenspect/errors.hpp"
#include "tenspect/groebner.hpp"
#include "tenspect/products.hpp"
#include "tenspect/special.hpp"
#include "tenspect/spectral.hpp"
#include "tenspect/tensor_io.hpp"
#include "tenspect/tucker.hpp"

using namespace tenspect;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResourceLimit = 3;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_complex(Complex v) {
  return "(" + fmt_double(v.real()) + ", " + fmt_double(v.imag()) + ")";
}

Permutation parse_sigma(const std::string& text) {
  Permutation sigma;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) sigma.push_back(std::stoi(item));
  validate_permutation(sigma);
  return sigma;
}

json tensor_json(const DenseTensor& t) {
  return json::parse(tensor_to_json(t));
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump() << '\n';
}

json candidate_json(const SpectralCandidate3& c) {
  json j;
  j["q"] = tensor_json(c.q);
  j["r"] = tensor_json(c.r);
  j["s"] = tensor_json(c.s);
  j["mu"] = tensor_json(c.mu);
  j["nu"] = tensor_json(c.nu);
  j["xi"] = tensor_json(c.xi);
  return j;
}

SpectralCandidate3 candidate_from_json(const json& j) {
  SpectralCandidate3 c;
  c.q = tensor_from_json(j.at("q").dump());
  c.r = tensor_from_json(j.at("r").dump());
  c.s = tensor_from_json(j.at("s").dump());
  c.mu = tensor_from_json(j.at("mu").dump());
  c.nu = tensor_from_json(j.at("nu").dump());
  c.xi = tensor_from_json(j.at("xi").dump());
  return c;
}

json eigenvalue_list(const std::vector<Complex>& vals) {
  json arr = json::array();
  for (const auto& v : vals) arr.push_back({v.real(), v.imag()});
  return arr;
}

json hierarchy_json(const HierarchyNode& node) {
  json j;
  j["level_order"] = node.level_order;
  j["truncated"] = node.truncated;
  j["residual"] = node.residual;
  j["eigenvalues"] = eigenvalue_list(node.eigenvalues);
  j["scaled_factors"] = json::array();
  for (const auto& f : node.scaled_factors) {
    j["scaled_factors"].push_back(tensor_json(f));
  }
  j["children"] = json::array();
  for (const auto& child : node.children) {
    j["children"].push_back(hierarchy_json(child));
  }
  return j;
}

RationalMatrix rational_matrix_from(const DenseTensor& t) {
  if (t.order() != 2 || t.dim(1) != t.dim(2)) {
    throw ShapeError("charpoly: input must be a square matrix");
  }
  if (!t.is_real()) {
    throw ShapeError("charpoly: input must be real");
  }
  RationalMatrix a(t.dim(1));
  for (int i = 1; i <= t.dim(1); ++i) {
    for (int j = 1; j <= t.dim(2); ++j) {
      a.at(i, j) = mpq_class(t.at({i, j}).real());
    }
  }
  return a;
}

RationalTensor3 rational_tensor_from(const DenseTensor& t) {
  if (t.order() != 3 || !t.shape().cubic()) {
    throw ShapeError("charpoly: input must be a cubic 3-tensor");
  }
  if (!t.is_real()) {
    throw ShapeError("charpoly: input must be real");
  }
  RationalTensor3 a(t.dim(1));
  for (int m = 1; m <= t.dim(1); ++m)
    for (int n = 1; n <= t.dim(1); ++n)
      for (int p = 1; p <= t.dim(1); ++p)
        a.at(m, n, p) = mpq_class(t.at({m, n, p}).real());
  return a;
}

std::string stem_of(const std::string& path) {
  const auto dot = path.rfind('.');
  return dot == std::string::npos ? path : path.substr(0, dot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized tensor algebra and spectral decomposition"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate special tensors");
  gen->require_subcommand(1);
  {
    auto* cmd = gen->add_subcommand("kronecker", "Kronecker delta n-tensor");
    auto order = std::make_shared<int>(3);
    auto side = std::make_shared<int>(2);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--order", *order);
    cmd->add_option("--side", *side);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      save_tensor(*out, kronecker(*order, *side));
    });
  }
  {
    auto* cmd = gen->add_subcommand("identity", "identity tensor I^(T^k)");
    auto side = std::make_shared<int>(2);
    auto power = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--side", *side);
    cmd->add_option("--power", *power)->check(CLI::Range(0, 2));
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      const auto fam = identity_family(*side);
      const DenseTensor& t =
          *power == 0 ? fam.i : (*power == 1 ? fam.i_t : fam.i_t2);
      save_tensor(*out, t);
    });
  }
  {
    auto* cmd = gen->add_subcommand("permutation", "permutation tensor");
    auto sigma = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--sigma", *sigma, "one-line notation, e.g. 2,1,3")
        ->required();
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      save_tensor(*out, permutation_tensor(parse_sigma(*sigma)));
    });
  }
  {
    auto* cmd = gen->add_subcommand("scaling", "scaling tensor family");
    auto w_path = std::make_shared<std::string>();
    auto order = std::make_shared<int>(3);
    auto prefix = std::make_shared<std::string>();
    auto triple = std::make_shared<bool>(false);
    cmd->add_option("--w", *w_path, "symmetric matrix W (tensor json)")
        ->required();
    cmd->add_option("--order", *order);
    cmd->add_option("--out-prefix", *prefix)->required();
    cmd->add_flag("--triple", *triple,
                  "emit the order-3 diagonal triple instead of the members");
    cmd->callback([=]() {
      const ScalingFamily fam(load_tensor(*w_path), *order);
      if (*triple) {
        const auto abc = fam.diagonal_triple();
        save_tensor(*prefix + "_a.json", abc[0]);
        save_tensor(*prefix + "_b.json", abc[1]);
        save_tensor(*prefix + "_c.json", abc[2]);
      } else {
        for (std::size_t i = 0; i < fam.members().size(); ++i) {
          save_tensor(*prefix + "_s" + std::to_string(i + 1) + ".json",
                      fam.members()[i]);
        }
      }
    });
  }
  {
    auto* cmd = gen->add_subcommand("hermitian", "random hermitian 3-tensor");
    auto side = std::make_shared<int>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--side", *side);
    cmd->add_option("--seed", *seed);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      save_tensor(*out, hermitian_generator(*side, *seed));
    });
  }
  {
    auto* cmd = gen->add_subcommand(
        "planted", "instance with a known exactly-solving candidate");
    auto side = std::make_shared<int>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto tensor_out = std::make_shared<std::string>();
    auto cand_out = std::make_shared<std::string>();
    cmd->add_option("--side", *side);
    cmd->add_option("--seed", *seed);
    cmd->add_option("--tensor", *tensor_out)->required();
    cmd->add_option("--candidate", *cand_out)->required();
    cmd->callback([=]() {
      const PlantedInstance inst = plant_spectral3(*side, *seed);
      save_tensor(*tensor_out, inst.a);
      write_json(*cand_out, candidate_json(inst.candidate));
    });
  }

  // ---- product ------------------------------------------------------
  auto* product = app.add_subcommand("product", "tensor products");
  product->require_subcommand(1);
  {
    auto* cmd = product->add_subcommand("ternary", "o(A, B, C)");
    auto paths = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("inputs", *paths)->expected(3);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      save_tensor(*out, ternary_product(load_tensor((*paths)[0]),
                                        load_tensor((*paths)[1]),
                                        load_tensor((*paths)[2])));
    });
  }
  {
    auto* cmd = product->add_subcommand("nary", "n-ary product");
    auto paths = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("inputs", *paths)->expected(-2);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      std::vector<DenseTensor> ops;
      for (const auto& p : *paths) ops.push_back(load_tensor(p));
      save_tensor(*out, nary_product(ops));
    });
  }
  {
    auto* cmd = product->add_subcommand(
        "action", "actor tensor applied to embedded operands");
    auto actor = std::make_shared<std::string>();
    auto paths = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("actor", *actor)->required();
    cmd->add_option("operands", *paths)->expected(-1);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      std::vector<DenseTensor> ops;
      for (const auto& p : *paths) ops.push_back(load_tensor(p));
      save_tensor(*out, tensor_action(load_tensor(*actor), ops));
    });
  }
  {
    auto* cmd = product->add_subcommand("outer", "outer product of slices");
    auto paths = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("inputs", *paths)->expected(-2);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      std::vector<DenseTensor> ops;
      for (const auto& p : *paths) ops.push_back(load_tensor(p));
      save_tensor(*out, outer_product(ops));
    });
  }
  {
    auto* cmd = product->add_subcommand(
        "background", "three matrices against a background tensor");
    auto paths = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("inputs", *paths, "A B C T")->expected(4);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      save_tensor(*out, bg_matrix_product(load_tensor((*paths)[0]),
                                          load_tensor((*paths)[1]),
                                          load_tensor((*paths)[2]),
                                          load_tensor((*paths)[3])));
    });
  }

  // ---- transpose / adjoint / norm / inner ---------------------------
  {
    auto* cmd = app.add_subcommand("transpose", "k-fold cyclic transpose");
    auto in = std::make_shared<std::string>();
    auto k = std::make_shared<int>(1);
    auto out = std::make_shared<std::string>();
    cmd->add_option("input", *in)->required();
    cmd->add_option("-k,--k", *k);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() { save_tensor(*out, transpose_k(load_tensor(*in), *k)); });
  }
  {
    auto* cmd = app.add_subcommand("adjoint", "k-fold adjoint");
    auto in = std::make_shared<std::string>();
    auto k = std::make_shared<int>(1);
    auto out = std::make_shared<std::string>();
    cmd->add_option("input", *in)->required();
    cmd->add_option("-k,--k", *k);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() { save_tensor(*out, adjoint_k(load_tensor(*in), *k)); });
  }
  {
    auto* cmd = app.add_subcommand("norm", "entrywise l_p norm");
    auto in = std::make_shared<std::string>();
    auto p = std::make_shared<int>(2);
    cmd->add_option("input", *in)->required();
    cmd->add_option("-p,--p", *p);
    cmd->callback([=]() {
      std::cout << fmt_double(lp_norm(load_tensor(*in), *p)) << '\n';
    });
  }
  {
    auto* cmd = app.add_subcommand("inner", "inner product of a tuple");
    auto paths = std::make_shared<std::vector<std::string>>();
    cmd->add_option("inputs", *paths)->expected(-2);
    cmd->callback([=]() {
      std::vector<DenseTensor> ops;
      for (const auto& p : *paths) ops.push_back(load_tensor(p));
      std::cout << fmt_complex(inner_p(ops)) << '\n';
    });
  }

  // ---- check --------------------------------------------------------
  auto* check = app.add_subcommand("check", "verification predicates");
  check->require_subcommand(1);
  auto add_check = [&](const std::string& name,
                       std::function<double(const std::vector<DenseTensor>&,
                                            double)> residual,
                       int arity, const char* help) {
    auto* cmd = check->add_subcommand(name, help);
    auto paths = std::make_shared<std::vector<std::string>>();
    auto tol = std::make_shared<double>(1e-12);
    cmd->add_option("inputs", *paths)->expected(arity);
    cmd->add_option("--tol", *tol);
    cmd->callback([=, &action]() {
      action = [=]() {
        std::vector<DenseTensor> ops;
        for (const auto& p : *paths) ops.push_back(load_tensor(p));
        const double dev = residual(ops, *tol);
        const bool ok = dev <= *tol;
        std::cout << name << ": max_dev " << fmt_double(dev) << " -> "
                  << (ok ? "PASS" : "FAIL") << '\n';
        return ok ? kExitOk : kExitCheckFailed;
      };
    });
  };
  add_check(
      "symmetric",
      [](const std::vector<DenseTensor>& ops, double tol) {
        return conformance(ops[0], Conformance::Symmetric, tol).max_deviation;
      },
      1, "A = A^T = A^T2");
  add_check(
      "hermitian",
      [](const std::vector<DenseTensor>& ops, double tol) {
        return conformance(ops[0], Conformance::Hermitian, tol).max_deviation;
      },
      1, "A = A^dag");
  add_check(
      "diagonal",
      [](const std::vector<DenseTensor>& ops, double) {
        return diagonal_residual(ops[0]);
      },
      1, "o(D^T, D^T2, D) equals the entrywise cube");
  add_check(
      "total-orthogonality",
      [](const std::vector<DenseTensor>& ops, double) {
        return total_orthogonality_residual(ops[0]);
      },
      1, "slice orthogonality of a core tensor");
  add_check(
      "inverse-pair",
      [](const std::vector<DenseTensor>& ops, double) {
        return inverse_pair_residual(ops[0], ops[1], ops[2], ops[3], ops[4]);
      },
      5, "o(B1, o(A1, M, A2), B2) = M  (inputs: B1 B2 A1 A2 M)");
  {
    auto* cmd = check->add_subcommand("orthogonal",
                                      "first interpretation + invariance");
    auto path = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(1e-12);
    cmd->add_option("input", *path)->required();
    cmd->add_option("--tol", *tol);
    cmd->callback([=, &action]() {
      action = [=]() {
        const auto res = orthogonality_residuals(load_tensor(*path));
        const bool ok = res.first <= *tol;
        std::cout << "orthogonal: first " << fmt_double(res.first)
                  << " kronecker_invariance "
                  << fmt_double(res.kronecker_invariance) << " -> "
                  << (ok ? "PASS" : "FAIL") << '\n';
        return ok ? kExitOk : kExitCheckFailed;
      };
    });
  }

  // ---- solve --------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "spectral systems");
  solve->require_subcommand(1);
  {
    auto* cmd = solve->add_subcommand("matrix-oracle",
                                      "classical route for hermitian matrices");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("input", *in)->required();
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      const MatrixSpectral spec = matrix_spectral_oracle(load_tensor(*in));
      const std::string prefix = stem_of(*out);
      save_tensor(prefix + "_q.json", spec.q);
      save_tensor(prefix + "_r.json", spec.r);
      json j;
      j["residual_a"] = spec.residual_a;
      j["residual_delta"] = spec.residual_delta;
      j["eigenvalues"] = eigenvalue_list(spec.eigenvalues);
      j["mu"] = eigenvalue_list(spec.mu);
      j["nu"] = eigenvalue_list(spec.nu);
      j["factors"] = {{"q", prefix + "_q.json"}, {"r", prefix + "_r.json"}};
      write_json(*out, j);
    });
  }
  {
    auto* cmd = solve->add_subcommand("spectral3",
                                      "3-tensor spectral system solver");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto cfg = std::make_shared<SolveConfig>();
    cmd->add_option("input", *in)->required();
    cmd->add_option("--seed", cfg->seed);
    cmd->add_option("--restarts", cfg->restarts);
    cmd->add_option("--max-iter", cfg->max_iter);
    cmd->add_option("--tol", cfg->tol);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      const SolveReport report = solve_spectral3(load_tensor(*in), *cfg);
      const std::string prefix = stem_of(*out);
      const auto& c = report.candidate;
      json factors;
      const std::pair<std::string, const DenseTensor*> blocks[] = {
          {"q", &c.q},  {"r", &c.r},  {"s", &c.s},
          {"mu", &c.mu}, {"nu", &c.nu}, {"xi", &c.xi}};
      for (const auto& [name, tensor] : blocks) {
        const std::string path = prefix + "_" + name + ".json";
        save_tensor(path, *tensor);
        factors[name] = path;
      }
      json j;
      j["residual_a"] = report.residual_a;
      j["residual_delta"] = report.residual_delta;
      j["iterations"] = report.iterations;
      j["seed"] = report.seed;
      j["converged"] = report.converged;
      j["factors"] = factors;
      write_json(*out, j);
    });
  }

  // ---- hierarchy ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("hierarchy", "recursive spectral tree");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto cfg = std::make_shared<SolveConfig>();
    cmd->add_option("input", *in)->required();
    cmd->add_option("--seed", cfg->seed);
    cmd->add_option("--restarts", cfg->restarts);
    cmd->add_option("--max-iter", cfg->max_iter);
    cmd->add_option("--tol", cfg->tol);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      write_json(*out, hierarchy_json(spectral_hierarchy(load_tensor(*in),
                                                         *cfg)));
    });
  }

  // ---- charpoly -----------------------------------------------------
  auto* charpoly = app.add_subcommand("charpoly",
                                      "Groebner characteristic sets");
  charpoly->require_subcommand(1);
  auto limit_options = [](CLI::App* cmd, std::shared_ptr<GroebnerLimits> lim) {
    cmd->add_option("--max-seconds", lim->max_seconds);
    cmd->add_option("--max-basis", lim->max_basis);
    cmd->add_option("--max-degree", lim->max_degree);
  };
  {
    auto* cmd = charpoly->add_subcommand("matrix",
                                         "characteristic polynomial");
    auto in = std::make_shared<std::string>();
    auto lim = std::make_shared<GroebnerLimits>();
    cmd->add_option("input", *in)->required();
    limit_options(cmd, lim);
    cmd->callback([=, &action]() {
      action = [=]() {
        const RationalMatrix a = rational_matrix_from(load_tensor(*in));
        const CharIdeal ideal = matrix_char_ideal(a);
        const GroebnerBasis basis = buchberger(ideal.generators, *lim);
        if (basis.limits_hit != LimitHit::None) {
          std::cerr << "charpoly: basis computation hit a resource limit\n";
          return kExitResourceLimit;
        }
        for (const auto& p :
             characteristic_set(basis, matrix_eliminated_keep(a.side()))) {
          std::cout << p.str() << '\n';
        }
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = charpoly->add_subcommand("tensor3",
                                         "3-tensor characteristic set");
    auto in = std::make_shared<std::string>();
    auto lim = std::make_shared<GroebnerLimits>();
    cmd->add_option("input", *in)->required();
    limit_options(cmd, lim);
    cmd->callback([=, &action]() {
      action = [=]() {
        const RationalTensor3 a = rational_tensor_from(load_tensor(*in));
        const CharIdeal ideal = tensor3_char_ideal(a);
        const GroebnerBasis basis = buchberger(ideal.generators, *lim);
        if (basis.limits_hit != LimitHit::None) {
          std::cerr << "charpoly: basis computation hit a resource limit "
                       "(partial basis of "
                    << basis.generators.size() << " members)\n";
          return kExitResourceLimit;
        }
        for (const auto& p :
             characteristic_set(basis, tensor3_scaling_keep(a.side()))) {
          std::cout << p.str() << '\n';
        }
        return kExitOk;
      };
    });
  }

  // ---- tucker -------------------------------------------------------
  auto* tucker = app.add_subcommand("tucker", "Tucker bridge");
  tucker->require_subcommand(1);
  for (const bool forward : {true, false}) {
    auto* cmd = tucker->add_subcommand(
        forward ? "core" : "reconstruct",
        forward ? "project onto an orthonormal triple"
                : "expand a core through an orthonormal triple");
    auto paths = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("inputs", *paths, "D|T Q S U")->expected(4);
    cmd->add_option("-o,--out", *out)->required();
    cmd->callback([=]() {
      const TuckerTriple triple{load_tensor((*paths)[1]),
                                load_tensor((*paths)[2]),
                                load_tensor((*paths)[3])};
      const DenseTensor in = load_tensor((*paths)[0]);
      save_tensor(*out,
                  forward ? tucker_core(in, triple)
                          : tucker_reconstruct(in, triple));
    });
  }

  // ---- rank1-objective ----------------------------------------------
  {
    auto* cmd = app.add_subcommand("rank1-objective",
                                   "rank-1 expansion fitting objective");
    auto tensor_path = std::make_shared<std::string>();
    auto factors_path = std::make_shared<std::string>();
    cmd->add_option("tensor", *tensor_path)->required();
    cmd->add_option("factors", *factors_path,
                    "json: {lambdas, vectors{u,v,w} | slices{m,n,p}}")
        ->required();
    cmd->callback([=]() {
      const DenseTensor a = load_tensor(*tensor_path);
      std::ifstream in(*factors_path);
      if (!in) throw std::runtime_error("cannot open: " + *factors_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ShapeError(std::string("factors json: ") + e.what());
      }
      const auto lambdas = j.at("lambdas").get<std::vector<double>>();
      double objective = 0.0;
      if (j.contains("vectors")) {
        std::vector<std::array<DenseTensor, 3>> triples;
        const auto read_vec = [&](const json& arr) {
          std::vector<Complex> entries;
          for (const auto& x : arr) entries.push_back(x.get<double>());
          return DenseTensor{Shape{static_cast<int>(entries.size())},
                             entries};
        };
        const auto& v = j.at("vectors");
        for (std::size_t k = 0; k < lambdas.size(); ++k) {
          triples.push_back({read_vec(v.at("u").at(k)),
                             read_vec(v.at("v").at(k)),
                             read_vec(v.at("w").at(k))});
        }
        objective = rank1_objective_vectors(triples, lambdas, a);
      } else {
        std::vector<std::array<DenseTensor, 3>> triples;
        const auto& s = j.at("slices");
        for (std::size_t k = 0; k < lambdas.size(); ++k) {
          triples.push_back({tensor_from_json(s.at("m").at(k).dump()),
                             tensor_from_json(s.at("n").at(k).dump()),
                             tensor_from_json(s.at("p").at(k).dump())});
        }
        objective = rank1_objective(triples, lambdas, a);
      }
      std::cout << fmt_double(objective) << '\n';
    });
  }

  // ---- audit --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("audit", "seeded paper-claims suite");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--seed", *seed);
    cmd->add_option("-o,--out", *out, "also write the table to a file");
    cmd->callback([=, &action]() {
      action = [=]() {
        std::ostringstream table;
        const cli::AuditOutcome outcome = cli::run_audit(*seed, table);
        std::cout << table.str();
        if (!out->empty()) {
          std::ofstream f(*out);
          if (!f) throw std::runtime_error("cannot open: " + *out);
          f << table.str();
        }
        return outcome.invariant_failures == 0 ? kExitOk : kExitCheckFailed;
      };
    });
  }

  try {
    app.parse(argc, argv);
    if (action) return action();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  } catch (const NormZeroError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NormOneError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}
