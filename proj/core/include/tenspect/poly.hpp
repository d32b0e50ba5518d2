#pragma once

#include <complex>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tenspect {

/// Ordered variable names; earlier names rank higher in the lex order.
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<std::string> names);

  int arity() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;  // -1 when unknown

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using VarRegistryPtr = std::shared_ptr<const VarRegistry>;

/// Exponent vector over a registry.
struct Monomial {
  std::vector<unsigned short> exps;

  int total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial quotient_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps == other.exps; }
};

/// Descending lex: higher exponent on an earlier variable wins.
struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients under a lex
/// order. Zero coefficients are never stored; term iteration is descending.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, mpq_class, MonomialLexGreater>;

  explicit MultiPoly(VarRegistryPtr reg) : reg_(std::move(reg)) {}
  static MultiPoly constant(VarRegistryPtr reg, const mpq_class& c);
  static MultiPoly variable(VarRegistryPtr reg, int var,
                            unsigned short exp = 1);

  const VarRegistryPtr& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Monomial& m, const mpq_class& c);

  const Monomial& leading_monomial() const;
  const mpq_class& leading_coeff() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const mpq_class& c) const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  bool operator==(const MultiPoly& other) const {
    return terms_ == other.terms_;
  }

  MultiPoly monic() const;

  /// True when every term touches only the allowed variables.
  bool uses_only(const std::vector<bool>& allowed) const;

  /// Numeric substitution, one value per registry variable.
  std::complex<double> eval(std::span<const std::complex<double>> vals) const;

  /// Canonical text form: descending-lex terms joined by " + ", each term a
  /// rational coefficient followed by *var^exp factors, e.g.
  /// "1*l2^2 + -4*l2 + 3". parse accepts the same grammar.
  std::string str() const;
  static MultiPoly parse(VarRegistryPtr reg, const std::string& text);

 private:
  VarRegistryPtr reg_;
  TermMap terms_;
};

}  // namespace tenspect
