#include "tenspect/poly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tenspect {

VarRegistry::VarRegistry(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw std::invalid_argument("registry: duplicate variable " + names_[i]);
    }
  }
}

int VarRegistry::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  Monomial q = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    q.exps[i] = static_cast<unsigned short>(exps[i] - other.exps[i]);
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0 && other.exps[i] > 0) return false;
  }
  return true;
}

bool MonomialLexGreater::operator()(const Monomial& a,
                                    const Monomial& b) const {
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  }
  return false;
}

MultiPoly MultiPoly::constant(VarRegistryPtr reg, const mpq_class& c) {
  MultiPoly p{std::move(reg)};
  Monomial one{std::vector<unsigned short>(p.reg_->arity(), 0)};
  p.add_term(one, c);
  return p;
}

MultiPoly MultiPoly::variable(VarRegistryPtr reg, int var,
                              unsigned short exp) {
  MultiPoly p{std::move(reg)};
  Monomial m{std::vector<unsigned short>(p.reg_->arity(), 0)};
  m.exps[var] = exp;
  p.add_term(m, 1);
  return p;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->first;
}

const mpq_class& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  MultiPoly out{reg_};
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        m.exps[i] = static_cast<unsigned short>(m.exps[i] + mb.exps[i]);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const mpq_class& c) const {
  MultiPoly out{reg_};
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (mpq_class(1) / leading_coeff());
}

bool MultiPoly::uses_only(const std::vector<bool>& allowed) const {
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] > 0 && !allowed[i]) return false;
    }
  }
  return true;
}

std::complex<double> MultiPoly::eval(
    std::span<const std::complex<double>> vals) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      for (int e = 0; e < m.exps[i]; ++e) term *= vals[i];
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      os << '*' << reg_->name(static_cast<int>(i));
      if (m.exps[i] > 1) os << '^' << m.exps[i];
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

std::string read_number(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.s.size() &&
         (std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])) ||
          cur.s[cur.pos] == '/')) {
    ++cur.pos;
  }
  if (start == cur.pos) throw std::invalid_argument("poly parse: number expected");
  return cur.s.substr(start, cur.pos - start);
}

std::string read_ident(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.s.size() &&
         (std::isalnum(static_cast<unsigned char>(cur.s[cur.pos])) ||
          cur.s[cur.pos] == '_')) {
    ++cur.pos;
  }
  return cur.s.substr(start, cur.pos - start);
}

}  // namespace

MultiPoly MultiPoly::parse(VarRegistryPtr reg, const std::string& text) {
  MultiPoly out{reg};
  Cursor cur{text};
  bool first = true;
  while (!cur.done()) {
    mpq_class sign = 1;
    if (!first) {
      if (cur.eat('+')) {
      } else if (cur.eat('-')) {
        sign = -1;
      } else {
        throw std::invalid_argument("poly parse: expected '+' between terms");
      }
    }
    first = false;
    if (cur.eat('-')) sign = -sign;

    mpq_class coeff = 1;
    Monomial mono{std::vector<unsigned short>(reg->arity(), 0)};
    bool saw_factor = false;
    do {
      char c = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpq_class q{read_number(cur)};
        q.canonicalize();
        coeff *= q;
      } else {
        std::string name = read_ident(cur);
        if (name.empty()) {
          throw std::invalid_argument("poly parse: factor expected");
        }
        int var = reg->index_of(name);
        if (var < 0) {
          throw std::invalid_argument("poly parse: unknown variable " + name);
        }
        unsigned long exp = 1;
        if (cur.eat('^')) exp = std::stoul(read_number(cur));
        mono.exps[var] = static_cast<unsigned short>(mono.exps[var] + exp);
      }
      saw_factor = true;
    } while (cur.eat('*'));
    if (!saw_factor) throw std::invalid_argument("poly parse: empty term");
    out.add_term(mono, sign * coeff);
  }
  return out;
}

}  // namespace tenspect
