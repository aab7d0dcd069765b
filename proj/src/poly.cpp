#include "hypaut/poly.hpp"

#include <algorithm>
#include <sstream>

#include "parse_detail.hpp"

namespace hypaut {

int Monomial::degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << "X" << i;
    if (exps[i] != 1) out << "^" << exps[i];
  }
  if (first) out << "1";
  return out.str();
}

bool GrLex::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

Monomial power_monomial(int num_vars, int i, int e) {
  Monomial m{std::vector<int>(num_vars, 0)};
  m.exps[i] = e;
  return m;
}

Monomial near_power_monomial(int num_vars, int d, int i, int j) {
  Monomial m{std::vector<int>(num_vars, 0)};
  m.exps[i] += d - 1;
  m.exps[j] += 1;
  return m;
}

NotHomogeneous::NotHomogeneous(Monomial a, Monomial b)
    : Error("polynomial is not homogeneous: " + a.to_string() + " has degree " + std::to_string(a.degree()) +
            " but " + b.to_string() + " has degree " + std::to_string(b.degree())),
      first(std::move(a)),
      second(std::move(b)) {}

HomogPoly::HomogPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {}

void HomogPoly::add_term(const Monomial& m, const CycloNum& c) {
  if (static_cast<int>(m.exps.size()) != num_vars_) throw Error("monomial has the wrong number of variables");
  if (m.degree() != degree_) throw NotHomogeneous(terms_.empty() ? power_monomial(num_vars_, 0, degree_) : terms_.begin()->first, m);
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<CycloNum> HomogPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

std::vector<Monomial> HomogPoly::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

HomogPoly HomogPoly::operator*(const CycloNum& s) const {
  HomogPoly r(num_vars_, degree_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

bool operator==(const HomogPoly& a, const HomogPoly& b) {
  if (a.num_vars_ != b.num_vars_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.degree_ != b.degree_) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(it->first == m) || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = m.to_string();
    bool is_const = mono == "1";
    if (c.is_rational()) {
      mpq_class q = c.rational_value();
      if (!first) out << (sgn(q) < 0 ? " - " : " + ");
      else if (sgn(q) < 0) out << "-";
      mpq_class a = abs(q);
      std::string qa = CycloNum(a).to_string();
      if (is_const) {
        out << qa;
      } else {
        if (a != 1) out << qa << "*";
        out << mono;
      }
    } else {
      if (!first) out << " + ";
      std::string cs = c.to_string();
      bool simple = c.as_root_of_unity().has_value();
      if (simple) {
        out << cs;
      } else {
        out << "(" << cs << ")";
      }
      if (!is_const) out << "*" << mono;
    }
    first = false;
  }
  return out.str();
}

HomogPoly parse_poly(std::string_view text, int num_vars) {
  using detail::Tok;
  detail::TokenStream ts(detail::tokenize(text));
  struct RawTerm {
    CycloNum coeff;
    std::vector<int> exps;  // grows as needed
    bool has_var = false;
  };
  std::vector<RawTerm> raw;
  int max_var = -1;

  auto parse_term = [&](bool negate) {
    RawTerm t;
    t.coeff = CycloNum(negate ? -1L : 1L);
    bool any = false;
    do {
      const auto& tok = ts.peek();
      if (tok.kind == Tok::Var) {
        long idx = ts.next().index;
        long e = 1;
        if (ts.accept(Tok::Caret)) {
          e = detail::parse_exponent(ts);
          if (e < 0) ts.fail("negative exponent");
        }
        if (static_cast<long>(t.exps.size()) <= idx) t.exps.resize(idx + 1, 0);
        t.exps[idx] += static_cast<int>(e);
        t.has_var = true;
        max_var = std::max<int>(max_var, static_cast<int>(idx));
      } else {
        t.coeff *= detail::parse_scalar_factor(ts);
      }
      any = true;
    } while (ts.accept(Tok::Star));
    if (!any) ts.fail("empty term");
    raw.push_back(std::move(t));
  };

  bool negate = ts.accept(Tok::Minus);
  if (!negate) ts.accept(Tok::Plus);
  parse_term(negate);
  for (;;) {
    if (ts.accept(Tok::Plus)) {
      parse_term(false);
    } else if (ts.accept(Tok::Minus)) {
      parse_term(true);
    } else {
      break;
    }
  }
  if (ts.peek().kind != Tok::End) ts.fail("trailing input");

  if (num_vars == 0) num_vars = std::max(max_var + 1, 1);
  if (max_var >= num_vars) {
    throw SyntaxError("variable X" + std::to_string(max_var) + " out of range for " + std::to_string(num_vars) +
                      " variables");
  }
  std::vector<Monomial> monos;
  for (auto& t : raw) {
    t.exps.resize(num_vars, 0);
    monos.push_back(Monomial{t.exps});
  }
  const int degree = monos.front().degree();
  for (const auto& m : monos) {
    if (m.degree() != degree) throw NotHomogeneous(monos.front(), m);
  }
  HomogPoly f(num_vars, degree);
  for (std::size_t i = 0; i < raw.size(); ++i) f.add_term(monos[i], raw[i].coeff);
  return f;
}

namespace {

CycloNum character(const Monomial& m, const std::vector<CycloNum>& lambdas) {
  CycloNum c(1L);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (m.exps[i] != 0) c *= lambdas[i].pow(m.exps[i]);
  }
  return c;
}

void check_lambdas(const HomogPoly& f, const std::vector<CycloNum>& lambdas) {
  if (static_cast<int>(lambdas.size()) != f.num_vars()) throw Error("eigenvalue count does not match variable count");
  for (const auto& l : lambdas) {
    if (l.is_zero()) throw ZeroEigenvalue();
  }
}

}  // namespace

HomogPoly apply_diagonal(const HomogPoly& f, const std::vector<CycloNum>& lambdas) {
  check_lambdas(f, lambdas);
  HomogPoly r(f.num_vars(), f.degree());
  for (const auto& [m, c] : f.terms()) r.add_term(m, c * character(m, lambdas));
  return r;
}

std::variant<CycloNum, NotSemiInvariant> semi_invariance_multiplier(const HomogPoly& f,
                                                                     const std::vector<CycloNum>& lambdas) {
  check_lambdas(f, lambdas);
  if (f.is_zero()) throw Error("semi-invariance of the zero polynomial is undefined");
  const Monomial* base = nullptr;
  CycloNum t;
  for (const auto& [m, c] : f.terms()) {
    CycloNum ch = character(m, lambdas);
    if (base == nullptr) {
      base = &m;
      t = ch;
    } else if (!(ch == t)) {
      return NotSemiInvariant{*base, m};
    }
  }
  return t;
}

IncidenceProfile support_queries(const HomogPoly& f) {
  const int n = f.num_vars();
  const int d = f.degree();
  IncidenceProfile prof;
  prof.vertices.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& v = prof.vertices[i];
    v.on_hypersurface = !f.contains(power_monomial(n, i, d));
    if (d >= 1) {
      for (int j = 0; j < n; ++j) {
        if (j != i && f.contains(near_power_monomial(n, d, i, j))) v.partners.insert(j);
      }
    }
    v.red_flag = v.on_hypersurface && v.partners.empty();
  }
  return prof;
}

HomogPoly restrict_to_zero(const HomogPoly& f, const std::set<int>& zero_set) {
  HomogPoly r(f.num_vars(), f.degree());
  for (const auto& [m, c] : f.terms()) {
    bool killed = false;
    for (int i : zero_set) {
      if (m.exps[i] > 0) {
        killed = true;
        break;
      }
    }
    if (!killed) r.add_term(m, c);
  }
  return r;
}

HomogPoly restrict_to_span(const HomogPoly& f, const std::set<int>& keep) {
  std::set<int> zero;
  for (int i = 0; i < f.num_vars(); ++i) {
    if (!keep.count(i)) zero.insert(i);
  }
  return restrict_to_zero(f, zero);
}

HomogPoly partial(const HomogPoly& f, int i) {
  HomogPoly r(f.num_vars(), std::max(f.degree() - 1, 0));
  for (const auto& [m, c] : f.terms()) {
    int e = m.exps[i];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exps[i] -= 1;
    r.add_term(dm, c * CycloNum(static_cast<long>(e)));
  }
  return r;
}

HomogPoly times_variable(const HomogPoly& f, int i) {
  HomogPoly r(f.num_vars(), f.degree() + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    mm.exps[i] += 1;
    r.add_term(mm, c);
  }
  return r;
}

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.num_vars() != b.num_vars() || a.degree() != b.degree()) throw Error("adding incompatible polynomials");
  HomogPoly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

}  // namespace hypaut
