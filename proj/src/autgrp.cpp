#include "hypaut/autgrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hypaut/errors.hpp"
#include "parse_detail.hpp"

namespace hypaut {

namespace {

int mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

DiagAut DiagAut::identity(int num_vars) { return DiagAut{1, std::vector<int>(num_vars, 0)}; }

std::vector<CycloNum> DiagAut::eigenvalues() const {
  std::vector<CycloNum> out;
  out.reserve(exps.size());
  for (int e : exps) out.push_back(CycloNum::root_of_unity(level, e));
  return out;
}

DiagAut DiagAut::power(long k) const {
  DiagAut r{level, exps};
  for (auto& e : r.exps) e = mod(static_cast<long>(e) * k, level);
  return r;
}

DiagAut DiagAut::shifted_to_unit(int i) const {
  DiagAut r{level, exps};
  int s = exps[i];
  for (auto& e : r.exps) e = mod(static_cast<long>(e) - s, level);
  return r;
}

DiagAut DiagAut::at_level(int m) const {
  if (m % level != 0) throw Error("DiagAut::at_level: level does not divide target");
  DiagAut r{m, exps};
  for (auto& e : r.exps) e = mod(static_cast<long>(e) * (m / level), m);
  return r;
}

bool DiagAut::is_identity() const { return order_in_pgl(*this) == 1; }

std::string DiagAut::to_string() const {
  std::ostringstream out;
  int g = level;
  for (int e : exps) g = std::gcd(g, mod(e, level));
  const int lvl = level / g;
  out << "diag(";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out << ", ";
    int e = mod(exps[i], level) / g;
    if (e == 0) {
      out << "1";
    } else {
      out << "z" << lvl;
      if (e != 1) out << "^" << e;
    }
  }
  out << ")";
  return out.str();
}

bool operator==(const DiagAut& a, const DiagAut& b) {
  if (a.exps.size() != b.exps.size()) return false;
  int l = std::lcm(a.level, b.level);
  DiagAut x = a.at_level(l);
  DiagAut y = b.at_level(l);
  if (x.exps.empty()) return true;
  int shift = mod(static_cast<long>(x.exps[0]) - y.exps[0], l);
  for (std::size_t i = 0; i < x.exps.size(); ++i) {
    if (mod(static_cast<long>(x.exps[i]) - y.exps[i], l) != shift) return false;
  }
  return true;
}

DiagAut parse_diag(std::string_view text) {
  using detail::Tok;
  detail::TokenStream ts(detail::tokenize(text));
  const auto& head = ts.expect(Tok::Ident, "'diag'");
  if (head.text != "diag") ts.fail("expected 'diag'");
  ts.expect(Tok::LParen, "'('");
  std::vector<std::pair<int, int>> roots;
  if (ts.peek().kind == Tok::RParen) ts.fail("empty diag");
  do {
    CycloNum v = detail::parse_scalar_expr(ts);
    if (v.is_zero()) throw ZeroEigenvalue();
    auto r = v.as_root_of_unity();
    if (!r) throw SyntaxError("diag entry " + v.to_string() + " is not a root of unity");
    roots.push_back(*r);
  } while (ts.accept(Tok::Comma));
  ts.expect(Tok::RParen, "')'");
  if (ts.peek().kind != Tok::End) ts.fail("trailing input");
  int level = 1;
  for (auto [m, k] : roots) level = std::lcm(level, m);
  DiagAut g{level, {}};
  for (auto [m, k] : roots) g.exps.push_back(k * (level / m));
  return g;
}

int order_in_pgl(const DiagAut& g) {
  int acc = g.level;
  for (std::size_t i = 1; i < g.exps.size(); ++i) acc = std::gcd(acc, std::abs(g.exps[i] - g.exps[0]));
  return g.level / std::gcd(g.level, acc);
}

EigenStructure eigen_structure(const DiagAut& g) {
  std::map<int, std::size_t> slot;
  EigenStructure es;
  for (int i = 0; i < g.num_vars(); ++i) {
    int e = mod(g.exps[i], g.level);
    auto it = slot.find(e);
    if (it == slot.end()) {
      slot.emplace(e, es.spaces.size());
      es.spaces.push_back({i});
      es.exps.push_back(e);
    } else {
      es.spaces[it->second].push_back(i);
    }
  }
  es.r = static_cast<int>(es.spaces.size());
  for (const auto& s : es.spaces) es.partition.push_back(static_cast<int>(s.size()));
  std::sort(es.partition.rbegin(), es.partition.rend());
  return es;
}

NormalizedAut normalize_with_unit(const DiagAut& g, const std::vector<int>& unit_space) {
  if (unit_space.empty()) throw Error("normalize: empty unit eigenspace");
  EigenStructure es = eigen_structure(g);
  DiagAut shifted = g.shifted_to_unit(unit_space.front());
  std::vector<const std::vector<int>*> blocks;
  for (const auto& s : es.spaces) {
    if (s.front() != unit_space.front()) blocks.push_back(&s);
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const std::vector<int>* a, const std::vector<int>* b) { return a->size() > b->size(); });
  NormalizedAut out;
  for (const auto* b : blocks) out.perm.insert(out.perm.end(), b->begin(), b->end());
  for (const auto& s : es.spaces) {
    if (s.front() == unit_space.front()) out.perm.insert(out.perm.end(), s.begin(), s.end());
  }
  out.aut.level = g.level;
  for (int old : out.perm) out.aut.exps.push_back(shifted.exps[old]);
  return out;
}

NormalizedAut normalize(const DiagAut& g) {
  EigenStructure es = eigen_structure(g);
  std::size_t best = 0;
  for (std::size_t k = 1; k < es.spaces.size(); ++k) {
    const auto& cur = es.spaces[k];
    const auto& top = es.spaces[best];
    if (cur.size() > top.size() || (cur.size() == top.size() && es.exps[k] == 0 && es.exps[best] != 0)) best = k;
  }
  return normalize_with_unit(g, es.spaces[best]);
}

std::int64_t SymGroup::order() const {
  if (!is_finite()) throw EnumerationCapExceeded("symmetry group is infinite");
  std::int64_t o = 1;
  for (auto f : invariant_factors) {
    if (__builtin_mul_overflow(o, f, &o)) throw Error("group order overflows");
  }
  return o;
}

std::int64_t SymGroup::exponent() const {
  std::int64_t e = 1;
  for (auto f : invariant_factors) e = std::lcm(e, f);
  return e;
}

std::string SymGroup::structure() const {
  std::vector<std::string> parts;
  for (auto f : invariant_factors) parts.push_back("Z/" + std::to_string(f));
  if (free_rank > 0) parts.push_back(free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
  if (parts.empty()) return "trivial";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " × " + parts[i];
  return s;
}

SymGroup symmetry_group(const std::vector<Monomial>& support) {
  if (support.empty()) throw Error("symmetry group of an empty support is undefined");
  const int m = static_cast<int>(support.front().exps.size());
  const int deg = support.front().degree();
  IntMatrix rows;
  for (std::size_t k = 1; k < support.size(); ++k) {
    if (static_cast<int>(support[k].exps.size()) != m || support[k].degree() != deg) {
      throw Error("support monomials must share variable count and degree");
    }
    std::vector<std::int64_t> row(m);
    for (int i = 0; i < m; ++i) row[i] = support[k].exps[i] - support.front().exps[i];
    rows.push_back(std::move(row));
  }
  SmithForm snf = smith_normal_form(rows, m);
  SymGroup g;
  g.num_vars = m;
  g.free_rank = m - 1 - snf.rank;
  for (int j = 0; j < snf.rank; ++j) {
    std::int64_t s = snf.diagonal[j];
    if (s == 1) continue;
    if (s > (1LL << 30)) throw Error("invariant factor too large");
    DiagAut gen{static_cast<int>(s), std::vector<int>(m)};
    for (int i = 0; i < m; ++i) gen.exps[i] = mod(static_cast<long>(snf.V[i][j] % s), static_cast<int>(s));
    g.invariant_factors.push_back(s);
    g.generators.push_back(gen.shifted_to_unit(m - 1));
  }
  return g;
}

void enumerate_elements(const SymGroup& group, const std::function<void(const DiagAut&)>& visit,
                        const std::function<bool(const DiagAut&)>& filter, std::int64_t cap) {
  if (!group.is_finite()) throw EnumerationCapExceeded("symmetry group is infinite modulo scalars");
  std::int64_t total = group.order();
  if (total > cap) {
    throw EnumerationCapExceeded("group order " + std::to_string(total) + " exceeds enumeration cap " +
                                 std::to_string(cap));
  }
  const int m = group.num_vars;
  const int L = static_cast<int>(group.exponent());
  std::vector<std::vector<int>> lifted;
  for (const auto& gen : group.generators) lifted.push_back(gen.at_level(L).exps);
  const std::size_t t = group.invariant_factors.size();
  std::vector<std::int64_t> digits(t, 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    DiagAut e{L, std::vector<int>(m, 0)};
    for (std::size_t j = 0; j < t; ++j) {
      if (digits[j] == 0) continue;
      for (int i = 0; i < m; ++i) e.exps[i] = mod(e.exps[i] + digits[j] * lifted[j][i], L);
    }
    if (!filter || filter(e)) visit(e);
    for (std::size_t j = 0; j < t; ++j) {
      if (++digits[j] < group.invariant_factors[j]) break;
      digits[j] = 0;
    }
  }
}

std::vector<DiagAut> list_elements(const SymGroup& group, std::int64_t cap) {
  std::vector<DiagAut> out;
  enumerate_elements(group, [&](const DiagAut& g) { out.push_back(g); }, {}, cap);
  return out;
}

}  // namespace hypaut
