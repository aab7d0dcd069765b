#include "hypaut/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hypaut/errors.hpp"

namespace hypaut {

std::string to_string(NormalType t) {
  switch (t) {
    case NormalType::I: return "I";
    case NormalType::II: return "II";
    case NormalType::III: return "III";
    case NormalType::IV: return "IV";
    case NormalType::V: return "V";
    case NormalType::VI: return "VI";
    case NormalType::OutOfScope: return "OutOfScope";
  }
  return "?";
}

std::string to_string(RationalStatus s) {
  switch (s) {
    case RationalStatus::Rational: return "Rational";
    case RationalStatus::Unknown: return "Unknown";
    case RationalStatus::Conditional: return "Conditional";
  }
  return "?";
}

void check_range(int n, int d) {
  if (n < 2) throw UnsupportedRange("n >= 2 required (got n=" + std::to_string(n) + ")");
  if (d < 3) throw UnsupportedRange("d >= 3 required (got d=" + std::to_string(d) + ")");
  if (n == 2 && d == 4) throw UnsupportedRange("(n,d)=(2,4) excluded");
}

TypeResult normal_form_type(const DiagAut& g, const FixedLocusReport& fix) {
  TypeResult res;
  auto out_of_scope = [&](std::string why) {
    res.type = NormalType::OutOfScope;
    res.reason = std::move(why);
    return res;
  };
  if (g.is_identity()) return out_of_scope("identity");
  if (fix.empty()) return out_of_scope("empty fixed locus");
  if (*fix.codim > 2) return out_of_scope("fixed locus has codimension " + std::to_string(*fix.codim));

  const FixedSlice* unit = nullptr;
  for (const auto& s : fix.slices) {
    if (!s.dim) continue;
    if (unit == nullptr || *s.dim > *unit->dim || (*s.dim == *unit->dim && s.space.size() > unit->space.size())) {
      unit = &s;
    }
  }
  const int m = g.num_vars();
  const int k = m - static_cast<int>(unit->space.size());
  if (k > 3) return out_of_scope("non-unit block has " + std::to_string(k) + " coordinates");

  NormalizedAut na = normalize_with_unit(g, unit->space);
  res.normal = na.aut;
  res.perm = na.perm;
  res.block.assign(na.perm.begin(), na.perm.begin() + k);
  res.unit = unit->space;

  std::vector<int> e(na.aut.exps.begin(), na.aut.exps.begin() + k);
  std::set<int> distinct(e.begin(), e.end());
  if (k == 1) {
    res.type = NormalType::I;
  } else if (k == 2) {
    res.type = distinct.size() == 1 ? NormalType::II : NormalType::III;
  } else if (distinct.size() == 1) {
    res.type = NormalType::IV;
  } else if (distinct.size() == 2) {
    res.type = NormalType::V;
  } else {
    res.type = NormalType::VI;
  }
  return res;
}

Incidence incidence_case(const HomogPoly& f, const TypeResult& type) {
  if (type.type == NormalType::OutOfScope) throw Error("incidence_case: type is out of scope");
  IncidenceProfile prof = support_queries(f);
  Incidence inc;
  const int k = static_cast<int>(type.block.size());
  for (int p = 0; p < k; ++p) {
    const auto& v = prof.vertices[type.block[p]];
    inc.on.push_back(v.on_hypersurface);
    std::set<int> partners;
    if (v.on_hypersurface) {
      for (int j : v.partners) {
        auto it = std::find(type.block.begin(), type.block.end(), j);
        partners.insert(it == type.block.end() ? kUnitPartner : static_cast<int>(it - type.block.begin()));
      }
      if (partners.empty()) {
        throw VertexViolatesSmoothness("P" + std::to_string(type.block[p]) +
                                       " lies on X but F has no monomial X_i^(d-1) X_j there");
      }
    }
    inc.partners.push_back(std::move(partners));
  }
  std::set<int> keep(type.block.begin(), type.block.end());
  inc.block_monomial = !restrict_to_span(f, keep).is_zero();
  return inc;
}

namespace {

using List = std::vector<std::int64_t>;
using Opt = std::optional<List>;
constexpr int U = kUnitPartner;

bool pattern(const std::vector<bool>& on, const char* bits) {
  for (std::size_t i = 0; i < on.size(); ++i) {
    if (on[i] != (bits[i] == '1')) return false;
  }
  return true;
}

bool in01(int p) { return p == 0 || p == 1; }

Opt table_I(std::int64_t d, const std::vector<bool>& on) { return on[0] ? List{d - 1} : List{d}; }

Opt table_II(int n, std::int64_t d, const std::vector<bool>& on, const std::vector<int>& p) {
  List none{d};
  if (n == 2) none.push_back(d - 1);
  if (pattern(on, "00")) return none;
  if (pattern(on, "01")) return p[1] == 0 ? none : List{};
  if (pattern(on, "11")) {
    if (p[0] == 1 && p[1] == 0) return none;
    if (p[0] == U && p[1] == U) {
      List l{d - 1};
      if (n == 2) l.push_back(d - 2);
      return l;
    }
    return List{};
  }
  return std::nullopt;
}

Opt table_III(std::int64_t d, const std::vector<bool>& on, const std::vector<int>& p) {
  if (pattern(on, "00")) return List{d};
  if (pattern(on, "01")) return List{(d - 1) * d};
  if (pattern(on, "11")) {
    if (p[0] == 1 && p[1] == 0) return List{(d - 2) * d};
    if (p[0] == 1 && p[1] == U) return List{(d - 1) * (d - 1)};
    if (p[0] == U && p[1] == U) return List{d - 1};
  }
  return std::nullopt;
}

Opt table_IV(int n, std::int64_t d, bool block_monomial) {
  if (n > 4) return List{};
  if (block_monomial) return List{d - 1};
  if (n == 4) return List{d - 2};
  return List{};
}

Opt table_V(int n, std::int64_t d, const std::vector<bool>& on, const std::vector<int>& p) {
  if (n >= 4) return List{};
  if (n == 2) return List{(d - 1) * d, (d - 1) * (d - 1), (d - 2) * d};
  const std::int64_t q = d * d - 3 * d + 3;
  auto by_k = [&](int k) { return in01(k) ? List{d - 1} : List{(d - 1) * (d - 1)}; };
  if (pattern(on, "000")) return List{(d - 1) * d};
  if (pattern(on, "001")) return by_k(p[2]);
  if (pattern(on, "010")) return p[1] == 0 ? List{(d - 1) * d} : List{};
  if (pattern(on, "011")) return p[1] == 0 ? by_k(p[2]) : List{};
  if (pattern(on, "110")) {
    if (p[0] == 1 && p[1] == 0) return List{(d - 1) * d};
    if (p[0] == 2 && p[1] == 2) return List{(d - 1) * (d - 1)};
    if (p[0] == U && p[1] == U) return List{(d - 2) * d};
    if ((p[0] == 1 && p[1] == 2) || (p[0] == 1 && p[1] == U) || (p[0] == 2 && p[1] == U)) return List{};
    return std::nullopt;
  }
  if (pattern(on, "111")) {
    if (p[0] == 1) return p[1] == 0 ? by_k(p[2]) : List{};
    if (p[0] == 2 && p[1] == 2) return in01(p[2]) ? List{(d - 2) * (d - 1)} : List{q};
    if (p[0] == U && p[1] == U) return List{(d - 2) * (d - 1)};
    if (p[0] == 2 && p[1] == U) return List{};
    return std::nullopt;
  }
  return std::nullopt;
}

Opt table_VI(int n, std::int64_t d, const std::vector<bool>& on, const std::vector<int>& p) {
  if (n != 2) return List{};
  const std::int64_t q = d * d - 3 * d + 3;
  const std::int64_t a = d - 1, b = d - 2;
  if (pattern(on, "000")) return List{a * d};
  if (pattern(on, "001")) return in01(p[2]) ? List{a * a * d} : List{a * a * d, b * d};
  if (pattern(on, "011")) {
    const int i = p[1], j = p[2];
    if (i == 0 && j == 0) return List{a * a};
    if (i == 0 && j == 1) return List{a * a, a * a * a};
    if (i == 0 && j == U) return List{a * a, a * a * a, b * a * d};
    if (i == 2 && j == 1) return List{b * a * d};
    if (i == 2 && j == U) return List{a * a * a, q * d, b * a * d};
    if (i == U && j == U) return List{a * a, b * a * d};
    return std::nullopt;
  }
  if (pattern(on, "111")) {
    const int i = p[0], j = p[1], k = p[2];
    if (i == 1 && j == 0 && k == 0) return List{b * a, b * a * a};
    if (i == 1 && j == 0 && k == U) return List{b * a * a, b * d};
    if (i == 1 && j == 2 && k == 0) return List{q * a};
    if (i == 1 && j == 2 && k == U) return List{a * q, b * a * a};
    if (i == 1 && j == U && k == 1) return List{a * q, b * a};
    if (i == 1 && j == U && k == U) return List{q * a, b * a, b * a * a};
    if (i == U && j == U && k == U) return List{b * a};
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> allowed_perms(NormalType t) {
  switch (t) {
    case NormalType::I: return {{0}};
    case NormalType::II:
    case NormalType::III: return {{0, 1}, {1, 0}};
    case NormalType::V: return {{0, 1, 2}, {1, 0, 2}};
    case NormalType::IV:
    case NormalType::VI: {
      std::vector<std::vector<int>> out;
      std::vector<int> p{0, 1, 2};
      do out.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      return out;
    }
    default: return {};
  }
}

std::string branch_label(NormalType t, const std::vector<bool>& on, const std::vector<int>& p) {
  std::ostringstream out;
  out << to_string(t) << " on{";
  bool first = true;
  for (std::size_t i = 0; i < on.size(); ++i) {
    if (!on[i]) continue;
    out << (first ? "" : ",") << "P" << i;
    first = false;
  }
  out << "}";
  if (!first) {
    out << " partners(";
    for (std::size_t i = 0; i < on.size(); ++i) {
      if (i) out << ",";
      if (!on[i]) out << "-";
      else if (p[i] == U) out << "U";
      else out << p[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace

std::optional<std::vector<std::int64_t>> branch_table(int n, int d, NormalType type, const std::vector<bool>& on,
                                                      const std::vector<int>& partner, bool block_monomial) {
  switch (type) {
    case NormalType::I: return table_I(d, on);
    case NormalType::II: return table_II(n, d, on, partner);
    case NormalType::III: return table_III(d, on, partner);
    case NormalType::IV: return table_IV(n, d, block_monomial);
    case NormalType::V: return table_V(n, d, on, partner);
    case NormalType::VI: return table_VI(n, d, on, partner);
    default: return std::nullopt;
  }
}

BranchClaim divisor_claims(int n, int d, NormalType type, const Incidence& inc) {
  check_range(n, d);
  if (type == NormalType::OutOfScope) throw Error("divisor_claims: type is out of scope");
  const int k = static_cast<int>(inc.on.size());
  // Partner choices per vertex, ordered: block positions ascending, then U.
  std::vector<std::vector<int>> choices(k);
  for (int i = 0; i < k; ++i) {
    if (!inc.on[i]) {
      choices[i] = {U};
      continue;
    }
    for (int p : inc.partners[i]) {
      if (p != U) choices[i].push_back(p);
    }
    if (inc.partners[i].count(U)) choices[i].push_back(U);
  }
  for (const auto& perm : allowed_perms(type)) {
    std::vector<int> pick(k, 0);
    for (;;) {
      std::vector<bool> on(k);
      std::vector<int> partner(k, U);
      for (int i = 0; i < k; ++i) {
        on[perm[i]] = inc.on[i];
        int p = choices[i][pick[i]];
        partner[perm[i]] = p == U ? U : perm[p];
      }
      auto listed = branch_table(n, d, type, on, partner, inc.block_monomial);
      if (listed) {
        BranchClaim c;
        c.divisors = *listed;
        c.branch = branch_label(type, on, partner);
        if (type == NormalType::IV) c.branch += inc.block_monomial ? " block-monomial" : " no-block-monomial";
        c.block_perm = perm;
        return c;
      }
      int i = 0;
      while (i < k && ++pick[i] == static_cast<int>(choices[i].size())) pick[i++] = 0;
      if (i == k) break;
    }
  }
  BranchClaim c;
  c.branch = to_string(type) + " unlisted";
  return c;
}

RationalityVerdict rationality_verdict(int n, int d, const HomogPoly& f, const DiagAut& g, const FixedLocusReport& fix,
                                       const TypeResult& type, bool smoothness_verified) {
  RationalityVerdict v;
  const std::int64_t ord = order_in_pgl(g);
  const std::int64_t D = d;
  const std::optional<int> codim = fix.codim;
  const bool codim1 = codim && *codim == 1;
  auto multiple_ge2 = [&](std::int64_t base) { return base > 0 && ord % base == 0 && ord / base >= 2; };
  auto fire = [&](const std::string& id) { v.fired.push_back(id); };

  v.galois = galois_by_theorem(f, g);

  if (ord == D && codim1 && d >= 4) {
    fire("thm-2.5-ii-b");
    v.isomorphic_to_pn = true;
  }
  if (v.galois.galois) fire("thm-2.3");
  switch (type.type) {
    case NormalType::I:
      if (ord == D || ord == D - 1) fire("thm-3.3");
      break;
    case NormalType::II:
      if (ord >= 3 && (ord == D || ord == D - 1 || (ord == D - 2 && d >= 5))) fire("thm-3.7");
      break;
    case NormalType::III:
      if (multiple_ge2(D) || multiple_ge2(D - 1)) fire("thm-3.12");
      break;
    case NormalType::IV:
      if (ord == D - 1 || ord == D - 2) fire("thm-3.14");
      break;
    case NormalType::V:
      if (multiple_ge2(D) || multiple_ge2(D - 1)) fire("thm-3.18");
      break;
    default: break;
  }
  if (codim1 && ord >= 3 && (ord == D || ord == D - 1 || (ord == D - 2 && d >= 5))) fire("thm-1.2-i");
  if (codim1 && (multiple_ge2(D) || multiple_ge2(D - 1))) fire("thm-1.2-ii");
  if (ord == D - 1 && n >= 3 && codim1 && d >= 4) fire("thm-2.5-i-c");
  if (n == 2 && d >= 5) {
    auto dim = fix.dimension();
    if (ord == D - 2 && dim && *dim == 1) fire("thm-2.8-a");
    if (ord == D - 1 && fix.contains_line == Tri::Yes) fire("thm-2.8-b");
    if (ord == D && dim && *dim == 0 && fix.point_count && *fix.point_count >= D + 3) fire("thm-2.8-c");
  }

  if (!v.fired.empty()) {
    v.by = v.fired.front();
    v.status = smoothness_verified ? RationalStatus::Rational : RationalStatus::Conditional;
  }
  if (n == 3 && codim && *codim == 2 && fix.contains_line == Tri::Yes && multiple_ge2(D - 1)) {
    v.warnings.push_back("thm-4.5-corrected");
  }
  return v;
}

ClassifiedCase classify(const HomogPoly& f, const DiagAut& g, const FixedLocusReport& fix, bool smoothness_verified) {
  const int n = f.num_vars() - 2;
  const int d = f.degree();
  check_range(n, d);
  ClassifiedCase c;
  auto mult = semi_invariance_multiplier(f, g.eigenvalues());
  if (std::holds_alternative<NotSemiInvariant>(mult)) {
    throw NotAnAutomorphism("automorphism does not preserve the hypersurface");
  }
  c.multiplier = std::get<CycloNum>(mult);
  c.order = order_in_pgl(g);
  c.type = normal_form_type(g, fix);
  if (c.type.type != NormalType::OutOfScope) {
    c.incidence = incidence_case(f, c.type);
    c.claim = divisor_claims(n, d, c.type.type, *c.incidence);
  }
  c.rationality = rationality_verdict(n, d, f, g, fix, c.type, smoothness_verified);
  return c;
}

}  // namespace hypaut
