#include "hypaut/report.hpp"

#include <sstream>

#include "hypaut/errors.hpp"

namespace hypaut {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::int64_t>& v, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string join(const IntSet& s, const char* sep = ", ") {
  return join(std::vector<std::int64_t>(s.begin(), s.end()), sep);
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const IntSet& s) { return json(std::vector<std::int64_t>(s.begin(), s.end())); }

json to_json(const SmoothnessCertificate& c) {
  json j;
  j["verdict"] = to_string(c.verdict);
  j["method"] = to_string(c.method);
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  j["detail"] = c.detail;
  if (c.method == SmoothMethod::MacaulayRank) {
    j["macaulay"] = {{"degree", c.degree_e},   {"rows", c.rows},
                     {"cols", c.cols},         {"blocks", c.blocks},
                     {"exact_blocks", c.exact_blocks}};
  }
  return j;
}

json to_json(const FixedLocusReport& r) {
  json slices = json::array();
  for (const auto& s : r.slices) {
    slices.push_back({{"space", s.space},
                      {"eigenvalue_exp", s.exp},
                      {"dim_projective", s.dim_projective},
                      {"restriction_zero", s.restriction_zero},
                      {"dim", optional_int(s.dim)},
                      {"points", optional_int(s.points)}});
  }
  json j;
  j["slices"] = slices;
  j["codim"] = optional_int(r.codim);
  j["contains_line"] = to_string(r.contains_line);
  j["point_count"] = r.point_count ? json(*r.point_count) : json(nullptr);
  return j;
}

json to_json(const GaloisVerdict& g) {
  json j;
  j["galois"] = g.galois;
  j["block"] = g.block;
  j["complement"] = g.complement;
  j["r"] = g.r;
  j["m"] = g.m;
  j["reason"] = g.reason;
  if (g.galois) j["conclusion"] = "X/<g> rational";
  return j;
}

json to_json(const SymGroup& g) {
  json gens = json::array();
  for (const auto& x : g.generators) gens.push_back(x.to_string());
  json j;
  j["structure"] = g.structure();
  j["invariant_factors"] = g.invariant_factors;
  j["generators"] = gens;
  j["free_rank"] = g.free_rank;
  j["finite"] = g.is_finite();
  j["order"] = g.is_finite() ? json(g.order()) : json(nullptr);
  return j;
}

json to_json(const ClassifiedCase& c) {
  json j;
  j["order"] = c.order;
  j["multiplier"] = c.multiplier.to_string();
  j["type"] = to_string(c.type.type);
  if (c.type.type == NormalType::OutOfScope) {
    j["reason"] = c.type.reason;
  } else {
    j["block"] = c.type.block;
    j["unit"] = c.type.unit;
    j["normal_form"] = c.type.normal.to_string();
    j["permutation"] = c.type.perm;
  }
  if (c.incidence) {
    json partners = json::array();
    for (const auto& p : c.incidence->partners) {
      json row = json::array();
      for (int x : p) row.push_back(x == kUnitPartner ? json("U") : json(x));
      partners.push_back(row);
    }
    std::vector<int> on;
    for (bool b : c.incidence->on) on.push_back(b ? 1 : 0);
    j["incidence"] = {{"on", on}, {"partners", partners}, {"block_monomial", c.incidence->block_monomial}};
  }
  if (c.claim) {
    j["branch"] = c.claim->branch;
    j["divisor_claims"] = c.claim->divisors;
    j["order_divides_claim"] = [&] {
      for (auto v : c.claim->divisors) {
        if (v % c.order == 0) return true;
      }
      return false;
    }();
  }
  const auto& r = c.rationality;
  j["rationality"] = {{"verdict", to_string(r.status)},
                      {"by", r.by.empty() ? json(nullptr) : json(r.by)},
                      {"fired", r.fired},
                      {"isomorphic_to_Pn", r.isomorphic_to_pn}};
  j["galois"] = to_json(r.galois);
  j["warnings"] = r.warnings;
  return j;
}

AnalysisReport analyze(const HomogPoly& f, const DiagAut& g, bool skip_smoothness, std::int64_t macaulay_cap) {
  if (g.num_vars() != f.num_vars()) {
    throw Error("automorphism has " + std::to_string(g.num_vars()) + " entries but the polynomial has " +
                std::to_string(f.num_vars()) + " variables");
  }
  check_range(f.num_vars() - 2, f.degree());
  AnalysisReport r;
  r.f = f;
  r.g = g;
  auto mult = semi_invariance_multiplier(f, g.eigenvalues());
  if (std::holds_alternative<NotSemiInvariant>(mult)) {
    const auto& w = std::get<NotSemiInvariant>(mult);
    throw NotAnAutomorphism("not a semi-invariant: monomials " + w.first.to_string() + " and " +
                            w.second.to_string() + " have different characters");
  }
  if (!skip_smoothness) {
    r.smoothness = smoothness(f, macaulay_cap);
    if (r.smoothness->verdict == SmoothVerdict::Singular) return r;
  }
  r.eigen = eigen_structure(g);
  r.fix = fixed_locus(f, g);
  const bool verified = r.smoothness && r.smoothness->verdict == SmoothVerdict::Smooth;
  r.classified = classify(f, g, r.fix, verified);
  return r;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["input"] = {{"polynomial", r.f.to_string()},
                {"automorphism", r.g.to_string()},
                {"n", r.f.num_vars() - 2},
                {"d", r.f.degree()}};
  j["smoothness"] = r.smoothness ? to_json(*r.smoothness) : json({{"verdict", "Skipped"}});
  if (r.smoothness && r.smoothness->verdict == SmoothVerdict::Singular) return j;
  j["automorphism"] = {{"order", order_in_pgl(r.g)},
                       {"r", r.eigen.r},
                       {"partition", r.eigen.partition},
                       {"eigenspaces", r.eigen.spaces}};
  j["fixed_locus"] = to_json(r.fix);
  j["classification"] = to_json(r.classified);
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "polynomial:   " << r.f.to_string() << "\n";
  out << "automorphism: " << r.g.to_string() << "\n";
  out << "n = " << r.f.num_vars() - 2 << ", d = " << r.f.degree() << "\n";
  if (r.smoothness) {
    out << "smoothness:   " << to_string(r.smoothness->verdict) << " (" << to_string(r.smoothness->method) << ")";
    if (r.smoothness->witness) out << " at [" << join_ints(*r.smoothness->witness) << "]";
    out << "; " << r.smoothness->detail << "\n";
    if (r.smoothness->verdict == SmoothVerdict::Singular) return out.str();
  } else {
    out << "smoothness:   skipped (verdicts are conditional)\n";
  }
  const auto& c = r.classified;
  out << "order:        " << c.order << "\n";
  out << "r(g):         " << r.eigen.r << "\n";
  out << "multiplier t: " << c.multiplier.to_string() << "\n";
  out << "fixed locus:\n";
  for (const auto& s : r.fix.slices) {
    out << "  W{" << join_ints(s.space) << "}: P^" << s.dim_projective;
    if (s.restriction_zero) out << " contained in X";
    out << ", slice " << (s.dim ? "dim " + std::to_string(*s.dim) : std::string("empty"));
    if (s.points && s.dim) out << ", " << *s.points << " point(s)";
    out << "\n";
  }
  out << "  codim " << (r.fix.codim ? std::to_string(*r.fix.codim) : std::string("- (empty)"))
      << ", contains_line " << to_string(r.fix.contains_line);
  if (r.fix.point_count) out << ", point_count " << *r.fix.point_count;
  out << "\n";
  out << "type:         " << to_string(c.type.type);
  if (c.type.type == NormalType::OutOfScope) {
    out << " (" << c.type.reason << ")";
  } else {
    out << ", normal form " << c.type.normal.to_string();
  }
  out << "\n";
  if (c.claim) {
    out << "branch:       " << c.claim->branch << "\n";
    out << "claim:        order divides one of {" << join(c.claim->divisors) << "}\n";
  }
  const auto& rv = c.rationality;
  out << "rationality:  " << to_string(rv.status);
  if (!rv.by.empty()) out << " by " << rv.by;
  if (rv.isomorphic_to_pn) out << " (X/<g> isomorphic to P^n)";
  out << "\n";
  if (rv.fired.size() > 1) {
    out << "  also:";
    for (std::size_t i = 1; i < rv.fired.size(); ++i) out << " " << rv.fired[i];
    out << "\n";
  }
  out << "galois:       ";
  if (rv.galois.galois) {
    out << "yes, block {" << join_ints(rv.galois.block) << "}, r = " << rv.galois.r << ", m = " << rv.galois.m;
  } else {
    out << "not by this criterion (" << rv.galois.reason << ")";
  }
  out << "\n";
  for (const auto& w : rv.warnings) out << "warning:      " << w << "\n";
  return out.str();
}

BoundsReport bounds_report(int n, int d) {
  BoundsReport b;
  b.n = n;
  b.d = d;
  if (n < 1) throw UnsupportedRange("n >= 1 required");
  if (n == 1) {
    b.badr_bars = badr_bars_divisors(d);
  } else {
    check_range(n, d);
    b.codim1 = theorem11_divisors(n, d, 1);
    b.codim2 = theorem11_divisors(n, d, 2);
  }
  b.zheng = zheng_integers(n, d);
  return b;
}

json to_json(const BoundsReport& b) {
  json j;
  j["n"] = b.n;
  j["d"] = b.d;
  j["badr_bars"] = b.badr_bars ? to_json(*b.badr_bars) : json(nullptr);
  j["zheng"] = to_json(b.zheng);
  if (b.codim1) {
    j["theorem11"] = {{"codim1", to_json(*b.codim1)},
                      {"codim1_side_condition", theorem11_side_condition(1)},
                      {"codim2", to_json(*b.codim2)}};
  } else {
    j["theorem11"] = nullptr;
  }
  return j;
}

std::string to_text(const BoundsReport& b) {
  std::ostringstream out;
  out << "n = " << b.n << ", d = " << b.d << "\n";
  out << "badr-bars:       " << (b.badr_bars ? join(*b.badr_bars, " ") : std::string("-")) << "\n";
  out << "zheng:           " << join(b.zheng, " ") << "\n";
  if (b.codim1) {
    out << "theorem11 codim1: " << join(*b.codim1, " ") << "  (" << theorem11_side_condition(1) << ")\n";
    out << "theorem11 codim2: " << join(*b.codim2, " ") << "\n";
  } else {
    out << "theorem11:       -\n";
  }
  return out.str();
}

std::string to_text(const SymGroup& g) {
  std::ostringstream out;
  out << "group: " << g.structure() << "\n";
  if (g.is_finite()) out << "order: " << g.order() << "\n";
  for (const auto& x : g.generators) out << "generator: " << x.to_string() << "\n";
  return out.str();
}

json to_json(const AuditRecord& r) {
  return {{"support", r.support},
          {"element", r.element},
          {"order", r.order},
          {"codim", r.codim},
          {"type", r.type},
          {"branch", r.branch},
          {"branch_divisors", r.branch_divisors},
          {"theorem_divisors", r.theorem_divisors},
          {"pass", r.pass},
          {"failure", r.failure}};
}

json to_json(const AuditReport& r) {
  json recs = json::array();
  for (const auto& x : r.records) recs.push_back(to_json(x));
  json viol = json::array();
  for (const auto& x : r.violations) viol.push_back(to_json(x));
  json witnesses = json::object();
  for (const auto& [k, v] : r.witnesses) witnesses[k] = to_json(v);
  return {{"n", r.n},
          {"d", r.d},
          {"claim", r.claim},
          {"scope", r.scope},
          {"partial", r.partial},
          {"supports",
           {{"total", r.supports_total},
            {"smooth", r.supports_smooth},
            {"singular", r.supports_singular},
            {"inconclusive", r.supports_inconclusive},
            {"capped", r.supports_capped}}},
          {"elements_examined", r.elements_examined},
          {"cases_examined", r.cases_examined},
          {"max_order_by_type", r.max_order_by_type},
          {"witnesses", witnesses},
          {"violations", viol},
          {"records", recs}};
}

std::string to_text(const AuditReport& r) {
  std::ostringstream out;
  out << "audit " << r.claim << " at n = " << r.n << ", d = " << r.d << (r.partial ? " (PARTIAL)" : "") << "\n";
  out << "scope: " << r.scope << "\n";
  out << "supports: " << r.supports_total << " total, " << r.supports_smooth << " smooth, " << r.supports_singular
      << " singular (skipped), " << r.supports_inconclusive << " inconclusive, " << r.supports_capped
      << " over the enumeration cap\n";
  out << "elements examined: " << r.elements_examined << ", cases matching the claim: " << r.cases_examined << "\n";
  out << "max order by type:\n";
  for (const auto& [t, o] : r.max_order_by_type) {
    const auto& w = r.witnesses.at(t);
    out << "  " << t << ": " << o << "  (support " << w.support << ", " << w.element << ")\n";
  }
  out << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) {
    out << "  support " << v.support << " " << v.element << " order " << v.order << " type " << v.type << " branch "
        << v.branch << ": " << v.failure << "\n";
  }
  return out.str();
}

json envelope(const std::string& command, json payload) {
  payload["schema_version"] = kSchemaVersion;
  payload["command"] = command;
  return payload;
}

}  // namespace hypaut
