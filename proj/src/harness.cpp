#include "hypaut/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hypaut/bounds.hpp"
#include "hypaut/errors.hpp"
#include "hypaut/lattice.hpp"

namespace hypaut {

std::vector<Monomial> DeltaSupport::monomials() const {
  std::vector<Monomial> out;
  for (int i = 0; i < num_vars; ++i) out.push_back(near_power_monomial(num_vars, degree, i, sigma[i]));
  return out;
}

HomogPoly DeltaSupport::polynomial() const {
  HomogPoly f(num_vars, degree);
  for (const auto& m : monomials()) f.add_term(m, CycloNum(1L));
  return f;
}

std::string DeltaSupport::id() const {
  std::ostringstream out;
  for (int i = 0; i < num_vars; ++i) out << (i ? "," : "") << i << ">" << sigma[i];
  return out.str();
}

std::vector<int> canonical_functional_graph(const std::vector<int>& sigma) {
  const int m = static_cast<int>(sigma.size());
  std::vector<int> pi(m), inv(m), best, cur(m);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    for (int i = 0; i < m; ++i) inv[pi[i]] = i;
    // relabelled map: pi(i) -> pi(sigma(i))
    for (int j = 0; j < m; ++j) cur[j] = pi[sigma[inv[j]]];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

std::vector<DeltaSupport> delta_supports(int n, int d) {
  const int m = n + 2;
  if (m > 6) throw CapExceeded("delta supports are enumerated for at most 6 variables");
  if (m < 1) throw UnsupportedRange("delta supports need at least one variable");
  std::set<std::vector<int>> seen;
  std::vector<int> sigma(m, 0);
  for (;;) {
    seen.insert(canonical_functional_graph(sigma));
    int i = 0;
    while (i < m && ++sigma[i] == m) sigma[i++] = 0;
    if (i == m) break;
  }
  std::vector<DeltaSupport> out;
  for (const auto& s : seen) out.push_back(DeltaSupport{m, d, s});
  return out;
}

std::vector<std::string> audit_claims() {
  return {"thm-1.1-codim1", "thm-1.1-codim2", "thm-3.3", "thm-3.7", "thm-3.12", "thm-3.14", "thm-3.18", "thm-3.21"};
}

namespace {

struct ClaimFilter {
  std::optional<int> codim;
  std::optional<NormalType> type;
};

ClaimFilter claim_filter(const std::string& claim) {
  if (claim == "thm-1.1-codim1") return {1, std::nullopt};
  if (claim == "thm-1.1-codim2") return {2, std::nullopt};
  if (claim == "thm-3.3") return {std::nullopt, NormalType::I};
  if (claim == "thm-3.7") return {std::nullopt, NormalType::II};
  if (claim == "thm-3.12") return {std::nullopt, NormalType::III};
  if (claim == "thm-3.14") return {std::nullopt, NormalType::IV};
  if (claim == "thm-3.18") return {std::nullopt, NormalType::V};
  if (claim == "thm-3.21") return {std::nullopt, NormalType::VI};
  throw UnsupportedRange("unknown claim '" + claim + "'");
}

// Divisor list of the audited statement and its side condition.
std::vector<std::int64_t> statement_divisors(int n, int d, const std::string& claim) {
  const std::int64_t D = d;
  const std::int64_t q = D * D - 3 * D + 3;
  auto to_vec = [](const IntSet& s) { return std::vector<std::int64_t>(s.begin(), s.end()); };
  if (claim == "thm-1.1-codim1") return to_vec(theorem11_divisors(n, d, 1));
  if (claim == "thm-1.1-codim2") return to_vec(theorem11_divisors(n, d, 2));
  if (claim == "thm-3.3") return {D, D - 1};
  if (claim == "thm-3.7") return {D, D - 1, D - 2};
  if (claim == "thm-3.12") return {(D - 1) * D, (D - 1) * (D - 1), (D - 2) * D};
  if (claim == "thm-3.14") return n <= 4 ? std::vector<std::int64_t>{D - 1, D - 2} : std::vector<std::int64_t>{};
  if (claim == "thm-3.18") {
    if (n == 3) return {(D - 1) * D, (D - 1) * (D - 1), (D - 2) * D, q, (D - 2) * (D - 1)};
    if (n == 2) return {(D - 1) * D, (D - 1) * (D - 1), (D - 2) * D};
    return {};
  }
  return {(D - 1) * (D - 1) * D, (D - 1) * (D - 1) * (D - 1), q * D, q * (D - 1), (D - 2) * (D - 1) * D,
          (D - 2) * (D - 1) * (D - 1)};
}

std::string side_condition_failure(int n, int d, int ord, const std::string& claim) {
  const bool divides_dm2 = d - 2 > 0 && (d - 2) % ord == 0;
  if ((claim == "thm-1.1-codim1" || claim == "thm-3.7") && ord >= 3 && divides_dm2 && n != 2) {
    return "order >= 3 dividing d-2 with n != 2";
  }
  if (claim == "thm-3.14" && ord >= 2 && divides_dm2 && (d - 1) % ord != 0 && n != 4) {
    return "Type IV order dividing d-2 with n != 4";
  }
  return "";
}

bool divides_any(std::int64_t x, const std::vector<std::int64_t>& v) {
  for (auto y : v) {
    if (y % x == 0) return true;
  }
  return false;
}

struct SupportResult {
  SmoothVerdict verdict = SmoothVerdict::Inconclusive;
  bool capped = false;
  std::int64_t elements = 0;
  std::vector<AuditRecord> records;
};

SupportResult audit_support(const DeltaSupport& s, int n, int d, const std::string& claim, const ClaimFilter& filter,
                            const AuditOptions& opt) {
  SupportResult out;
  HomogPoly f = s.polynomial();
  SmoothnessCertificate cert = smoothness(f, opt.macaulay_cap);
  out.verdict = cert.verdict;
  if (cert.verdict != SmoothVerdict::Smooth) return out;
  SymGroup grp = symmetry_group(s.monomials());
  if (!grp.is_finite() || grp.order() > opt.enumeration_cap) {
    out.capped = true;
    return out;
  }
  const auto stmt = statement_divisors(n, d, claim);
  enumerate_elements(
      grp,
      [&](const DiagAut& g) {
        ++out.elements;
        if (g.is_identity()) return;
        FixedLocusReport fix = fixed_locus(f, g);
        if (filter.codim && fix.codim != filter.codim) return;
        AuditRecord rec;
        rec.support = s.id();
        rec.element = g.to_string();
        rec.order = order_in_pgl(g);
        rec.codim = fix.codim.value_or(-1);
        rec.theorem_divisors = stmt;
        TypeResult type = normal_form_type(g, fix);
        rec.type = to_string(type.type);
        if (filter.type && type.type != *filter.type) return;
        std::vector<std::string> failures;
        if (type.type == NormalType::OutOfScope) {
          failures.push_back("unclassified: " + type.reason);
        } else {
          try {
            Incidence inc = incidence_case(f, type);
            BranchClaim bc = divisor_claims(n, d, type.type, inc);
            rec.branch = bc.branch;
            rec.branch_divisors = bc.divisors;
            if (!divides_any(rec.order, bc.divisors)) {
              failures.push_back(bc.divisors.empty() ? "branch proved impossible" : "order does not divide branch claim");
            }
          } catch (const VertexViolatesSmoothness& e) {
            failures.push_back(e.what());
          }
        }
        if (!divides_any(rec.order, stmt)) failures.push_back("order does not divide the theorem list");
        std::string side = side_condition_failure(n, d, rec.order, claim);
        if (!side.empty()) failures.push_back(side);
        if (!failures.empty()) {
          rec.pass = false;
          rec.failure = failures.front();
          for (std::size_t i = 1; i < failures.size(); ++i) rec.failure += "; " + failures[i];
        }
        out.records.push_back(std::move(rec));
      },
      {}, opt.enumeration_cap);
  return out;
}

}  // namespace

AuditReport audit_theorem(int n, int d, const std::string& claim, const AuditOptions& options) {
  check_range(n, d);
  const ClaimFilter filter = claim_filter(claim);
  AuditReport rep;
  rep.n = n;
  rep.d = d;
  rep.claim = claim;
  rep.scope = "delta supports {X_i^(d-1) X_sigma(i)} up to relabelling, all coefficients 1";
  const auto supports = delta_supports(n, d);
  rep.supports_total = static_cast<int>(supports.size());

  std::vector<SupportResult> results(supports.size());
  std::vector<std::string> errors(supports.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= supports.size()) return;
      try {
        results[i] = audit_support(supports[i], n, d, claim, filter, options);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(supports.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (!errors[i].empty()) throw Error("audit failed on support " + supports[i].id() + ": " + errors[i]);
    const auto& r = results[i];
    switch (r.verdict) {
      case SmoothVerdict::Smooth: ++rep.supports_smooth; break;
      case SmoothVerdict::Singular: ++rep.supports_singular; break;
      case SmoothVerdict::Inconclusive: ++rep.supports_inconclusive; break;
    }
    if (r.capped) {
      ++rep.supports_capped;
      rep.partial = true;
    }
    if (r.verdict == SmoothVerdict::Inconclusive) rep.partial = true;
    rep.elements_examined += r.elements;
    for (const auto& rec : r.records) {
      ++rep.cases_examined;
      rep.records.push_back(rec);
      if (!rec.pass) rep.violations.push_back(rec);
      auto it = rep.max_order_by_type.find(rec.type);
      if (it == rep.max_order_by_type.end() || rec.order > it->second) {
        rep.max_order_by_type[rec.type] = rec.order;
        rep.witnesses[rec.type] = rec;
      }
    }
  }
  return rep;
}

Witness example_witness(int d) {
  if (d < 3) throw UnsupportedRange("example_witness requires d >= 3");
  HomogPoly f(5, d);
  f.add_term(power_monomial(5, 0, d), CycloNum(1L));
  f.add_term(power_monomial(5, 1, d), CycloNum(1L));
  f.add_term(power_monomial(5, 2, d), CycloNum(1L));
  f.add_term(near_power_monomial(5, d, 3, 0), CycloNum(1L));
  f.add_term(near_power_monomial(5, d, 4, 1), CycloNum(1L));
  DiagAut g{d * (d - 1), {d, d, 1, 0, 0}};
  return {f, g};
}

namespace {

struct BruteSetup {
  int m = 0;
  std::int64_t modulus = 0;
  IntMatrix rows;  // all difference rows
};

std::optional<BruteSetup> brute_setup(const std::vector<Monomial>& support) {
  if (support.empty()) throw Error("empty support");
  BruteSetup s;
  s.m = static_cast<int>(support.front().exps.size());
  for (std::size_t k = 1; k < support.size(); ++k) {
    std::vector<std::int64_t> row(s.m);
    for (int i = 0; i < s.m; ++i) row[i] = support[k].exps[i] - support[0].exps[i];
    s.rows.push_back(std::move(row));
  }
  const int r = s.m - 1;
  if (r == 0) {
    s.modulus = 1;
    return s;
  }
  // Greedily pick r rows whose restriction to the first r columns is nonsingular.
  std::vector<int> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == r) {
      IntMatrix sq;
      for (int k : chosen) sq.emplace_back(s.rows[k].begin(), s.rows[k].begin() + r);
      std::int64_t det = bareiss_determinant(sq);
      if (det != 0) {
        s.modulus = std::llabs(det);
        return true;
      }
      return false;
    }
    for (std::size_t k = start; k < s.rows.size(); ++k) {
      chosen.push_back(static_cast<int>(k));
      if (pick(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!pick(0)) return std::nullopt;
  return s;
}

std::optional<std::int64_t> cost_of(const BruteSetup& s) {
  std::int64_t c = 1;
  for (int i = 0; i < s.m - 1; ++i) {
    if (__builtin_mul_overflow(c, s.modulus, &c)) return std::nullopt;
  }
  return c;
}

// Visits every y in (Z/M)^(m-1) x {0} with all rows . y = 0 mod M.
void brute_visit(const BruteSetup& s, const std::function<void(const std::vector<int>&)>& visit) {
  const int r = s.m - 1;
  const std::int64_t M = s.modulus;
  std::vector<int> y(s.m, 0);
  for (;;) {
    bool ok = true;
    for (const auto& row : s.rows) {
      std::int64_t acc = 0;
      for (int i = 0; i < r; ++i) acc += row[i] * y[i];
      if (acc % M != 0) {
        ok = false;
        break;
      }
    }
    if (ok) visit(y);
    int i = 0;
    while (i < r && ++y[i] == M) y[i++] = 0;
    if (i == r) break;
  }
}

}  // namespace

std::optional<std::int64_t> brute_force_cost(const std::vector<Monomial>& support) {
  auto s = brute_setup(support);
  if (!s) return std::nullopt;
  return cost_of(*s);
}

std::optional<std::int64_t> brute_force_group_order(const std::vector<Monomial>& support, std::int64_t cap) {
  auto s = brute_setup(support);
  if (!s) return std::nullopt;
  auto cost = cost_of(*s);
  if (!cost || *cost > cap) return std::nullopt;
  std::int64_t count = 0;
  brute_visit(*s, [&](const std::vector<int>&) { ++count; });
  return count;
}

int brute_force_max_order(const DeltaSupport& support, std::optional<int> codim_filter, std::int64_t cap) {
  auto s = brute_setup(support.monomials());
  if (!s) throw CapExceeded("symmetry group is infinite");
  auto cost = cost_of(*s);
  if (!cost || *cost > cap) throw CapExceeded("brute-force search exceeds cap");
  HomogPoly f = support.polynomial();
  int best = 0;
  brute_visit(*s, [&](const std::vector<int>& y) {
    DiagAut g{static_cast<int>(s->modulus), y};
    int ord = order_in_pgl(g);
    if (codim_filter) {
      if (ord == 1) return;
      if (fixed_locus(f, g).codim != codim_filter) return;
    }
    best = std::max(best, ord);
  });
  return best;
}

}  // namespace hypaut
