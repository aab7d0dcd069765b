// Acceptance checks.  Each criterion prints detail lines prefixed with "  "
// followed by exactly one line starting with PASS or FAIL.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hypaut/bounds.hpp"
#include "hypaut/classify.hpp"
#include "hypaut/errors.hpp"
#include "hypaut/geometry.hpp"
#include "hypaut/harness.hpp"

using namespace hypaut;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

std::string fermat(int m, int d) {
  std::string s;
  for (int i = 0; i < m; ++i) s += (i ? " + X" : "X") + std::to_string(i) + "^" + std::to_string(d);
  return s;
}

std::string join(const IntSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto x : s) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << "}";
  return out.str();
}

Outcome criterion1() {
  Outcome o;
  o.summary = "Klein quartic symmetry group is cyclic of order d^2-3d+3 = 7";
  auto grp = symmetry_group(parse_poly("X0^3*X1 + X1^3*X2 + X2^3*X0").support());
  o.notes.push_back("structure " + grp.structure() + ", generator " + grp.generators.at(0).to_string());
  o.require(grp.is_finite() && grp.order() == 7, "order 7");
  o.require(grp.invariant_factors.size() == 1, "cyclic");
  o.require(badr_bars_divisors(4).count(4 * 4 - 3 * 4 + 3) == 1, "7 is in the plane quartic list");
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.summary = "Fermat symmetry groups have order d^(n+1); brute force agrees at d = 3";
  for (int d = 3; d <= 5; ++d)
    for (int m = 3; m <= 5; ++m) {
      auto f = parse_poly(fermat(m, d));
      auto grp = symmetry_group(f.support());
      std::int64_t expect = 1;
      for (int i = 1; i < m; ++i) expect *= d;
      o.require(grp.order() == expect, "order at d=" + std::to_string(d) + ", m=" + std::to_string(m));
      if (d == 3) {
        auto bf = brute_force_group_order(f.support(), 100000000);
        o.require(bf.has_value() && *bf == expect, "brute force at m=" + std::to_string(m));
      }
    }
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.summary = "explicit witness: order d(d-1), t = first eigenvalue, smooth, codim 2 with a line, Rational by thm-3.18";
  for (int d = 3; d <= 5; ++d) {
    auto w = example_witness(d);
    const std::string tag = " at d=" + std::to_string(d);
    o.require(order_in_pgl(w.g) == d * (d - 1), "order" + tag);
    auto t = semi_invariance_multiplier(w.f, w.g.eigenvalues());
    o.require(std::holds_alternative<CycloNum>(t) && std::get<CycloNum>(t) == w.g.eigenvalues()[0], "multiplier" + tag);
    auto cert = smoothness(w.f);
    o.require(cert.verdict == SmoothVerdict::Smooth, "smoothness" + tag);
    auto fix = fixed_locus(w.f, w.g);
    o.require(fix.codim == 2, "codim" + tag);
    o.require(fix.contains_line == Tri::Yes, "contains_line" + tag);
    auto c = classify(w.f, w.g, fix, cert.verdict == SmoothVerdict::Smooth);
    o.require(c.rationality.status == RationalStatus::Rational && c.rationality.by == "thm-3.18", "rationality" + tag);
    bool warned = false;
    for (const auto& x : c.rationality.warnings) warned |= x == "thm-4.5-corrected";
    o.require(warned, "thm-4.5-corrected warning" + tag);
    o.notes.push_back("d=" + std::to_string(d) + ": " + w.g.to_string() + ", t = " + c.multiplier.to_string() +
                      ", Macaulay degree " + std::to_string(cert.degree_e) + ", " + std::to_string(cert.blocks) +
                      " blocks");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  o.summary = "codimension 1 and 2 audits over smooth delta supports report zero violations";
  const std::vector<std::pair<int, int>> ranges = {{2, 5}, {2, 6}, {3, 4}, {3, 5}};
  for (auto [n, d] : ranges) {
    for (const std::string claim : {"thm-1.1-codim1", "thm-1.1-codim2"}) {
      auto rep = audit_theorem(n, d, claim);
      std::ostringstream line;
      line << "audit(n=" << n << ", d=" << d << ", " << claim << "): " << rep.supports_smooth << " smooth supports, "
           << rep.cases_examined << " cases, " << rep.violations.size() << " violations";
      if (rep.partial) line << " (partial)";
      if (!rep.violations.empty()) {
        std::set<int> orders;
        std::set<std::string> supports;
        for (const auto& v : rep.violations) {
          orders.insert(v.order);
          supports.insert(v.support);
        }
        line << "; orders";
        for (int x : orders) line << " " << x;
        line << "; supports";
        for (const auto& s : supports) line << " " << s;
      }
      o.notes.push_back(line.str());
      o.require(rep.violations.empty() && !rep.partial, "audit(" + std::to_string(n) + "," + std::to_string(d) + ") " + claim);
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.summary = "Fermat hypersurfaces (d <= 5, n <= 2) smooth by MacaulayRank; cone singular at [0:0:0:1]";
  for (int d = 2; d <= 5; ++d)
    for (int n = 0; n <= 2; ++n) {
      auto c = smoothness(parse_poly(fermat(n + 2, d)));
      o.require(c.verdict == SmoothVerdict::Smooth && c.method == SmoothMethod::MacaulayRank,
                "Fermat d=" + std::to_string(d) + ", n=" + std::to_string(n));
    }
  auto cone = smoothness(parse_poly("X0^3 + X1^3 + X2^3", 4));
  o.require(cone.verdict == SmoothVerdict::Singular, "cone singular");
  o.require(cone.witness && *cone.witness == std::vector<int>{0, 0, 0, 1}, "cone witness");
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.summary = "plane curve and codimension 2 lists divide integers of the general bound";
  for (int d = 4; d <= 12; ++d) {
    auto z1 = zheng_integers(1, d);
    for (auto x : badr_bars_divisors(d)) {
      if (!divides_some(x, z1)) {
        o.pass = false;
        o.notes.push_back("offending (n=1, d=" + std::to_string(d) + ", " + std::to_string(x) + ")");
      }
    }
    for (int n = 2; n <= 4; ++n) {
      if (n == 2 && d == 4) continue;
      auto z = zheng_integers(n, d);
      for (auto x : theorem11_divisors(n, d, 2)) {
        if (!divides_some(x, z)) {
          o.pass = false;
          o.notes.push_back("offending (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", " + std::to_string(x) +
                            ") vs " + join(z));
        }
      }
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.summary = "property suites: field axioms, Euler relation, apply_diagonal, order invariance, SNF vs brute force";
  std::mt19937 rng(12345);
  const int levels[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 20};
  auto rand_elt = [&]() {
    int level = levels[rng() % (sizeof(levels) / sizeof(int))];
    std::vector<mpq_class> c(static_cast<std::size_t>(level));
    for (auto& q : c) {
      q = mpq_class(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
      q.canonicalize();
    }
    return CycloNum::from_power_coeffs(level, c);
  };
  int axiom_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    CycloNum a = rand_elt(), b = rand_elt(), c = rand_elt();
    bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
              a * (b + c) == a * b + a * c && (a - a).is_zero() && a * CycloNum(1) == a &&
              fixtures::close(fixtures::eval_c(a * b), fixtures::eval_c(a) * fixtures::eval_c(b));
    if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
    if (!ok) ++axiom_failures;
  }
  o.require(axiom_failures == 0, "field axioms");
  o.notes.push_back("field axioms: 1000 random triples, " + std::to_string(axiom_failures) + " failures");

  int euler_bad = 0, mult_bad = 0;
  for (const auto& s : fixtures::polynomials()) {
    auto f = parse_poly(s);
    HomogPoly sum(f.num_vars(), f.degree());
    for (int i = 0; i < f.num_vars(); ++i) sum = sum + times_variable(partial(f, i), i);
    if (!(sum == f * CycloNum(f.degree()))) ++euler_bad;
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<CycloNum> a, b, ab;
      for (int i = 0; i < f.num_vars(); ++i) {
        a.push_back(CycloNum::root_of_unity(12, static_cast<long>(rng() % 12)));
        b.push_back(CycloNum(1 + static_cast<long>(rng() % 4)) * CycloNum::root_of_unity(10, static_cast<long>(rng() % 10)));
        ab.push_back(a.back() * b.back());
      }
      if (!(apply_diagonal(apply_diagonal(f, b), a) == apply_diagonal(f, ab))) ++mult_bad;
    }
  }
  o.require(euler_bad == 0, "Euler relation");
  o.require(mult_bad == 0, "apply_diagonal multiplicativity");
  o.notes.push_back("Euler relation and multiplicativity on " + std::to_string(fixtures::polynomials().size()) +
                    " fixtures");

  int order_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    DiagAut g;
    g.level = 1 + static_cast<int>(rng() % 60);
    int m = 2 + static_cast<int>(rng() % 5);
    for (int k = 0; k < m; ++k) g.exps.push_back(static_cast<int>(rng() % g.level));
    int ord = order_in_pgl(g);
    DiagAut h = g;
    int c = static_cast<int>(rng() % g.level);
    for (auto& e : h.exps) e = (e + c) % g.level;
    std::shuffle(h.exps.begin(), h.exps.end(), rng);
    if (order_in_pgl(h) != ord || order_in_pgl(g.at_level(2 * g.level)) != ord) ++order_bad;
    if (!g.power(ord).is_identity()) ++order_bad;
  }
  o.require(order_bad == 0, "order_in_pgl invariance");

  int compared = 0, snf_bad = 0;
  auto compare = [&](const std::vector<Monomial>& supp) {
    auto cost = brute_force_cost(supp);
    if (!cost || *cost > 1000000) return;
    auto grp = symmetry_group(supp);
    auto bf = brute_force_group_order(supp);
    ++compared;
    if (!bf || !grp.is_finite() || *bf != grp.order()) ++snf_bad;
  };
  for (int n = 0; n <= 3; ++n)
    for (int d = 3; d <= 6; ++d)
      for (const auto& s : delta_supports(n, d)) compare(s.monomials());
  for (const auto& s : fixtures::polynomials()) compare(parse_poly(s).support());
  for (int d = 3; d <= 5; ++d)
    for (int m = 2; m <= 5; ++m) compare(parse_poly(fermat(m, d)).support());
  o.require(snf_bad == 0, "SNF vs brute force");
  o.notes.push_back("SNF vs brute force: " + std::to_string(compared) + " supports, " + std::to_string(snf_bad) +
                    " disagreements");
  return o;
}

struct Criterion {
  int id;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-7)")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {{1, 1, criterion1},  {2, 10, criterion2}, {3, 30, criterion3},
                                      {4, 600, criterion4}, {5, 60, criterion5}, {6, 1, criterion6},
                                      {7, 60, criterion7}};
  bool all_pass = true;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.notes.push_back("over time budget of " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    }
    for (const auto& n : o.notes) std::cout << "  " << n << "\n";
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << o.summary << " (" << t.str() << " s)\n";
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
