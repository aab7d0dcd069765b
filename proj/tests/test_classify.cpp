#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hypaut/bounds.hpp"
#include "hypaut/classify.hpp"
#include "hypaut/errors.hpp"
#include "hypaut/harness.hpp"

using hypaut::NormalType;

namespace {

hypaut::HomogPoly P(const std::string& s, int vars = 0) { return hypaut::parse_poly(s, vars); }
hypaut::DiagAut G(const std::string& s) { return hypaut::parse_diag(s); }

hypaut::TypeResult type_of(const hypaut::HomogPoly& f, const hypaut::DiagAut& g) {
  return hypaut::normal_form_type(g, hypaut::fixed_locus(f, g));
}

int block_size(NormalType t) {
  if (t == NormalType::I) return 1;
  if (t == NormalType::II || t == NormalType::III) return 2;
  return 3;
}

}  // namespace

TEST_CASE("normal form types") {
  auto fermat3 = P("X0^3 + X1^3 + X2^3 + X3^3");
  auto t1 = type_of(fermat3, G("diag(z3, 1, 1, 1)"));
  CHECK(t1.type == NormalType::I);
  CHECK(t1.block == std::vector<int>{0});
  CHECK(t1.unit == std::vector<int>{1, 2, 3});

  auto w = hypaut::example_witness(4);
  auto tv = type_of(w.f, w.g);
  CHECK(tv.type == NormalType::V);
  CHECK(tv.block == std::vector<int>{0, 1, 2});
  CHECK(tv.unit == std::vector<int>{3, 4});

  auto fermat5 = P("X0^5 + X1^5 + X2^5 + X3^5 + X4^5");
  CHECK(type_of(fermat5, G("diag(z5, z5^2, z5^3, z5^4, 1)")).type == NormalType::OutOfScope);
  CHECK(type_of(fermat5, hypaut::DiagAut::identity(5)).type == NormalType::OutOfScope);

  auto quintic = P("X0^5 + X1^5 + X2^5 + X3^5");
  CHECK(type_of(quintic, G("diag(z5, z5^2, 1, 1)")).type == NormalType::III);
  CHECK(type_of(quintic, G("diag(z5, z5, 1, 1)")).type == NormalType::II);
  CHECK(type_of(fermat5, G("diag(z5, z5^2, z5^3, 1, 1)")).type == NormalType::OutOfScope);
  auto t2 = type_of(fermat5, G("diag(z5, z5, z5, 1, 1)"));
  CHECK(t2.type == NormalType::II);
  CHECK(t2.unit == std::vector<int>{0, 1, 2});
  auto plane = P("X0^4 + X1^4 + X2^4 + X0*X3^3 + X1*X4^3 + X2*X5^3");
  auto t4 = type_of(plane, G("diag(z3, z3, z3, 1, 1, 1)"));
  CHECK(t4.type == NormalType::IV);
  CHECK(t4.unit == std::vector<int>{3, 4, 5});
}

TEST_CASE("incidence of the Klein configuration") {
  hypaut::TypeResult t;
  t.type = NormalType::VI;
  t.block = {0, 1, 2};
  auto inc = hypaut::incidence_case(P("X0^3*X1 + X1^3*X2 + X2^3*X0"), t);
  CHECK(inc.on == std::vector<bool>{true, true, true});
  CHECK(inc.partners[0] == std::set<int>{1});
  CHECK(inc.partners[1] == std::set<int>{2});
  CHECK(inc.partners[2] == std::set<int>{0});
  CHECK(inc.block_monomial);
}

TEST_CASE("incidence with unit partners") {
  auto w = hypaut::example_witness(4);
  auto t = type_of(w.f, w.g);
  auto inc = hypaut::incidence_case(w.f, t);
  CHECK(inc.on == std::vector<bool>{false, false, false});
  CHECK(inc.block_monomial);
  hypaut::TypeResult line;
  line.type = NormalType::II;
  line.block = {3, 4};
  auto li = hypaut::incidence_case(w.f, line);
  CHECK(li.on == std::vector<bool>{true, true});
  CHECK(li.partners[0] == std::set<int>{hypaut::kUnitPartner});
  CHECK_FALSE(li.block_monomial);
  hypaut::TypeResult cone;
  cone.type = NormalType::I;
  cone.block = {3};
  CHECK_THROWS_AS(hypaut::incidence_case(P("X0^3 + X1^3 + X2^3", 4), cone), hypaut::VertexViolatesSmoothness);
}

TEST_CASE("divisor claims for simple branches") {
  hypaut::Incidence none1{{false}, {{}}, true};
  auto c = hypaut::divisor_claims(2, 5, NormalType::I, none1);
  CHECK(c.divisors == std::vector<std::int64_t>{5});
  hypaut::Incidence on1{{true}, {{hypaut::kUnitPartner}}, false};
  CHECK(hypaut::divisor_claims(3, 5, NormalType::I, on1).divisors == std::vector<std::int64_t>{4});

  hypaut::Incidence none3{{false, false, false}, {{}, {}, {}}, true};
  CHECK(hypaut::divisor_claims(3, 4, NormalType::V, none3).divisors == std::vector<std::int64_t>{12});
  CHECK(hypaut::divisor_claims(4, 4, NormalType::V, none3).divisors.empty());

  // reached only after swapping the two block vertices
  hypaut::Incidence swapped{{true, false}, {{hypaut::kUnitPartner}, {}}, true};
  auto s = hypaut::divisor_claims(3, 5, NormalType::III, swapped);
  CHECK(s.divisors == std::vector<std::int64_t>{20});
  CHECK(s.block_perm == std::vector<int>{1, 0});
}

TEST_CASE("every partner configuration reaches a listed branch") {
  for (int n : {2, 3, 4})
    for (int d : {3, 5, 6}) {
      if (n == 2 && d == 4) continue;
      for (NormalType t : {NormalType::I, NormalType::II, NormalType::III, NormalType::IV, NormalType::V, NormalType::VI}) {
        const int k = block_size(t);
        for (int mask = 0; mask < (1 << k); ++mask) {
          std::vector<int> pick(static_cast<std::size_t>(k), 0);
          for (;;) {
            hypaut::Incidence inc;
            bool valid = true;
            for (int i = 0; i < k; ++i) {
              bool on = (mask >> i) & 1;
              inc.on.push_back(on);
              std::set<int> s;
              if (on) {
                int p = pick[i] == 0 ? hypaut::kUnitPartner : pick[i] - 1;
                if (p == i) valid = false;
                s.insert(p);
              }
              inc.partners.push_back(s);
            }
            for (bool bm : {false, true}) {
              if (!valid) break;
              inc.block_monomial = bm;
              auto c = hypaut::divisor_claims(n, d, t, inc);
              INFO("n=" << n << " d=" << d << " type " << hypaut::to_string(t) << " mask " << mask);
              CHECK(c.branch.find("unlisted") == std::string::npos);
            }
            int i = 0;
            while (i < k && ++pick[i] == k + 1) pick[i++] = 0;
            if (i == k) break;
          }
        }
      }
    }
}

TEST_CASE("Type VI branches at n = 2 recover the codimension two list") {
  for (int d = 5; d <= 9; ++d) {
    const std::int64_t a = d - 1, b = d - 2, q = d * d - 3 * d + 3;
    hypaut::IntSet listed{a * a * d, b * a * d, q * d, a * a * a, q * a, b * a * a};
    CHECK(hypaut::theorem11_divisors(2, d, 2) == listed);
    hypaut::IntSet branch_union;
    const int U = hypaut::kUnitPartner;
    const std::vector<std::pair<std::vector<bool>, std::vector<int>>> configs = {
        {{false, false, false}, {U, U, U}}, {{false, false, true}, {U, U, 0}}, {{false, false, true}, {U, U, U}},
        {{false, true, true}, {U, 0, 0}},   {{false, true, true}, {U, 0, 1}},  {{false, true, true}, {U, 0, U}},
        {{false, true, true}, {U, 2, 1}},   {{false, true, true}, {U, 2, U}},  {{false, true, true}, {U, U, U}},
        {{true, true, true}, {1, 0, 0}},    {{true, true, true}, {1, 0, U}},   {{true, true, true}, {1, 2, 0}},
        {{true, true, true}, {1, 2, U}},    {{true, true, true}, {1, U, 1}},   {{true, true, true}, {1, U, U}},
        {{true, true, true}, {U, U, U}}};
    for (const auto& [on, p] : configs) {
      auto l = hypaut::branch_table(2, d, NormalType::VI, on, p, true);
      REQUIRE(l.has_value());
      branch_union.insert(l->begin(), l->end());
    }
    for (auto x : branch_union) CHECK(hypaut::divides_some(x, listed));
    for (auto x : listed) CHECK(branch_union.count(x) == 1);
  }
}

TEST_CASE("range checks") {
  hypaut::Incidence inc{{false}, {{}}, true};
  CHECK_THROWS_AS(hypaut::divisor_claims(2, 4, NormalType::I, inc), hypaut::UnsupportedRange);
  CHECK_THROWS_AS(hypaut::divisor_claims(1, 5, NormalType::I, inc), hypaut::UnsupportedRange);
  CHECK_THROWS_AS(hypaut::divisor_claims(3, 2, NormalType::I, inc), hypaut::UnsupportedRange);
  CHECK_NOTHROW(hypaut::check_range(3, 4));
  try {
    hypaut::check_range(2, 4);
  } catch (const hypaut::UnsupportedRange& e) {
    CHECK(std::string(e.what()).find("(n,d)=(2,4) excluded") != std::string::npos);
  }
}

TEST_CASE("rationality of a Fermat reflection") {
  auto f = P("X0^5 + X1^5 + X2^5 + X3^5");
  auto g = G("diag(z5, 1, 1, 1)");
  auto c = hypaut::classify(f, g, hypaut::fixed_locus(f, g), true);
  CHECK(c.order == 5);
  CHECK(c.type.type == NormalType::I);
  CHECK(c.rationality.status == hypaut::RationalStatus::Rational);
  CHECK(c.rationality.by == "thm-2.5-ii-b");
  CHECK(c.rationality.galois.galois);
  auto cond = hypaut::classify(f, g, hypaut::fixed_locus(f, g), false);
  CHECK(cond.rationality.status == hypaut::RationalStatus::Conditional);
  CHECK(cond.rationality.by == "thm-2.5-ii-b");
}

TEST_CASE("rationality of the witness") {
  for (int d = 3; d <= 5; ++d) {
    auto w = hypaut::example_witness(d);
    auto c = hypaut::classify(w.f, w.g, hypaut::fixed_locus(w.f, w.g), true);
    CHECK(c.order == d * (d - 1));
    CHECK(c.multiplier == w.g.eigenvalues()[0]);
    CHECK(c.type.type == NormalType::V);
    CHECK(c.rationality.status == hypaut::RationalStatus::Rational);
    CHECK(c.rationality.by == "thm-3.18");
    CHECK(std::find(c.rationality.warnings.begin(), c.rationality.warnings.end(), "thm-4.5-corrected") !=
          c.rationality.warnings.end());
  }
}

TEST_CASE("no theorem applies to the order 51 loop element") {
  auto f = P("X0^4*X1 + X1^4*X2 + X2^4*X3 + X3^4*X0");
  auto g = G("diag(z51^13, z51^12, z51^16, 1)");
  auto fix = hypaut::fixed_locus(f, g);
  auto c = hypaut::classify(f, g, fix, true);
  CHECK(c.order == 51);
  CHECK(c.type.type == NormalType::VI);
  CHECK(fix.codim == 2);
  CHECK(fix.point_count == 4);
  CHECK(c.rationality.status == hypaut::RationalStatus::Unknown);
  CHECK(c.rationality.fired.empty());
  REQUIRE(c.claim.has_value());
  CHECK_FALSE(hypaut::divides_some(51, hypaut::IntSet(c.claim->divisors.begin(), c.claim->divisors.end())));
  CHECK_FALSE(hypaut::divides_some(51, hypaut::theorem11_divisors(2, 5, 2)));
  // (d-2)(d^2-2d+2) = 51 at d = 5
  CHECK(hypaut::divides_some(51, hypaut::zheng_integers(2, 5)));
}

TEST_CASE("plane curve bounds") {
  CHECK(hypaut::badr_bars_divisors(4) == hypaut::IntSet{7, 8, 9, 12});
  CHECK(hypaut::badr_bars_divisors(5) == hypaut::IntSet{13, 15, 16, 20});
  CHECK_THROWS(hypaut::badr_bars_divisors(3));
  auto z = hypaut::zheng_integers(1, 4);
  for (auto x : {4, 7, 8, 9, 12}) CHECK(z.count(x) == 1);
  for (int d = 4; d <= 12; ++d)
    for (auto x : hypaut::badr_bars_divisors(d)) CHECK(hypaut::divides_some(x, hypaut::zheng_integers(1, d)));
}

TEST_CASE("codimension lists") {
  CHECK(hypaut::theorem11_divisors(2, 5, 1) == hypaut::IntSet{3, 4, 5});
  CHECK(hypaut::theorem11_divisors(3, 6, 1) == hypaut::IntSet{4, 5, 6});
  CHECK_FALSE(hypaut::theorem11_side_condition(1).empty());
  CHECK(hypaut::divides_some(6, {12, 5}));
  CHECK_FALSE(hypaut::divides_some(7, {12, 5}));
  // (d-1)^n + ... style integers from item (i): ((d-1)^(n+2) - (-1)^(n+2)) / d
  for (int n = 1; n <= 4; ++n)
    for (int d = 3; d <= 8; ++d) {
      std::int64_t p = 1;
      for (int i = 0; i < n + 2; ++i) p *= (d - 1);
      std::int64_t item = (p - ((n % 2 == 0) ? 1 : -1)) / d;
      CHECK(hypaut::zheng_integers(n, d).count(item) == 1);
    }
}
