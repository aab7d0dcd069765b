#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hypaut/errors.hpp"
#include "hypaut/poly.hpp"

using hypaut::CycloNum;
using hypaut::HomogPoly;
using hypaut::Monomial;

namespace {

CycloNum zeta(int n, long k) { return CycloNum::root_of_unity(n, k); }

std::vector<std::complex<double>> random_point(std::mt19937& rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> p;
  for (int i = 0; i < m; ++i) p.emplace_back(u(rng), u(rng));
  return p;
}

}  // namespace

TEST_CASE("parsing and canonical printing") {
  auto f = hypaut::parse_poly("X1^3 + X0^3 + X2^3");
  CHECK(f.num_vars() == 3);
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "X0^3 + X1^3 + X2^3");
  auto g = hypaut::parse_poly("X0^2*X1 - X0^2*X1 + X2^3");
  CHECK(g.terms().size() == 1);
  auto h = hypaut::parse_poly("X0^3", 5);
  CHECK(h.num_vars() == 5);
  CHECK(hypaut::parse_poly("z3*X0^2*X1").coefficient(Monomial{{2, 1}}) == zeta(3, 1));
  CHECK_THROWS_AS(hypaut::parse_poly("X0^3 +"), hypaut::SyntaxError);
  CHECK_THROWS_AS(hypaut::parse_poly("X3^2", 2), hypaut::SyntaxError);
}

TEST_CASE("non-homogeneous input names the offending monomials") {
  try {
    hypaut::parse_poly("X0^3 + X1^2");
    FAIL("expected NotHomogeneous");
  } catch (const hypaut::NotHomogeneous& e) {
    CHECK(e.first.degree() == 3);
    CHECK(e.second.degree() == 2);
    CHECK(e.second.to_string() == "X1^2");
  }
}

TEST_CASE("grlex order") {
  hypaut::GrLex lt;
  CHECK(lt(Monomial{{3, 0, 0}}, Monomial{{2, 1, 0}}));
  CHECK(lt(Monomial{{2, 1, 0}}, Monomial{{2, 0, 1}}));
  CHECK(lt(Monomial{{0, 0, 4}}, Monomial{{1, 0, 0}}));
  CHECK_FALSE(lt(Monomial{{1, 1, 1}}, Monomial{{1, 1, 1}}));
}

TEST_CASE("text form round trips for all fixtures") {
  for (const auto& s : fixtures::polynomials()) {
    auto f = hypaut::parse_poly(s);
    CHECK(hypaut::parse_poly(f.to_string(), f.num_vars()) == f);
  }
}

TEST_CASE("Euler relation on all fixtures") {
  for (const auto& s : fixtures::polynomials()) {
    auto f = hypaut::parse_poly(s);
    HomogPoly sum(f.num_vars(), f.degree());
    for (int i = 0; i < f.num_vars(); ++i) sum = sum + hypaut::times_variable(hypaut::partial(f, i), i);
    CHECK(sum == f * CycloNum(f.degree()));
  }
}

TEST_CASE("partial derivatives") {
  auto f = hypaut::parse_poly("X0^3*X1 + 2*X1^4");
  CHECK(hypaut::partial(f, 0) == hypaut::parse_poly("3*X0^2*X1", 2));
  CHECK(hypaut::partial(f, 1) == hypaut::parse_poly("X0^3 + 8*X1^3", 2));
}

TEST_CASE("apply_diagonal agrees with evaluation at the scaled point") {
  std::mt19937 rng(5);
  for (const auto& s : fixtures::polynomials()) {
    auto f = hypaut::parse_poly(s);
    std::vector<CycloNum> lam;
    for (int i = 0; i < f.num_vars(); ++i) lam.push_back(zeta(12, static_cast<long>(rng() % 12)));
    auto af = hypaut::apply_diagonal(f, lam);
    auto p = random_point(rng, f.num_vars());
    auto q = p;
    for (int i = 0; i < f.num_vars(); ++i) q[i] *= fixtures::eval_c(lam[i]);
    CHECK(fixtures::close(fixtures::eval_c(af, p), fixtures::eval_c(f, q)));
  }
}

TEST_CASE("apply_diagonal is multiplicative") {
  std::mt19937 rng(11);
  for (const auto& s : fixtures::polynomials()) {
    auto f = hypaut::parse_poly(s);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<CycloNum> a, b, ab;
      for (int i = 0; i < f.num_vars(); ++i) {
        a.push_back(zeta(20, static_cast<long>(rng() % 20)));
        b.push_back(CycloNum(1 + static_cast<long>(rng() % 3)) * zeta(6, static_cast<long>(rng() % 6)));
        ab.push_back(a.back() * b.back());
      }
      CHECK(hypaut::apply_diagonal(hypaut::apply_diagonal(f, b), a) == hypaut::apply_diagonal(f, ab));
    }
    std::vector<CycloNum> s3(f.num_vars(), CycloNum(3));
    CHECK(hypaut::apply_diagonal(f, s3) == f * CycloNum(3).pow(f.degree()));
  }
  auto f = hypaut::parse_poly("X0^3 + X1^3");
  CHECK_THROWS_AS(hypaut::apply_diagonal(f, {CycloNum(1), CycloNum(0)}), hypaut::ZeroEigenvalue);
}

TEST_CASE("semi-invariance multiplier") {
  auto fermat = hypaut::parse_poly("X0^3 + X1^3 + X2^3");
  auto r = hypaut::semi_invariance_multiplier(fermat, {zeta(4, 1), CycloNum(1), CycloNum(1)});
  REQUIRE(std::holds_alternative<hypaut::NotSemiInvariant>(r));
  auto w = std::get<hypaut::NotSemiInvariant>(r);
  CHECK(w.first != w.second);
  auto inv = hypaut::semi_invariance_multiplier(fermat, {zeta(3, 1), CycloNum(1), CycloNum(1)});
  REQUIRE(std::holds_alternative<CycloNum>(inv));
  CHECK(std::get<CycloNum>(inv).is_one());

  auto klein = hypaut::parse_poly("X0^3*X1 + X1^3*X2 + X2^3*X0");
  auto k = hypaut::semi_invariance_multiplier(klein, {zeta(7, 1), zeta(7, 5), CycloNum(1)});
  REQUIRE(std::holds_alternative<CycloNum>(k));
  CHECK(std::get<CycloNum>(k) == zeta(7, 1));

  // witness at d = 4: lambdas (z^4, z^4, z, 1, 1) with z of order 12
  auto wit = hypaut::parse_poly("X0^4 + X1^4 + X2^4 + X0*X3^3 + X1*X4^3");
  auto t = hypaut::semi_invariance_multiplier(wit, {zeta(12, 4), zeta(12, 4), zeta(12, 1), CycloNum(1), CycloNum(1)});
  REQUIRE(std::holds_alternative<CycloNum>(t));
  CHECK(std::get<CycloNum>(t) == zeta(3, 1));
}

TEST_CASE("support queries") {
  auto klein = hypaut::parse_poly("X0^3*X1 + X1^3*X2 + X2^3*X0");
  auto prof = hypaut::support_queries(klein);
  REQUIRE(prof.vertices.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(prof.vertices[i].on_hypersurface);
    CHECK(prof.vertices[i].partners == std::set<int>{(i + 1) % 3});
    CHECK_FALSE(prof.vertices[i].red_flag);
  }
  auto fermat = hypaut::parse_poly("X0^4 + X1^4 + X2^4 + X3^4");
  for (const auto& v : hypaut::support_queries(fermat).vertices) CHECK_FALSE(v.on_hypersurface);
  auto cone = hypaut::parse_poly("X0^3 + X1^3 + X2^3", 4);
  auto cp = hypaut::support_queries(cone);
  CHECK(cp.vertices[3].on_hypersurface);
  CHECK(cp.vertices[3].red_flag);
  auto wit = hypaut::parse_poly("X0^3 + X1^3 + X2^3 + X0*X3^2 + X1*X4^2");
  auto wp = hypaut::support_queries(wit);
  CHECK(wp.vertices[3].partners == std::set<int>{0});
  CHECK(wp.vertices[4].partners == std::set<int>{1});
}

TEST_CASE("restrictions") {
  auto wit = hypaut::parse_poly("X0^3 + X1^3 + X2^3 + X0*X3^2 + X1*X4^2");
  CHECK(hypaut::restrict_to_zero(wit, {0, 1, 2}).is_zero());
  CHECK(hypaut::restrict_to_span(wit, {3, 4}).is_zero());
  CHECK(hypaut::restrict_to_span(wit, {0, 3}) == hypaut::parse_poly("X0^3 + X0*X3^2", 5));
  CHECK(hypaut::restrict_to_zero(wit, {3, 4}) == hypaut::parse_poly("X0^3 + X1^3 + X2^3", 5));
}

TEST_CASE("monomial helpers") {
  CHECK(hypaut::power_monomial(3, 1, 4).exps == std::vector<int>{0, 4, 0});
  CHECK(hypaut::near_power_monomial(3, 4, 0, 2).exps == std::vector<int>{3, 0, 1});
  CHECK(hypaut::near_power_monomial(3, 4, 1, 1).exps == std::vector<int>{0, 4, 0});
  CHECK(Monomial{{2, 0, 1}}.to_string() == "X0^2*X2");
}
