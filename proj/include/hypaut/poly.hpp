#pragma once

// Sparse homogeneous polynomials over CycloNum.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hypaut/cyclo.hpp"
#include "hypaut/errors.hpp"

namespace hypaut {

struct Monomial {
  std::vector<int> exps;

  int degree() const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order: higher degree first, then lexicographically
/// larger exponent vectors first (X0^3 > X0^2*X1 > ...).
struct GrLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// X_i^e
Monomial power_monomial(int num_vars, int i, int e);
/// X_i^(d-1) * X_j (X_i^d when i == j)
Monomial near_power_monomial(int num_vars, int d, int i, int j);

class NotHomogeneous : public Error {
 public:
  NotHomogeneous(Monomial a, Monomial b);
  Monomial first, second;
};

class HomogPoly {
 public:
  using TermMap = std::map<Monomial, CycloNum, GrLex>;

  HomogPoly(int num_vars, int degree);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m; zero results are dropped.
  void add_term(const Monomial& m, const CycloNum& c);
  std::optional<CycloNum> coefficient(const Monomial& m) const;
  bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

  std::vector<Monomial> support() const;

  HomogPoly operator*(const CycloNum& s) const;
  friend bool operator==(const HomogPoly& a, const HomogPoly& b);

  /// Canonical text form (grlex order), parseable by parse_poly.
  std::string to_string() const;

 private:
  int num_vars_;
  int degree_;
  TermMap terms_;
};

/// num_vars = 0 infers the count from the largest variable index used.
/// Throws SyntaxError or NotHomogeneous.
HomogPoly parse_poly(std::string_view text, int num_vars = 0);

/// Each coefficient is multiplied by prod lambda_i^(e_i).  Throws ZeroEigenvalue.
HomogPoly apply_diagonal(const HomogPoly& f, const std::vector<CycloNum>& lambdas);

struct NotSemiInvariant {
  Monomial first;
  Monomial second;
};

/// The t with A*F = t F, or a witness pair of monomials whose characters differ.
std::variant<CycloNum, NotSemiInvariant> semi_invariance_multiplier(const HomogPoly& f,
                                                                     const std::vector<CycloNum>& lambdas);

struct VertexProfile {
  bool on_hypersurface = false;   // X_i^d absent, so P_i lies on X
  std::set<int> partners;         // j != i with X_i^(d-1) X_j in the support
  bool red_flag = false;          // on X and no partner: X is singular at P_i
};

struct IncidenceProfile {
  std::vector<VertexProfile> vertices;
};

IncidenceProfile support_queries(const HomogPoly& f);

/// Sets the listed variables to zero.
HomogPoly restrict_to_zero(const HomogPoly& f, const std::set<int>& zero_set);

/// Keeps only terms supported on the listed variables (the others set to 0).
HomogPoly restrict_to_span(const HomogPoly& f, const std::set<int>& keep);

HomogPoly partial(const HomogPoly& f, int i);

/// Multiplies by X_i (degree goes up by one).
HomogPoly times_variable(const HomogPoly& f, int i);

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);

}  // namespace hypaut
