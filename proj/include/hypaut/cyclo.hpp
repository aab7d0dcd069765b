#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element at level N is stored in the power basis 1, z, ..., z^(phi(N)-1)
// after reduction modulo the N-th cyclotomic polynomial, so two elements of
// the same level are equal iff their coefficient vectors are equal.  Mixed
// level operands are embedded into the lcm of their levels first.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypaut {

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Results are cached; safe to call from several threads.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

int euler_phi(int n);

class CycloNum {
 public:
  /// Zero at level 1.
  CycloNum();
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const mpq_class& value, int level = 1);

  /// zeta_N^k in canonical form at level N.
  static CycloNum root_of_unity(int n, long k);

  /// Build from coefficients on z^0..z^(len-1) at the given level; the
  /// vector may be longer than phi(level) and is reduced.
  static CycloNum from_power_coeffs(int level, std::vector<mpq_class> coeffs);

  int level() const { return level_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  /// Same element, expressed at level m (level() must divide m).
  CycloNum embed(int m) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  mpq_class rational_value() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator/=(const CycloNum& rhs);

  friend CycloNum operator+(CycloNum lhs, const CycloNum& rhs) { return lhs += rhs; }
  friend CycloNum operator-(CycloNum lhs, const CycloNum& rhs) { return lhs -= rhs; }
  friend CycloNum operator*(CycloNum lhs, const CycloNum& rhs) { return lhs *= rhs; }
  friend CycloNum operator/(CycloNum lhs, const CycloNum& rhs) { return lhs /= rhs; }

  /// Mathematical equality (levels may differ).
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  CycloNum inverse() const;
  CycloNum pow(long e) const;

  /// Smallest m >= 1 with x^m = 1, or nullopt when x is not a root of unity.
  std::optional<int> root_order() const;

  /// When x is a root of unity of order m, the k in [0, m) with x = zeta_m^k.
  std::optional<std::pair<int, int>> as_root_of_unity() const;

  /// Text form accepted by parse_scalar: roots of unity print as z{m}^{k},
  /// rationals as p/q, anything else as a sum over the power basis.
  std::string to_string() const;

 private:
  CycloNum(int level, std::vector<mpq_class> coeffs, bool canonical);
  void canonicalize(std::vector<mpq_class> redundant);

  int level_ = 1;
  std::vector<mpq_class> coeffs_;  // length euler_phi(level_)
};

/// Parses the scalar grammar: integers, p/q, zN, zN^k, + - * and parentheses.
CycloNum parse_scalar(std::string_view text);

}  // namespace hypaut
