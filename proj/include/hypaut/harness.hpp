#pragma once

// Exhaustive verification over delta supports, plus brute-force oracles.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypaut/autgrp.hpp"
#include "hypaut/classify.hpp"
#include "hypaut/geometry.hpp"
#include "hypaut/poly.hpp"

namespace hypaut {

/// Support {X_i^(d-1) X_sigma(i)}; sigma(i) = i gives X_i^d.
struct DeltaSupport {
  int num_vars = 0;
  int degree = 0;
  std::vector<int> sigma;

  std::vector<Monomial> monomials() const;
  /// Sum of the support monomials, every coefficient 1.
  HomogPoly polynomial() const;
  /// e.g. "0>1,1>1,2>0"
  std::string id() const;
};

/// Canonical representative of sigma under relabelling: the lexicographically
/// smallest pi∘sigma∘pi^{-1} over all permutations pi.
std::vector<int> canonical_functional_graph(const std::vector<int>& sigma);

/// All delta supports with n+2 variables up to relabelling, in canonical order.
/// Throws CapExceeded when n+2 > 6.
std::vector<DeltaSupport> delta_supports(int n, int d);

struct AuditRecord {
  std::string support;
  std::string element;
  int order = 0;
  int codim = -1;
  std::string type;
  std::string branch;
  std::vector<std::int64_t> branch_divisors;
  std::vector<std::int64_t> theorem_divisors;
  bool pass = true;
  std::string failure;
};

struct AuditOptions {
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  std::int64_t macaulay_cap = kDefaultMacaulayCap;
  int threads = 0;  // 0: hardware concurrency
};

struct AuditReport {
  int n = 0;
  int d = 0;
  std::string claim;
  std::string scope;
  int supports_total = 0;
  int supports_smooth = 0;
  int supports_singular = 0;
  int supports_inconclusive = 0;
  int supports_capped = 0;
  std::int64_t elements_examined = 0;
  std::int64_t cases_examined = 0;  // elements passing the claim's filter
  bool partial = false;
  std::vector<AuditRecord> records;
  std::vector<AuditRecord> violations;
  std::map<std::string, int> max_order_by_type;
  std::map<std::string, AuditRecord> witnesses;  // max-order case per type
};

/// Supported claims: thm-1.1-codim1, thm-1.1-codim2, thm-3.3, thm-3.7,
/// thm-3.12, thm-3.14, thm-3.18, thm-3.21.
std::vector<std::string> audit_claims();

/// Throws UnsupportedRange for an unknown claim or excluded (n,d).
AuditReport audit_theorem(int n, int d, const std::string& claim, const AuditOptions& options = {});

struct Witness {
  HomogPoly f;
  DiagAut g;
};

/// X0^d + X1^d + X2^d + X0 X3^(d-1) + X1 X4^(d-1) with diag(z^d, z^d, z, 1, 1), z of order d(d-1).
Witness example_witness(int d);

/// Oracle: group order counted by direct search over (Z/M)^(m-1) with the last
/// exponent fixed at 0, M = |det| of a maximal independent set of difference
/// rows.  nullopt when the group is infinite or the search exceeds cap.
std::optional<std::int64_t> brute_force_group_order(const std::vector<Monomial>& support,
                                                    std::int64_t cap = 1000000);

/// Search cost M^(m-1) of the oracle, or nullopt when infinite.
std::optional<std::int64_t> brute_force_cost(const std::vector<Monomial>& support);

/// Maximum order over all group elements found by the same direct search,
/// restricted to elements whose fixed locus on the delta polynomial has the
/// given codimension.  Throws CapExceeded beyond cap.
int brute_force_max_order(const DeltaSupport& support, std::optional<int> codim_filter = std::nullopt,
                          std::int64_t cap = 1000000);

}  // namespace hypaut
