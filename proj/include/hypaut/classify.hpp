#pragma once

// Normal-form typing, incidence analysis, branch divisor claims and the
// rationality dispatcher.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypaut/autgrp.hpp"
#include "hypaut/geometry.hpp"
#include "hypaut/poly.hpp"

namespace hypaut {

enum class NormalType { I, II, III, IV, V, VI, OutOfScope };
std::string to_string(NormalType t);

struct TypeResult {
  NormalType type = NormalType::OutOfScope;
  std::string reason;              // only for OutOfScope
  std::vector<int> block;          // old indices of the non-unit block, normal-form order
  std::vector<int> unit;           // old indices of the unit eigenspace
  DiagAut normal;                  // exps in normal-form coordinate order, unit eigenvalue 1
  std::vector<int> perm;           // perm[new] = old
};

TypeResult normal_form_type(const DiagAut& g, const FixedLocusReport& fix);

/// Partner value for a near-power monomial X_i^(d-1) X_j with j in the unit block.
constexpr int kUnitPartner = -1;

struct Incidence {
  std::vector<bool> on;                 // P_i on X, i over block positions
  std::vector<std::set<int>> partners;  // block positions or kUnitPartner
  bool block_monomial = false;          // some monomial supported only on the block
};

/// Throws VertexViolatesSmoothness when a block vertex on X has no near-power monomial.
Incidence incidence_case(const HomogPoly& f, const TypeResult& type);

struct BranchClaim {
  std::vector<std::int64_t> divisors;  // empty: the branch cannot occur for smooth X
  std::string branch;
  std::vector<int> block_perm;         // permutation of block positions used
};

/// Branch-specific divisor list.  Throws UnsupportedRange outside n >= 2, d >= 3, (n,d) != (2,4).
BranchClaim divisor_claims(int n, int d, NormalType type, const Incidence& inc);

/// Direct table lookup for an already-permuted configuration with one chosen
/// partner per vertex on X (kUnitPartner for U); nullopt when the configuration
/// is not one of the listed representatives.
std::optional<std::vector<std::int64_t>> branch_table(int n, int d, NormalType type, const std::vector<bool>& on,
                                                      const std::vector<int>& partner, bool block_monomial);

void check_range(int n, int d);

enum class RationalStatus { Rational, Unknown, Conditional };
std::string to_string(RationalStatus s);

struct RationalityVerdict {
  RationalStatus status = RationalStatus::Unknown;
  std::string by;                  // cited theorem
  std::vector<std::string> fired;  // all theorems that apply, in priority order
  bool isomorphic_to_pn = false;
  GaloisVerdict galois;
  std::vector<std::string> warnings;
};

RationalityVerdict rationality_verdict(int n, int d, const HomogPoly& f, const DiagAut& g, const FixedLocusReport& fix,
                                       const TypeResult& type, bool smoothness_verified);

struct ClassifiedCase {
  int order = 1;
  TypeResult type;
  std::optional<Incidence> incidence;
  CycloNum multiplier;
  std::optional<BranchClaim> claim;
  RationalityVerdict rationality;
};

/// Full dispatch; g must be a semi-invariance of f.
ClassifiedCase classify(const HomogPoly& f, const DiagAut& g, const FixedLocusReport& fix, bool smoothness_verified);

}  // namespace hypaut
