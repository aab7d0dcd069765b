#pragma once

// Smoothness certificates, fixed loci, projection degrees and the Galois
// criterion for diagonal automorphisms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypaut/autgrp.hpp"
#include "hypaut/poly.hpp"

namespace hypaut {

enum class SmoothVerdict { Smooth, Singular, Inconclusive };
enum class SmoothMethod { VertexScreen, MacaulayRank };

std::string to_string(SmoothVerdict v);
std::string to_string(SmoothMethod m);

struct SmoothnessCertificate {
  SmoothVerdict verdict = SmoothVerdict::Inconclusive;
  SmoothMethod method = SmoothMethod::VertexScreen;
  std::optional<std::vector<int>> witness;  // coordinates of a singular point
  std::string detail;
  // Macaulay statistics
  int degree_e = 0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  int blocks = 0;
  int exact_blocks = 0;  // blocks that needed exact elimination
};

constexpr std::int64_t kDefaultMacaulayCap = 200000;

/// Vertex screen first, then the Macaulay rank test in degree (n+2)(d-2)+1.
/// The cap bounds rows*cols of each multigraded block of the Macaulay matrix.
SmoothnessCertificate smoothness(const HomogPoly& f, std::int64_t cap = kDefaultMacaulayCap);

/// Rank of the Macaulay matrix block decomposition; exposed for tests.
/// Returns nullopt when a block exceeds the cap.
struct MacaulayOutcome {
  bool surjective = false;
  bool capped = false;
  int degree_e = 0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  int blocks = 0;
  int exact_blocks = 0;
};
MacaulayOutcome macaulay_surjectivity(const HomogPoly& f, std::int64_t cap);

/// Exact rank of a small matrix over CycloNum (Gaussian elimination).
int exact_rank(std::vector<std::vector<CycloNum>> m);

enum class Tri { No, Yes, Unknown };
std::string to_string(Tri t);

struct FixedSlice {
  std::vector<int> space;      // eigenspace coordinate indices
  int exp = 0;                 // eigenvalue exponent at g.level
  int dim_projective = 0;      // |space| - 1
  bool restriction_zero = false;
  std::optional<int> dim;      // dim of P(W) ∩ X; nullopt when empty
  std::optional<int> points;   // number of points when the slice is finite
};

struct FixedLocusReport {
  int n = 0;  // dimension of X
  std::vector<FixedSlice> slices;
  std::optional<int> codim;    // nullopt when Fix(g) is empty
  Tri contains_line = Tri::No;
  std::optional<std::int64_t> point_count;

  bool empty() const { return !codim.has_value(); }
  std::optional<int> dimension() const;
};

/// Throws NotAnAutomorphism when g does not preserve F up to scalar.
FixedLocusReport fixed_locus(const HomogPoly& f, const DiagAut& g);

/// Number of distinct points of P^1 cut out by a nonzero binary form in the
/// two given variables (all other variables absent).
int distinct_roots_binary(const HomogPoly& f, int x, int y);

/// d-2 when both coordinate subspaces lie on X, d-1 when exactly one does, d otherwise.
int projection_degree(const HomogPoly& f, const std::vector<int>& r_plane, const std::vector<int>& complement);

struct GaloisVerdict {
  bool galois = false;
  std::vector<int> block;       // coordinates scaled by e_m
  std::vector<int> complement;
  int r = -1;                   // dim of P^r = |block| - 1
  int m = 0;
  std::string reason;
};

GaloisVerdict galois_by_theorem(const HomogPoly& f, const DiagAut& g);

}  // namespace hypaut
