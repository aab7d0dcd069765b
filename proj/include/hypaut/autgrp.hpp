#pragma once

// Diagonal projective automorphisms and diagonal symmetry groups of supports.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypaut/cyclo.hpp"
#include "hypaut/lattice.hpp"
#include "hypaut/poly.hpp"

namespace hypaut {

/// diag(zeta_N^exps[0], ..., zeta_N^exps[m-1]) modulo scalars.
struct DiagAut {
  int level = 1;
  std::vector<int> exps;

  static DiagAut identity(int num_vars);

  int num_vars() const { return static_cast<int>(exps.size()); }
  std::vector<CycloNum> eigenvalues() const;
  DiagAut power(long k) const;
  /// Same class with exps[i] = 0 and every exponent in [0, level).
  DiagAut shifted_to_unit(int i) const;
  /// Rewrites at level m (level must divide m).
  DiagAut at_level(int m) const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const DiagAut& a, const DiagAut& b);
};

/// Parses diag(e_0, ..., e_{m-1}); each entry must be a root of unity.
DiagAut parse_diag(std::string_view text);

int order_in_pgl(const DiagAut& g);

struct EigenStructure {
  int r = 0;
  std::vector<int> partition;             // multiplicities, descending
  std::vector<std::vector<int>> spaces;   // index sets, ordered by first index
  std::vector<int> exps;                  // exponent of each space, same order
};

EigenStructure eigen_structure(const DiagAut& g);

struct NormalizedAut {
  DiagAut aut;
  /// perm[new_position] = old index.
  std::vector<int> perm;
};

/// Puts the chosen eigenspace (given by its old indices) last with eigenvalue 1,
/// and orders the remaining blocks largest first, ties by first index.
NormalizedAut normalize_with_unit(const DiagAut& g, const std::vector<int>& unit_space);

/// normalize_with_unit using the largest eigenspace as the unit space
/// (ties: the one whose eigenvalue is already 1, then the lowest first index).
NormalizedAut normalize(const DiagAut& g);

struct SymGroup {
  int num_vars = 0;
  std::vector<std::int64_t> invariant_factors;  // each > 1, d_1 | d_2 | ...
  std::vector<DiagAut> generators;              // one per invariant factor
  int free_rank = 0;                            // > 0 means infinite modulo scalars

  bool is_finite() const { return free_rank == 0; }
  /// Requires is_finite(); throws on overflow.
  std::int64_t order() const;
  std::int64_t exponent() const;
  /// "Z/7", "Z/3 × Z/3", "trivial" (or with a Z^k part when infinite).
  std::string structure() const;
};

/// Throws Error for an empty support or mixed degrees.
SymGroup symmetry_group(const std::vector<Monomial>& support);

constexpr std::int64_t kDefaultEnumerationCap = 1000000;

/// Calls visit on every element exactly once (representatives with the last
/// exponent equal to 0, at level lcm of the invariant factors).  Elements for
/// which filter returns false are skipped.  Throws EnumerationCapExceeded when
/// the group is infinite or larger than cap.
void enumerate_elements(const SymGroup& group, const std::function<void(const DiagAut&)>& visit,
                        const std::function<bool(const DiagAut&)>& filter = {},
                        std::int64_t cap = kDefaultEnumerationCap);

std::vector<DiagAut> list_elements(const SymGroup& group, std::int64_t cap = kDefaultEnumerationCap);

}  // namespace hypaut
