#pragma once

// Numeric order bounds for automorphisms of smooth hypersurfaces.

#include <cstdint>
#include <set>
#include <string>

namespace hypaut {

using IntSet = std::set<std::int64_t>;

/// {(d-1)d, (d-1)^2, (d-2)d, d^2-3d+3}; d >= 4 (smooth plane curves).
IntSet badr_bars_divisors(int d);

/// Every integer produced by items (i)-(v) of the linear-automorphism bound
/// for hypersurfaces of dimension n and degree d (d >= 3, n >= 1).
IntSet zheng_integers(int n, int d);

/// Codimension 1: {d, d-1, d-2}.  Codimension 2: the n-dependent list.
/// Requires n >= 2.
IntSet theorem11_divisors(int n, int d, int codim);

/// Side condition attached to the codimension 1 list.
std::string theorem11_side_condition(int codim);

/// True iff x divides some element of s.
bool divides_some(std::int64_t x, const IntSet& s);

}  // namespace hypaut
