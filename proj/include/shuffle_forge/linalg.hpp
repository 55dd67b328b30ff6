#pragma once

#include "shuffle_forge/scalars.hpp"

#include <vector>

namespace sf {

using ZMatrix = std::vector<std::vector<LaurentZ>>;

// Each row multiplied by the lcm of its denominators; the rank is unchanged.
ZMatrix clear_denominators(const std::vector<std::vector<RationalV>>& m);
// Same for Q[h], reading h as v.
ZMatrix clear_denominators(const std::vector<std::vector<PolyH>>& m);

// Fraction-free elimination over Z[v, v^-1]; every division is exact.
int bareiss_rank(ZMatrix m);

// Rank of the image at v = v0 in F_p, p < 2^32 prime, v0 a unit.  A lower
// bound for the rank over Q(v).
int modular_rank(const ZMatrix& m, unsigned long p, unsigned long v0);

// Basis of the right null space {x : m x = 0} over Q, via exact reduction.
std::vector<std::vector<mpq_class>> nullspace_q(std::vector<std::vector<mpq_class>> m, std::size_t cols);

constexpr unsigned long kRankPrime = 2147483629UL;  // largest prime below 2^31
constexpr unsigned long kRankPoint = 1234567UL;

}  // namespace sf
