#pragma once

#include <vector>

#include "bw/exact.hpp"

namespace bw {

/// Exact LLL reduction (delta = 3/4) of the rows of a full-rank integer
/// basis. Gram-Schmidt data is kept in exact rationals; intended for the
/// tiny dimensions of relation lattices (a handful of rows).
void lll_reduce(std::vector<std::vector<Int>>& basis);

/// Nearest integer to an exact rational (ties toward even not needed here;
/// ties round away from zero).
Int round_nearest(const Rat& r);

}  // namespace bw
