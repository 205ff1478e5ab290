#pragma once

#include "qheis/heis.hpp"

#include <vector>

namespace qheis {

/// Rank over the coefficient field of the given elements of H(q),
/// by incremental echelon reduction on leading PBW monomials.
std::size_t rank(const std::vector<NormalElement> &vectors);

} // namespace qheis
