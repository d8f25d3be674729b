#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "greenring/element.hpp"

namespace greenring::detail {

/// Decomposition of a single V_a (x) V_b. Multiplicities are bounded by a*b,
/// so machine words suffice here.
using SmallDecomposition = std::vector<std::pair<Index, std::uint64_t>>;

/// Memoized tensor_indec, sorted by index. The reference stays valid.
const SmallDecomposition& tensor_small(Index a, Index b);

}  // namespace greenring::detail
