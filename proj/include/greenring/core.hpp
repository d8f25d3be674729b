#pragma once

#include "greenring/element.hpp"

namespace greenring {

/// Decomposition of V_a (x) V_b; index 0 stands for the zero module.
///
/// Reduces the larger factor through the Heller translate of the smallest
/// group C_{2^r} containing it and restores the free part V_{2^r} by
/// comparing dimensions. Results are memoized on the unordered pair.
GreenElement tensor_indec(Index a, Index b);

/// Bilinear extension of tensor_indec; virtual elements allowed.
GreenElement tensor(const GreenElement& a, const GreenElement& b);

/// Heller translate over C_{2^n} modulo projectives: V_i -> V_{2^n - i},
/// with V_{2^n} dropped. Indices above 2^n are rejected.
GreenElement omega(const GroupContext& ctx, const GreenElement& e);

/// Applies omega `times` times; even counts only strip projectives.
GreenElement omega_power(const GroupContext& ctx, const GreenElement& e, unsigned times);

/// Removes the multiples of V_{2^n}.
GreenElement strip_projective(const GroupContext& ctx, const GreenElement& e);

/// Restriction to the index-2 subgroup: V_i -> V_{ceil(i/2)} + V_{floor(i/2)}.
GreenElement restriction(const GreenElement& e);

/// Induction from the index-2 subgroup: V_j -> V_{2j}.
GreenElement induction(const GreenElement& e);

enum class Part { projective, induced, non_induced };

/// Projective part keeps index 2^n, induced part the even indices, and the
/// non-induced part the odd indices.
GreenElement part(const GreenElement& e, Part kind, const GroupContext& ctx);

/// Membership in the subring spanned by V_r with r != 2 (mod 4).
bool in_c_subring(const GreenElement& e);

enum class Ideal { projective, induced };

/// True when a - b is supported on the ideal's indices.
bool equal_mod(const GreenElement& a, const GreenElement& b, Ideal ideal, const GroupContext& ctx);

}  // namespace greenring
