#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "greenring/element.hpp"
#include "greenring/gf2_matrix.hpp"

namespace greenring {

// Explicit matrices for C_{2^n}-modules over the two-element field, and their
// decomposition into indecomposables from the ranks of powers of M - I.
//
// Basis conventions (frozen):
//   rep_indec(m)      x_1..x_m as indices 0..m-1, g x_i = x_i + x_{i-1}
//   rep_of_element    blocks in ascending index order, repeated by multiplicity
//   kronecker         pair (i, j) -> i * size(b) + j
//   wedge / monomial  tuples of basis indices in lexicographic order

enum class BasisKind { wedge, monomial };

struct BasisIndex {
  BasisKind kind;
  std::vector<std::uint32_t> tuple;  // strictly increasing (wedge) or non-decreasing (monomial)
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// All degree-r basis tuples over `size` basis vectors, in lexicographic order.
std::vector<BasisIndex> enumerate_basis(BasisKind kind, std::size_t size, unsigned r);

/// Position of a tuple in the order of enumerate_basis.
std::size_t basis_position(const BasisIndex& index, std::size_t size);

/// Number of degree-r basis tuples: C(size, r) or C(size + r - 1, r).
std::size_t basis_size(BasisKind kind, std::size_t size, unsigned r);

GF2Matrix rep_indec(Index m);

/// Block-diagonal matrix of a genuine element; throws on virtual input.
GF2Matrix rep_of_element(const GreenElement& e);

/// Induced action on the r-th exterior power. Requires r <= size(M) <= 256.
GF2Matrix wedge_power(const GF2Matrix& m, unsigned r);

/// Induced action on degree-r polynomials. Requires size(M) <= 256 and r <= 32.
GF2Matrix sym_power(const GF2Matrix& m, unsigned r);

/// r_k = rank((M + I)^k) for k = 0..order. Throws NotARepresentation unless
/// (M + I)^order = 0. Works from chains N^l e_u over a generating set {e_u}.
std::vector<std::size_t> nilpotent_rank_profile(const GF2Matrix& m, Index order);

/// The same profile by explicit matrix powers; quadratic memory, small sizes.
std::vector<std::size_t> nilpotent_rank_profile_by_powers(const GF2Matrix& m, Index order);

/// Multiplicity of V_i is r_{i-1} - 2 r_i + r_{i+1}.
GreenElement element_from_rank_profile(const std::vector<std::size_t>& ranks);

/// Decomposition of a C_{2^n}-module given by the generator's matrix.
GreenElement decompose(const GroupContext& ctx, const GF2Matrix& m);

GreenElement decompose_by_powers(const GroupContext& ctx, const GF2Matrix& m);

}  // namespace greenring
