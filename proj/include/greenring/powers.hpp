#pragma once

#include "greenring/element.hpp"
#include "greenring/series.hpp"

namespace greenring {

/// Exact decomposition of Lambda^r(V_m).
///
/// Writes m = 2^{n-1} + s for the smallest group C_{2^n} containing V_m and
/// sums Omega^{i+j}(Lambda^i(V_s) (x) Lambda^j(V_{2^{n-1}-s})) over 2i + j = r,
/// the inner powers living on the subgroup of index two. The free part
/// t V_{2^n} is fixed by dimension. Memoized on (m, r).
GreenElement exterior_power_indec(Index m, unsigned r);

/// Lambda^r(V_m) from the splitting sum at (m, r) directly, without the
/// duality shortcut r -> m - r at the top level.
GreenElement exterior_power_indec_unreduced(Index m, unsigned r);

/// Non-induced (odd-index) part of Lambda^r(V_m), computed by running the
/// same recursion modulo induced summands. Multiplicities stay small.
GreenElement exterior_power_indec_mod_induced(Index m, unsigned r);

/// Coefficients 0..trunc of lambda_t(e). Virtual e = A - B gives
/// lambda_t(A) * lambda_t(B)^{-1}. Indices of e must not exceed 2^n.
GreenSeries exterior_series(const GreenElement& e, unsigned trunc, const GroupContext& ctx);

/// S^r(V_{2^n}), read off the permuted monomial basis of the regular module:
/// orbits of degree-r monomials under C_{2^n} with stabilizer of index 2^k
/// contribute copies of V_{2^k}.
GreenElement symmetric_power_regular(unsigned n, unsigned r);

/// Exact decomposition of S^r(V_m), from sigma_t(V_{2^n}) * lambda^Omega_t(V_{2^{n-1}-s})
/// modulo projectives plus the dimension-balancing free part. Memoized.
GreenElement symmetric_power_indec(Index m, unsigned r);

/// S^r(e) for genuine e via S(A + B) = S(A) (x) S(B).
GreenElement symmetric_power(const GreenElement& e, unsigned r);

/// Coefficients 0..trunc of sigma_t(e) for genuine e.
GreenSeries symmetric_series(const GreenElement& e, unsigned trunc);

/// Coefficient r is Omega^r Lambda^r(e) over C_{2^n} with projectives removed.
GreenSeries lambda_omega_series(const GroupContext& ctx, const GreenElement& e, unsigned trunc);

/// S^r(V_{2^{n-1}+s}) = Omega^{r'} Lambda^{r'}(V_{2^{n-1}-s}) modulo induced
/// summands, r' = r mod 2^n.
bool check_sym_theorem(const GroupContext& ctx, Index s, unsigned r);

/// Counts the odd-index summands N of the whole exterior algebra of a genuine
/// e and tests N^2 <= 2^(dim(e) + summ(e)).
bool summand_bound_holds(const GreenElement& e);

/// N from summand_bound_holds: odd-index summand count of Lambda(e).
BigInt non_induced_summands_of_exterior_algebra(const GreenElement& e);

}  // namespace greenring
