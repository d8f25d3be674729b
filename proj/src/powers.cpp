#include "greenring/powers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "greenring/core.hpp"
#include "greenring/errors.hpp"
#include "memo.hpp"

namespace greenring {

namespace {

using detail::MemoTable;
using detail::pair_key;

// Adds t V_q so that the element reaches the target dimension.
void balance_free_part(GreenElement& partial, const BigInt& target, Index q, const char* what,
                       Index m, unsigned r) {
  const BigInt missing = target - dim(partial);
  if (missing < 0 || missing % q != 0)
    throw InternalInconsistency(std::string(what) + "(" + std::to_string(m) + ", " +
                                std::to_string(r) + "): projective correction " + missing.str() +
                                " is not a non-negative multiple of " + std::to_string(q));
  partial.add_term(q, missing / q);
}

MemoTable<GreenElement>& exterior_memo() {
  static MemoTable<GreenElement> table;
  return table;
}

MemoTable<GreenElement>& exterior_mod_induced_memo() {
  static MemoTable<GreenElement> table;
  return table;
}

MemoTable<GreenElement>& symmetric_memo() {
  static MemoTable<GreenElement> table;
  return table;
}

MemoTable<GreenElement>& symmetric_regular_memo() {
  static MemoTable<GreenElement> table;
  return table;
}

const GreenElement& exterior_ref(Index m, unsigned r);

// The splitting sum at (m, r) itself, free part balanced by dimension.
GreenElement exterior_splitting_sum(Index m, unsigned r) {
  const GroupContext ctx = GroupContext::minimal_for(std::max<Index>(m, 1));
  const Index half = ctx.order() / 2;
  const Index s = m - half;
  const Index rest = half - s;
  GreenElement partial;
  for (unsigned i = 0; 2 * i <= r; ++i) {
    const unsigned j = r - 2 * i;
    if (i > s || j > rest) continue;
    GreenElement term = tensor(exterior_ref(s, i), exterior_ref(rest, j));
    partial += omega_power(ctx, term, (i + j) % 2);
  }
  partial = strip_projective(ctx, partial);
  balance_free_part(partial, binomial(m, r), ctx.order(), "exterior_power_indec", m, r);
  return partial;
}

const GreenElement& exterior_ref(Index m, unsigned r) {
  if (r > m) {
    static const GreenElement zero;
    return zero;
  }
  if (m - r < r) r = m - r;  // Lambda^r = Lambda^{m-r} for unipotent V_m
  const std::uint64_t key = pair_key(m, r);
  if (const auto* hit = exterior_memo().find(key)) return *hit;

  GreenElement result;
  if (r == 0) {
    result = from_indec(1);
  } else if (r == 1) {
    result = from_indec(m);
  } else {
    result = exterior_splitting_sum(m, r);
  }
  return exterior_memo().insert(key, std::move(result));
}

const GreenElement& exterior_mod_induced_ref(Index m, unsigned r) {
  static const GreenElement zero;
  if (r > m) return zero;
  if (m - r < r) r = m - r;
  const std::uint64_t key = pair_key(m, r);
  if (const auto* hit = exterior_mod_induced_memo().find(key)) return *hit;

  GreenElement result;
  if (r == 0) {
    result = from_indec(1);
  } else if (r == 1) {
    if (m % 2 == 1) result = from_indec(m);
  } else {
    const GroupContext ctx = GroupContext::minimal_for(m);
    const Index half = ctx.order() / 2;
    const Index s = m - half;
    const Index rest = half - s;
    GreenElement partial;
    for (unsigned i = 0; 2 * i <= r; ++i) {
      const unsigned j = r - 2 * i;
      if (i > s || j > rest) continue;
      const GreenElement& a = exterior_mod_induced_ref(s, i);
      const GreenElement& b = exterior_mod_induced_ref(rest, j);
      if (a.is_zero() || b.is_zero()) continue;
      partial += omega_power(ctx, tensor(a, b), (i + j) % 2);
    }
    result = part(partial, Part::non_induced, ctx);
  }
  return exterior_mod_induced_memo().insert(key, std::move(result));
}

const GreenElement& symmetric_regular_ref(unsigned n, unsigned r) {
  const std::uint64_t key = pair_key(n, r);
  if (const auto* hit = symmetric_regular_memo().find(key)) return *hit;

  // fixed[k]: monomials fixed by the subgroup of index 2^k, i.e. constant on
  // its orbits (the residues mod 2^k) -- degree r / 2^{n-k} in 2^k variables.
  std::vector<BigInt> fixed(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    const std::uint64_t orbit = std::uint64_t{1} << (n - k);
    const std::uint64_t vars = std::uint64_t{1} << k;
    fixed[k] = r % orbit == 0 ? binomial(r / orbit + vars - 1, vars - 1) : BigInt(0);
  }
  GreenElement result;
  for (unsigned k = 0; k <= n; ++k) {
    const BigInt exact = fixed[k] - (k > 0 ? fixed[k - 1] : BigInt(0));
    const std::uint64_t size = std::uint64_t{1} << k;
    if (exact < 0 || exact % size != 0)
      throw InternalInconsistency("symmetric_power_regular(" + std::to_string(n) + ", " +
                                  std::to_string(r) + "): orbit count of size " +
                                  std::to_string(size) + " is not integral");
    result.add_term(static_cast<Index>(size), exact / size);
  }
  return symmetric_regular_memo().insert(key, std::move(result));
}

const GreenElement& symmetric_ref(Index m, unsigned r) {
  const std::uint64_t key = pair_key(m, r);
  if (const auto* hit = symmetric_memo().find(key)) return *hit;

  GreenElement result;
  if (r == 0 || m == 1) {
    result = from_indec(1);
  } else if (r == 1) {
    result = from_indec(m);
  } else {
    const GroupContext ctx = GroupContext::minimal_for(m);
    const unsigned n = ctx.exponent();
    if (m == ctx.order()) {
      result = symmetric_regular_ref(n, r);
    } else {
      const Index rest = ctx.order() - m;  // = 2^{n-1} - s
      GreenElement partial;
      for (unsigned j = 0; j <= r && j <= rest; ++j) {
        const GreenElement twisted = omega_power(ctx, exterior_ref(rest, j), j % 2);
        if (twisted.is_zero()) continue;
        partial += tensor(symmetric_regular_ref(n, r - j), twisted);
      }
      partial = strip_projective(ctx, partial);
      balance_free_part(partial, binomial(std::uint64_t{m} + r - 1, m - 1), ctx.order(),
                        "symmetric_power_indec", m, r);
      result = std::move(partial);
    }
  }
  return symmetric_memo().insert(key, std::move(result));
}

void require_genuine(const GreenElement& e, const char* op) {
  if (!e.is_genuine()) throw std::invalid_argument(std::string(op) + ": virtual elements are not accepted");
}

template <typename Coefficient>
GreenSeries series_of_indec(Index m, unsigned trunc, Coefficient coefficient) {
  GreenSeries s(trunc);
  for (unsigned r = 0; r <= trunc; ++r) s[r] = coefficient(m, r);
  return s;
}

template <typename Coefficient>
GreenSeries product_over_summands(const GreenElement& e, unsigned trunc, Coefficient coefficient) {
  GreenSeries result = GreenSeries::unit(trunc);
  for (const auto& [i, mult] : e.terms())
    result = mul(result, power(series_of_indec(i, trunc, coefficient), mult));
  return result;
}

}  // namespace

GreenElement exterior_power_indec(Index m, unsigned r) { return exterior_ref(m, r); }

GreenElement exterior_power_indec_unreduced(Index m, unsigned r) {
  if (r > m) return {};
  if (m == 0) return from_indec(1);
  return exterior_splitting_sum(m, r);
}

GreenElement exterior_power_indec_mod_induced(Index m, unsigned r) {
  return exterior_mod_induced_ref(m, r);
}

GreenSeries exterior_series(const GreenElement& e, unsigned trunc, const GroupContext& ctx) {
  if (e.max_index() > ctx.order())
    throw std::invalid_argument("exterior_series: index " + std::to_string(e.max_index()) +
                                " exceeds the group order " + std::to_string(ctx.order()));
  auto coefficient = [](Index m, unsigned r) -> GreenElement { return exterior_ref(m, r); };
  const GreenElement positive = filter_indices(e, [&](Index i) { return e.multiplicity(i) > 0; });
  const GreenElement negative = -filter_indices(e, [&](Index i) { return e.multiplicity(i) < 0; });
  GreenSeries result = product_over_summands(positive, trunc, coefficient);
  if (!negative.is_zero()) result = mul(result, inverse(product_over_summands(negative, trunc, coefficient)));
  return result;
}

GreenElement symmetric_power_regular(unsigned n, unsigned r) {
  if (n == 0) throw std::invalid_argument("symmetric_power_regular: n must be at least 1");
  return symmetric_regular_ref(n, r);
}

GreenElement symmetric_power_indec(Index m, unsigned r) {
  if (m == 0) throw std::invalid_argument("symmetric_power_indec: m must be at least 1");
  return symmetric_ref(m, r);
}

GreenSeries symmetric_series(const GreenElement& e, unsigned trunc) {
  require_genuine(e, "symmetric_series");
  return product_over_summands(e, trunc, [](Index m, unsigned r) -> GreenElement {
    return symmetric_ref(m, r);
  });
}

GreenElement symmetric_power(const GreenElement& e, unsigned r) {
  require_genuine(e, "symmetric_power");
  if (e.distinct_count() == 1 && e.terms().front().second == 1)
    return symmetric_ref(e.terms().front().first, r);
  return symmetric_series(e, r)[r];
}

GreenSeries lambda_omega_series(const GroupContext& ctx, const GreenElement& e, unsigned trunc) {
  GreenSeries lambda = exterior_series(e, trunc, ctx);
  for (unsigned r = 0; r <= trunc; ++r) lambda[r] = omega_power(ctx, lambda[r], r % 2);
  return lambda;
}

bool check_sym_theorem(const GroupContext& ctx, Index s, unsigned r) {
  const Index half = ctx.order() / 2;
  if (s > half)
    throw std::invalid_argument("check_sym_theorem: s = " + std::to_string(s) + " exceeds 2^(n-1) = " +
                                std::to_string(half));
  const unsigned reduced = r % ctx.order();
  const GreenElement lhs = symmetric_ref(half + s, r);
  const GreenElement rhs = omega_power(ctx, exterior_ref(half - s, reduced), reduced % 2);
  return equal_mod(lhs, rhs, Ideal::induced, ctx);
}

BigInt non_induced_summands_of_exterior_algebra(const GreenElement& e) {
  require_genuine(e, "summand bound");
  const BigInt d = dim(e);
  if (d > 4096) throw std::invalid_argument("summand bound: dimension too large to expand the exterior algebra");
  const unsigned top = static_cast<unsigned>(d);
  const GreenSeries lambda = exterior_series(e, top, GroupContext::minimal_for(std::max<Index>(e.max_index(), 1)));
  BigInt count = 0;
  for (const auto& coeff : lambda.coeffs())
    for (const auto& [i, m] : coeff.terms())
      if (i % 2 == 1) count += m;
  return count;
}

bool summand_bound_holds(const GreenElement& e) {
  const BigInt count = non_induced_summands_of_exterior_algebra(e);
  const unsigned exponent = static_cast<unsigned>(dim(e) + summand_count(e));
  return count * count <= (BigInt(1) << exponent);
}

}  // namespace greenring
