#include "greenring/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenring/errors.hpp"
#include "memo.hpp"
#include "tensor_table.hpp"

namespace greenring {

namespace detail {

namespace {

MemoTable<SmallDecomposition>& tensor_memo() {
  static MemoTable<SmallDecomposition> table;
  return table;
}

}  // namespace

const SmallDecomposition& tensor_small(Index a, Index b) {
  if (a < b) std::swap(a, b);
  const std::uint64_t key = pair_key(b, a);
  if (const auto* hit = tensor_memo().find(key)) return *hit;

  SmallDecomposition result;
  if (b != 0) {
    const unsigned r = ceil_log2(a);
    const Index q = Index{1} << r;
    const Index reduced = q - a;
    if (std::uint64_t{b} * 2 > q) {
      // Both factors are Heller translates; the two twists cancel mod V_q.
      result = tensor_small(reduced, q - b);
    } else {
      for (const auto& [i, m] : tensor_small(reduced, b))
        if (i != q) result.emplace_back(q - i, m);
      std::sort(result.begin(), result.end());
    }
    std::uint64_t covered = 0;
    for (const auto& [i, m] : result) covered += std::uint64_t{i} * m;
    const std::uint64_t total = std::uint64_t{a} * b;
    if (covered > total || (total - covered) % q != 0)
      throw InternalInconsistency("tensor_indec(" + std::to_string(a) + ", " + std::to_string(b) +
                                  "): projective correction is not a non-negative integer");
    if (const std::uint64_t t = (total - covered) / q; t != 0) {
      // Partial results never contain V_q itself, so this appends at the end.
      result.emplace_back(q, t);
    }
  }
  return tensor_memo().insert(key, std::move(result));
}

}  // namespace detail

GreenElement tensor_indec(Index a, Index b) {
  std::vector<GreenElement::Term> terms;
  for (const auto& [i, m] : detail::tensor_small(a, b)) terms.emplace_back(i, BigInt(m));
  return GreenElement::from_terms(std::move(terms));
}

GreenElement tensor(const GreenElement& a, const GreenElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Index top = std::max(a.max_index(), b.max_index());
  ElementAccumulator acc(Index{1} << ceil_log2(top));
  BigInt product;
  for (const auto& [i, mi] : a.terms()) {
    for (const auto& [j, mj] : b.terms()) {
      product = mi * mj;
      for (const auto& [k, mk] : detail::tensor_small(i, j)) {
        if (mk == 1)
          acc.slot(k) += product;
        else
          acc.slot(k) += product * mk;
      }
    }
  }
  return acc.take();
}

namespace {

void require_within(const GroupContext& ctx, const GreenElement& e, const char* op) {
  if (e.max_index() > ctx.order())
    throw std::invalid_argument(std::string(op) + ": index " + std::to_string(e.max_index()) +
                                " exceeds the group order " + std::to_string(ctx.order()));
}

}  // namespace

GreenElement omega(const GroupContext& ctx, const GreenElement& e) {
  require_within(ctx, e, "omega");
  const Index q = ctx.order();
  std::vector<GreenElement::Term> terms;
  terms.reserve(e.distinct_count());
  for (const auto& [i, m] : e.terms())
    if (i != q) terms.emplace_back(q - i, m);
  return GreenElement::from_terms(std::move(terms));
}

GreenElement omega_power(const GroupContext& ctx, const GreenElement& e, unsigned times) {
  return times % 2 == 1 ? omega(ctx, e) : strip_projective(ctx, e);
}

GreenElement strip_projective(const GroupContext& ctx, const GreenElement& e) {
  const Index q = ctx.order();
  return filter_indices(e, [q](Index i) { return i != q; });
}

GreenElement restriction(const GreenElement& e) {
  std::vector<GreenElement::Term> terms;
  terms.reserve(2 * e.distinct_count());
  for (const auto& [i, m] : e.terms()) {
    terms.emplace_back((i + 1) / 2, m);
    if (i / 2 != 0) terms.emplace_back(i / 2, m);
  }
  return GreenElement::from_terms(std::move(terms));
}

GreenElement induction(const GreenElement& e) {
  std::vector<GreenElement::Term> terms;
  terms.reserve(e.distinct_count());
  for (const auto& [j, m] : e.terms()) terms.emplace_back(2 * j, m);
  return GreenElement::from_terms(std::move(terms));
}

GreenElement part(const GreenElement& e, Part kind, const GroupContext& ctx) {
  switch (kind) {
    case Part::projective: {
      require_within(ctx, e, "part(projective)");
      const Index q = ctx.order();
      return filter_indices(e, [q](Index i) { return i == q; });
    }
    case Part::induced:
      return filter_indices(e, [](Index i) { return i % 2 == 0; });
    case Part::non_induced:
      return filter_indices(e, [](Index i) { return i % 2 == 1; });
  }
  throw std::invalid_argument("part: unknown kind");
}

bool in_c_subring(const GreenElement& e) {
  return std::none_of(e.terms().begin(), e.terms().end(),
                      [](const auto& t) { return t.first % 4 == 2; });
}

bool equal_mod(const GreenElement& a, const GreenElement& b, Ideal ideal, const GroupContext& ctx) {
  const GreenElement diff = a - b;
  const Index q = ctx.order();
  return std::all_of(diff.terms().begin(), diff.terms().end(), [&](const auto& t) {
    return ideal == Ideal::projective ? t.first == q : t.first % 2 == 0;
  });
}

}  // namespace greenring
