#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "greenring/bigint.hpp"

namespace greenring {

/// Label of an indecomposable module V_i; the label is its dimension.
using Index = std::uint32_t;

/// The ambient cyclic group C_{2^n}.
class GroupContext {
 public:
  static constexpr unsigned kMaxExponent = 30;

  explicit GroupContext(unsigned exponent);

  /// Smallest group C_{2^n} (n >= 1) on which V_m is defined.
  static GroupContext minimal_for(Index m);

  unsigned exponent() const noexcept { return exponent_; }
  Index order() const noexcept { return Index{1} << exponent_; }

  friend bool operator==(const GroupContext&, const GroupContext&) = default;

 private:
  unsigned exponent_;
};

/// Smallest r >= 0 with m <= 2^r.
unsigned ceil_log2(Index m);

/// A formal Z-linear combination of indecomposables V_i.
///
/// Terms are kept sorted by index with no zero multiplicity, so two elements
/// are equal exactly when their term lists are equal. The zero module V_0 is
/// the empty element.
class GreenElement {
 public:
  using Term = std::pair<Index, BigInt>;

  GreenElement() = default;
  GreenElement(std::initializer_list<std::pair<Index, long long>> terms);

  /// Builds an element from arbitrary (index, multiplicity) pairs; repeated
  /// indices are summed and zero multiplicities dropped. Index 0 is rejected.
  static GreenElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t distinct_count() const noexcept { return terms_.size(); }

  /// True when no multiplicity is negative.
  bool is_genuine() const noexcept;
  BigInt multiplicity(Index i) const;
  /// Largest index with a nonzero multiplicity, 0 for the zero element.
  Index max_index() const noexcept;

  void add_term(Index i, const BigInt& mult);

  GreenElement& operator+=(const GreenElement& other);
  GreenElement& operator-=(const GreenElement& other);
  GreenElement& operator*=(const BigInt& scalar);
  GreenElement operator-() const;

  friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
  friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }
  friend GreenElement operator*(GreenElement a, const BigInt& s) { return a *= s; }
  friend GreenElement operator*(const BigInt& s, GreenElement a) { return a *= s; }
  friend bool operator==(const GreenElement&, const GreenElement&) = default;

 private:
  std::vector<Term> terms_;
};

/// V_i with multiplicity one.
GreenElement from_indec(Index i);

/// Virtual dimension sum_i i * mult(i).
BigInt dim(const GreenElement& e);

/// Number of indecomposable summands of a genuine element.
BigInt summand_count(const GreenElement& e);

/// Keeps the terms whose index satisfies the predicate.
template <typename Pred>
GreenElement filter_indices(const GreenElement& e, Pred keep) {
  std::vector<GreenElement::Term> kept;
  for (const auto& [i, m] : e.terms())
    if (keep(i)) kept.emplace_back(i, m);
  return GreenElement::from_terms(std::move(kept));
}

/// Renders as "V1 + 2*V4 + -2*V3"-style text, ascending index, "0" for zero.
std::string to_string(const GreenElement& e);
std::ostream& operator<<(std::ostream& os, const GreenElement& e);

/// Dense scratch accumulator indexed by module label.
class ElementAccumulator {
 public:
  explicit ElementAccumulator(Index max_index = 0) : slots_(max_index + 1) {}

  void add(Index i, const BigInt& mult);
  void add(const GreenElement& e, const BigInt& scale = 1);
  BigInt& slot(Index i);
  GreenElement take();

 private:
  std::vector<BigInt> slots_;
};

}  // namespace greenring
