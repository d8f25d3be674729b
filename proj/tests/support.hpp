#pragma once

// Test-side helpers: oracle decompositions built from explicit matrices, and
// printing for doctest.

#include <ostream>
#include <random>

#include "greenring/element.hpp"
#include "greenring/oracle.hpp"
#include "greenring/series.hpp"

namespace greenring {

inline std::ostream& operator<<(std::ostream& os, const GreenSeries& s) {
  os << '[';
  for (unsigned k = 0; k <= s.trunc(); ++k) os << (k ? ", " : "") << s[k];
  return os << ']';
}

}  // namespace greenring

namespace test {

using namespace greenring;

inline GreenElement oracle_tensor(Index a, Index b, unsigned n) {
  return decompose(GroupContext(n), kronecker(rep_indec(a), rep_indec(b)));
}

inline GreenElement oracle_wedge(const GreenElement& e, unsigned r, unsigned n) {
  return decompose(GroupContext(n), wedge_power(rep_of_element(e), r));
}

inline GreenElement oracle_sym(const GreenElement& e, unsigned r, unsigned n) {
  return decompose(GroupContext(n), sym_power(rep_of_element(e), r));
}

/// lambda_t(e) coefficient by coefficient from wedge-power matrices.
inline GreenSeries oracle_lambda(const GreenElement& e, unsigned trunc, unsigned n) {
  GreenSeries s(trunc);
  const GF2Matrix m = rep_of_element(e);
  for (unsigned r = 0; r <= trunc; ++r)
    if (r <= m.size()) s[r] = decompose(GroupContext(n), wedge_power(m, r));
  return s;
}

inline GreenSeries oracle_sigma(const GreenElement& e, unsigned trunc, unsigned n) {
  GreenSeries s(trunc);
  const GF2Matrix m = rep_of_element(e);
  for (unsigned r = 0; r <= trunc; ++r) s[r] = decompose(GroupContext(n), sym_power(m, r));
  return s;
}

/// Random genuine element with indices <= max_index and total dimension <= max_dim.
inline GreenElement random_genuine(std::mt19937& rng, Index max_index, unsigned max_dim) {
  std::uniform_int_distribution<Index> pick(1, max_index);
  std::uniform_int_distribution<unsigned> count(1, 4);
  std::vector<GreenElement::Term> terms;
  unsigned total = 0;
  for (unsigned k = count(rng); k > 0; --k) {
    const Index i = pick(rng);
    if (total + i > max_dim) break;
    total += i;
    terms.emplace_back(i, 1);
  }
  if (terms.empty()) terms.emplace_back(1, 1);
  return GreenElement::from_terms(std::move(terms));
}

/// Random element with indices <= max_index and multiplicities in [-3, 3].
inline GreenElement random_virtual(std::mt19937& rng, Index max_index) {
  std::uniform_int_distribution<Index> pick(1, max_index);
  std::uniform_int_distribution<int> mult(-3, 3);
  std::uniform_int_distribution<unsigned> count(0, 3);
  std::vector<GreenElement::Term> terms;
  for (unsigned k = count(rng); k > 0; --k) terms.emplace_back(pick(rng), mult(rng));
  return GreenElement::from_terms(std::move(terms));
}

inline GF2Matrix random_matrix(std::mt19937& rng, std::size_t n) {
  GF2Matrix m(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, coin(rng));
  return m;
}

inline GF2Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    GF2Matrix m = random_matrix(rng, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace test
