#include "greenring/element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace greenring {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

GroupContext::GroupContext(unsigned exponent) : exponent_(exponent) {
  if (exponent == 0) throw std::invalid_argument("group exponent n must be at least 1");
  if (exponent > kMaxExponent)
    throw std::invalid_argument("group exponent n = " + std::to_string(exponent) +
                                " exceeds the supported maximum " +
                                std::to_string(kMaxExponent));
}

GroupContext GroupContext::minimal_for(Index m) {
  return GroupContext(std::max(1u, ceil_log2(m)));
}

unsigned ceil_log2(Index m) {
  unsigned r = 0;
  while ((std::uint64_t{1} << r) < m) ++r;
  return r;
}

GreenElement::GreenElement(std::initializer_list<std::pair<Index, long long>> terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [i, m] : terms) raw.emplace_back(i, BigInt(m));
  *this = from_terms(std::move(raw));
}

GreenElement GreenElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  GreenElement out;
  for (auto& [i, m] : terms) {
    if (i == 0) throw std::invalid_argument("index 0 is not an indecomposable (V_0 is the zero element)");
    if (!out.terms_.empty() && out.terms_.back().first == i) {
      out.terms_.back().second += m;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (m != 0) {
      out.terms_.emplace_back(i, std::move(m));
    }
  }
  return out;
}

bool GreenElement::is_genuine() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

BigInt GreenElement::multiplicity(Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, Index key) { return t.first < key; });
  if (it != terms_.end() && it->first == i) return it->second;
  return 0;
}

Index GreenElement::max_index() const noexcept {
  return terms_.empty() ? 0 : terms_.back().first;
}

void GreenElement::add_term(Index i, const BigInt& mult) {
  if (i == 0) throw std::invalid_argument("index 0 is not an indecomposable (V_0 is the zero element)");
  if (mult == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, Index key) { return t.first < key; });
  if (it != terms_.end() && it->first == i) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{i, mult});
  }
}

namespace {

std::vector<GreenElement::Term> merge(const std::vector<GreenElement::Term>& a,
                                      const std::vector<GreenElement::Term>& b, int sign) {
  std::vector<GreenElement::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, sign > 0 ? ib->second : BigInt(-ib->second));
      ++ib;
    } else {
      BigInt m = sign > 0 ? ia->second + ib->second : ia->second - ib->second;
      if (m != 0) out.emplace_back(ia->first, std::move(m));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

GreenElement& GreenElement::operator+=(const GreenElement& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

GreenElement& GreenElement::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= scalar;
  }
  return *this;
}

GreenElement GreenElement::operator-() const {
  GreenElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

GreenElement from_indec(Index i) {
  if (i == 0) throw std::invalid_argument("from_indec: index must be at least 1 (V_0 is the zero element)");
  GreenElement e;
  e.add_term(i, 1);
  return e;
}

BigInt dim(const GreenElement& e) {
  BigInt d = 0;
  for (const auto& [i, m] : e.terms()) d += m * i;
  return d;
}

BigInt summand_count(const GreenElement& e) {
  if (!e.is_genuine())
    throw std::invalid_argument("summand_count: element has negative multiplicities");
  BigInt s = 0;
  for (const auto& t : e.terms()) s += t.second;
  return s;
}

std::string to_string(const GreenElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [i, m] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (m == 1) {
      out += "V" + std::to_string(i);
    } else if (m == -1) {
      out += "-V" + std::to_string(i);
    } else {
      out += m.str() + "*V" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GreenElement& e) { return os << to_string(e); }

void ElementAccumulator::add(Index i, const BigInt& mult) { slot(i) += mult; }

void ElementAccumulator::add(const GreenElement& e, const BigInt& scale) {
  for (const auto& [i, m] : e.terms()) slot(i) += m * scale;
}

BigInt& ElementAccumulator::slot(Index i) {
  if (i >= slots_.size()) slots_.resize(std::size_t{i} + 1);
  return slots_[i];
}

GreenElement ElementAccumulator::take() {
  std::vector<GreenElement::Term> terms;
  for (Index i = 1; i < slots_.size(); ++i)
    if (slots_[i] != 0) terms.emplace_back(i, std::move(slots_[i]));
  slots_.assign(1, BigInt(0));
  return GreenElement::from_terms(std::move(terms));
}

}  // namespace greenring
