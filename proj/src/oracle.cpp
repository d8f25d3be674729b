#include "greenring/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "greenring/errors.hpp"

namespace greenring {

namespace {

constexpr std::size_t kMaxPowerBase = 256;
constexpr unsigned kMaxMonomialDegree = 32;

// C(n, k) in 64 bits; callers stay far below overflow.
std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Ranks tuples in lexicographic order. prefix_[p][c] counts the completions
// of a fixed prefix whose entry at position p is below c.
class TupleRanker {
 public:
  TupleRanker(BasisKind kind, std::size_t size, unsigned r) : kind_(kind), prefix_(r) {
    for (unsigned p = 0; p < r; ++p) {
      auto& row = prefix_[p];
      row.assign(size + 1, 0);
      const unsigned left = r - p - 1;
      for (std::size_t c = 0; c < size; ++c) {
        const std::size_t completions =
            kind == BasisKind::wedge ? choose(size - 1 - c, left) : choose(size - c + left - 1, left);
        row[c + 1] = row[c] + completions;
      }
    }
  }

  template <typename Tuple>
  std::size_t position(const Tuple& t) const {
    std::size_t pos = 0;
    std::size_t low = 0;
    for (std::size_t p = 0; p < prefix_.size(); ++p) {
      pos += prefix_[p][t[p]] - prefix_[p][low];
      low = kind_ == BasisKind::wedge ? t[p] + 1 : t[p];
    }
    return pos;
  }

 private:
  BasisKind kind_;
  std::vector<std::vector<std::size_t>> prefix_;
};

// Advances to the next tuple in lexicographic order; false after the last.
bool next_tuple(BasisKind kind, std::size_t size, std::vector<std::uint32_t>& t) {
  const std::size_t r = t.size();
  for (std::size_t p = r; p-- > 0;) {
    const std::size_t limit = kind == BasisKind::wedge ? size - (r - p) : size - 1;
    if (t[p] < limit) {
      ++t[p];
      for (std::size_t q = p + 1; q < r; ++q) t[q] = kind == BasisKind::wedge ? t[q - 1] + 1 : t[p];
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> first_tuple(BasisKind kind, unsigned r) {
  std::vector<std::uint32_t> t(r, 0);
  if (kind == BasisKind::wedge)
    for (unsigned p = 0; p < r; ++p) t[p] = p;
  return t;
}

// Basis vectors hit by each column of M.
std::vector<std::vector<std::uint32_t>> column_supports(const GF2Matrix& m) {
  std::vector<std::vector<std::uint32_t>> cols(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.get(i, j)) cols[j].push_back(static_cast<std::uint32_t>(i));
  return cols;
}

// A basis tensor of the power under construction: a bit set of indices for
// wedges, the sorted index bytes for monomials.
using Key = std::array<std::uint64_t, 4>;

inline bool key_bit(const Key& k, std::uint32_t i) { return (k[i / 64] >> (i % 64)) & 1u; }
inline void key_set(Key& k, std::uint32_t i) { k[i / 64] |= std::uint64_t{1} << (i % 64); }
inline std::uint8_t key_byte(const Key& k, unsigned p) { return static_cast<std::uint8_t>(k[p / 8] >> (8 * (p % 8))); }
inline void key_put(Key& k, unsigned p, std::uint8_t v) {
  const unsigned s = 8 * (p % 8);
  k[p / 8] = (k[p / 8] & ~(std::uint64_t{0xff} << s)) | (std::uint64_t{v} << s);
}

// Inserts `copies` copies of v into the first `len` sorted bytes.
Key key_insert(const Key& k, unsigned len, std::uint8_t v, unsigned copies) {
  Key out{};
  unsigned src = 0, dst = 0;
  while (src < len && key_byte(k, src) <= v) key_put(out, dst++, key_byte(k, src++));
  for (unsigned c = 0; c < copies; ++c) key_put(out, dst++, v);
  while (src < len) key_put(out, dst++, key_byte(k, src++));
  return out;
}

// Drops keys occurring an even number of times.
void cancel_pairs(std::vector<Key>& keys) {
  std::sort(keys.begin(), keys.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    if ((j - i) % 2 == 1) keys[out++] = keys[i];
    i = j;
  }
  keys.resize(out);
}

void check_power_base(const GF2Matrix& m, const char* op) {
  if (m.size() > kMaxPowerBase)
    throw std::invalid_argument(std::string(op) + ": matrix size " + std::to_string(m.size()) +
                                " exceeds " + std::to_string(kMaxPowerBase));
}

}  // namespace

std::size_t basis_size(BasisKind kind, std::size_t size, unsigned r) {
  if (kind == BasisKind::wedge) return choose(size, r);
  if (r == 0) return 1;
  return size == 0 ? 0 : choose(size + r - 1, r);
}

std::vector<BasisIndex> enumerate_basis(BasisKind kind, std::size_t size, unsigned r) {
  std::vector<BasisIndex> out;
  if (basis_size(kind, size, r) == 0) return out;
  out.reserve(basis_size(kind, size, r));
  auto t = first_tuple(kind, r);
  do out.push_back({kind, t});
  while (next_tuple(kind, size, t));
  return out;
}

std::size_t basis_position(const BasisIndex& index, std::size_t size) {
  const auto& t = index.tuple;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (t[p] >= size) throw std::invalid_argument("basis_position: entry out of range");
    if (p > 0 && (index.kind == BasisKind::wedge ? t[p] <= t[p - 1] : t[p] < t[p - 1]))
      throw std::invalid_argument("basis_position: tuple not in canonical order");
  }
  return TupleRanker(index.kind, size, static_cast<unsigned>(t.size())).position(t);
}

GF2Matrix rep_indec(Index m) {
  if (m == 0) throw std::invalid_argument("rep_indec: m must be at least 1");
  GF2Matrix a = GF2Matrix::identity(m);
  for (Index i = 1; i < m; ++i) a.set(i - 1, i, true);
  return a;
}

GF2Matrix rep_of_element(const GreenElement& e) {
  if (!e.is_genuine()) throw std::invalid_argument("rep_of_element: virtual elements have no matrix");
  if (dim(e) > BigInt(1) << 24) throw std::invalid_argument("rep_of_element: dimension too large");
  std::vector<GF2Matrix> blocks;
  for (const auto& [i, mult] : e.terms()) {
    const GF2Matrix block = rep_indec(i);
    for (BigInt c = 0; c < mult; ++c) blocks.push_back(block);
  }
  return direct_sum(blocks);
}

GF2Matrix wedge_power(const GF2Matrix& m, unsigned r) {
  if (r > m.size())
    throw std::invalid_argument("wedge_power: degree " + std::to_string(r) + " exceeds size " +
                                std::to_string(m.size()));
  if (r == 0) return GF2Matrix::identity(1);
  check_power_base(m, "wedge_power");
  const auto cols = column_supports(m);
  const TupleRanker ranker(BasisKind::wedge, m.size(), r);
  GF2Matrix out(basis_size(BasisKind::wedge, m.size(), r));

  std::vector<Key> terms, next;
  std::vector<std::uint32_t> tuple(r);
  auto t = first_tuple(BasisKind::wedge, r);
  std::size_t column = 0;
  do {
    terms.assign(1, Key{});
    for (std::uint32_t e : t) {
      next.clear();
      for (const Key& k : terms)
        for (std::uint32_t i : cols[e])
          if (!key_bit(k, i)) {
            Key grown = k;
            key_set(grown, i);
            next.push_back(grown);
          }
      cancel_pairs(next);
      terms.swap(next);
    }
    for (const Key& k : terms) {
      unsigned p = 0;
      for (unsigned w = 0; w < 4; ++w)
        for (std::uint64_t bits = k[w]; bits; bits &= bits - 1)
          tuple[p++] = w * 64 + static_cast<std::uint32_t>(std::countr_zero(bits));
      out.set(ranker.position(tuple), column, true);
    }
    ++column;
  } while (next_tuple(BasisKind::wedge, m.size(), t));
  return out;
}

GF2Matrix sym_power(const GF2Matrix& m, unsigned r) {
  if (r == 0) return GF2Matrix::identity(1);
  check_power_base(m, "sym_power");
  if (r > kMaxMonomialDegree)
    throw std::invalid_argument("sym_power: degree " + std::to_string(r) + " exceeds " +
                                std::to_string(kMaxMonomialDegree));
  const auto cols = column_supports(m);
  const TupleRanker ranker(BasisKind::monomial, m.size(), r);
  GF2Matrix out(basis_size(BasisKind::monomial, m.size(), r));
  if (m.size() == 0) return out;

  std::vector<Key> terms, next;
  std::vector<std::uint32_t> tuple(r);
  auto t = first_tuple(BasisKind::monomial, r);
  std::size_t column = 0;
  do {
    // (sum_i x_i)^k is the product over the binary digits d of k of
    // sum_i x_i^(2^d) in characteristic two.
    terms.assign(1, Key{});
    unsigned degree = 0;
    for (unsigned p = 0; p < r;) {
      unsigned q = p;
      while (q < r && t[q] == t[p]) ++q;
      const unsigned run = q - p;
      for (unsigned d = 0; (run >> d) != 0; ++d) {
        if (((run >> d) & 1u) == 0) continue;
        const unsigned copies = 1u << d;
        next.clear();
        for (const Key& k : terms)
          for (std::uint32_t i : cols[t[p]]) next.push_back(key_insert(k, degree, static_cast<std::uint8_t>(i), copies));
        cancel_pairs(next);
        terms.swap(next);
        degree += copies;
      }
      p = q;
    }
    for (const Key& k : terms) {
      for (unsigned p = 0; p < r; ++p) tuple[p] = key_byte(k, p);
      out.set(ranker.position(tuple), column, true);
    }
    ++column;
  } while (next_tuple(BasisKind::monomial, m.size(), t));
  return out;
}

std::vector<std::size_t> nilpotent_rank_profile_by_powers(const GF2Matrix& m, Index order) {
  const GF2Matrix n = m + GF2Matrix::identity(m.size());
  std::vector<std::size_t> ranks{m.size()};
  GF2Matrix power = GF2Matrix::identity(m.size());
  for (Index k = 1; k <= order; ++k) {
    power = power * n;
    ranks.push_back(rank(power));
  }
  if (ranks.back() != 0)
    throw NotARepresentation("decompose: (M - I)^" + std::to_string(order) +
                             " is nonzero; not a C_" + std::to_string(order) + " representation");
  return ranks;
}

GreenElement element_from_rank_profile(const std::vector<std::size_t>& ranks) {
  auto r = [&](std::size_t k) -> long long {
    return k < ranks.size() ? static_cast<long long>(ranks[k]) : 0;
  };
  GreenElement e;
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    const long long mult = r(i - 1) - 2 * r(i) + r(i + 1);
    if (mult < 0)
      throw InternalInconsistency("decompose: negative multiplicity " + std::to_string(mult) + " for V" +
                                  std::to_string(i));
    if (mult > 0) e.add_term(static_cast<Index>(i), mult);
  }
  if (!ranks.empty() && dim(e) != BigInt(ranks.front()))
    throw InternalInconsistency("decompose: summand dimensions do not add up to the module dimension");
  return e;
}

GreenElement decompose(const GroupContext& ctx, const GF2Matrix& m) {
  return element_from_rank_profile(nilpotent_rank_profile(m, ctx.order()));
}

GreenElement decompose_by_powers(const GroupContext& ctx, const GF2Matrix& m) {
  return element_from_rank_profile(nilpotent_rank_profile_by_powers(m, ctx.order()));
}

}  // namespace greenring
