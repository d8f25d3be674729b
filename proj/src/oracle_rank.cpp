#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <span>
#include <string>

#include "gf2_span.hpp"
#include "greenring/errors.hpp"
#include "greenring/oracle.hpp"

// Rank profile of a nilpotent N = M + I without forming its powers.
//
// If {e_u} spans the space modulo im N, the vectors N^l e_u span the whole
// space and N^k V is spanned by those with l >= k. So one elimination that
// adds the chain levels from the top down yields every rank(N^k).
//
// The generating set comes from a sparse reduction of the columns of N:
// reduced columns with distinct leading entries lie in im N, and the
// coordinates that are not leading entries complete them to a basis.

namespace greenring {

namespace {

constexpr std::size_t kSlice = 512;
constexpr std::size_t kSliceWords = kSlice / 64;
constexpr std::size_t kMaxReducedSupport = 1024;
constexpr std::size_t kMaxReductionSteps = 256;

struct Csr {
  std::vector<std::size_t> start;
  std::vector<std::uint32_t> index;
  std::span<const std::uint32_t> at(std::size_t i) const { return {index.data() + start[i], start[i + 1] - start[i]}; }
};

// Rows and columns of N = M + I in compressed form.
void sparse_nilpotent_part(const GF2Matrix& m, Csr& rows, Csr& cols) {
  const std::size_t n = m.size();
  rows.start.assign(n + 1, 0);
  rows.index.clear();
  std::vector<std::size_t> col_count(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = m.row(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      if (w == i / 64) bits ^= std::uint64_t{1} << (i % 64);
      for (; bits; bits &= bits - 1) {
        const auto j = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        rows.index.push_back(j);
        ++col_count[j + 1];
      }
    }
    rows.start[i + 1] = rows.index.size();
  }
  cols.start.assign(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) cols.start[j + 1] = cols.start[j] + col_count[j + 1];
  cols.index.assign(rows.index.size(), 0);
  std::vector<std::size_t> fill(cols.start.begin(), cols.start.end() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t j : rows.at(i)) cols.index[fill[j]++] = static_cast<std::uint32_t>(i);
}

std::vector<std::uint32_t> generating_coordinates(const Csr& cols, std::size_t n) {
  std::vector<std::int64_t> owner(n, -1);
  std::vector<std::vector<std::uint32_t>> reduced;
  std::vector<std::uint32_t> v, scratch;
  for (std::size_t b = 0; b < n; ++b) {
    const auto col = cols.at(b);
    v.assign(col.begin(), col.end());
    for (std::size_t step = 0; !v.empty() && step < kMaxReductionSteps; ++step) {
      const std::uint32_t lead = v.back();
      if (owner[lead] < 0) {
        owner[lead] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(v);
        break;
      }
      const auto& other = reduced[static_cast<std::size_t>(owner[lead])];
      scratch.clear();
      std::set_symmetric_difference(v.begin(), v.end(), other.begin(), other.end(), std::back_inserter(scratch));
      v.swap(scratch);
      if (v.size() > kMaxReducedSupport) break;
    }
  }
  std::vector<std::uint32_t> gens;
  for (std::size_t c = 0; c < n; ++c)
    if (owner[c] < 0) gens.push_back(static_cast<std::uint32_t>(c));
  return gens;
}

// out = N * in for `count` dense row vectors, 512 at a time in bit-sliced form.
void apply_nilpotent(const Csr& rows, std::size_t n, std::size_t words, const std::uint64_t* in,
                     std::size_t count, std::vector<std::uint64_t>& out) {
  out.assign(count * words, 0);
  std::vector<std::array<std::uint64_t, kSliceWords>> sliced(n), image(n);
  std::uint64_t block[64];
  for (std::size_t base = 0; base < count; base += kSlice) {
    const std::size_t width = std::min(kSlice, count - base);
    const std::size_t tiles = (width + 63) / 64;
    for (std::size_t tb = 0; tb < tiles; ++tb)
      for (std::size_t w = 0; w < words; ++w) {
        for (std::size_t i = 0; i < 64; ++i) {
          const std::size_t v = base + tb * 64 + i;
          block[i] = v < base + width ? in[v * words + w] : 0;
        }
        detail::transpose64(block);
        for (std::size_t j = 0; j < 64 && w * 64 + j < n; ++j) sliced[w * 64 + j][tb] = block[j];
      }
    for (std::size_t a = 0; a < n; ++a) {
      std::array<std::uint64_t, kSliceWords> acc{};
      for (std::uint32_t b : rows.at(a))
        for (std::size_t t = 0; t < tiles; ++t) acc[t] ^= sliced[b][t];
      image[a] = acc;
    }
    for (std::size_t tb = 0; tb < tiles; ++tb)
      for (std::size_t w = 0; w < words; ++w) {
        for (std::size_t j = 0; j < 64; ++j) block[j] = w * 64 + j < n ? image[w * 64 + j][tb] : 0;
        detail::transpose64(block);
        for (std::size_t i = 0; i < 64; ++i) {
          const std::size_t v = base + tb * 64 + i;
          if (v < base + width) out[v * words + w] = block[i];
        }
      }
  }
}

// Keeps the nonzero rows, preserving order; returns how many remain.
std::size_t drop_zero_rows(std::vector<std::uint64_t>& rows, std::size_t words) {
  const std::size_t count = words == 0 ? 0 : rows.size() / words;
  std::size_t kept = 0;
  for (std::size_t v = 0; v < count; ++v) {
    const auto* src = rows.data() + v * words;
    if (std::all_of(src, src + words, [](std::uint64_t x) { return x == 0; })) continue;
    if (kept != v) std::copy(src, src + words, rows.data() + kept * words);
    ++kept;
  }
  rows.resize(kept * words);
  return kept;
}

}  // namespace

std::vector<std::size_t> nilpotent_rank_profile(const GF2Matrix& m, Index order) {
  const std::size_t n = m.size();
  std::vector<std::size_t> ranks(order + 1, 0);
  if (n == 0) return ranks;
  const std::size_t words = m.words_per_row();

  Csr rows, cols;
  sparse_nilpotent_part(m, rows, cols);
  const auto gens = generating_coordinates(cols, n);

  std::vector<std::vector<std::uint64_t>> levels;
  levels.emplace_back(gens.size() * words, 0);
  for (std::size_t g = 0; g < gens.size(); ++g)
    levels[0][g * words + gens[g] / 64] |= std::uint64_t{1} << (gens[g] % 64);
  std::size_t count = gens.size();
  while (count > 0) {
    if (levels.size() > order)
      throw NotARepresentation("decompose: (M - I)^" + std::to_string(order) +
                               " is nonzero; not a C_" + std::to_string(order) + " representation");
    std::vector<std::uint64_t> next;
    apply_nilpotent(rows, n, words, levels.back().data(), count, next);
    count = drop_zero_rows(next, words);
    if (count > 0) levels.push_back(std::move(next));
  }

  detail::Gf2SpanBuilder span(n);
  for (std::size_t l = levels.size(); l-- > 0;) {
    span.add_rows(levels[l].data(), levels[l].size() / words);
    levels[l].clear();
    levels[l].shrink_to_fit();
    ranks[l] = span.rank();
  }
  if (ranks[0] != n)
    throw NotARepresentation("decompose: M - I is not nilpotent; not a C_" + std::to_string(order) +
                             " representation");
  return ranks;
}

}  // namespace greenring
