#include "gf2_span.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace greenring::detail {

namespace {

constexpr std::size_t kChunkRows = 2048;
constexpr std::size_t kBlockRows = 64;
constexpr unsigned kGroup = 8;

inline bool bit(const std::uint64_t* row, std::size_t j) { return (row[j / 64] >> (j % 64)) & 1u; }

inline void xor_into(std::uint64_t* __restrict dst, const std::uint64_t* __restrict src, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] ^= src[k];
}

std::size_t first_bit(const std::uint64_t* row, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
  return static_cast<std::size_t>(-1);
}

}  // namespace

void transpose64(std::uint64_t* a) noexcept {
  std::uint64_t m = 0x00000000FFFFFFFFull;
  for (unsigned j = 32; j != 0; j >>= 1, m ^= (m << j)) {
    for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

Gf2SpanBuilder::Gf2SpanBuilder(std::size_t columns) : columns_(columns), words_((columns + 63) / 64) {}

void Gf2SpanBuilder::add_rows(const std::uint64_t* rows, std::size_t count) {
  std::vector<std::uint64_t> buf;
  for (std::size_t start = 0; start < count && rank_ < columns_; start += kChunkRows) {
    const std::size_t k = std::min(kChunkRows, count - start);
    buf.assign(rows + start * words_, rows + (start + k) * words_);
    for (const auto& b : batches_) reduce_by_batch(b, buf.data(), k);
    for (std::size_t sub = 0; sub < k; sub += kBlockRows) {
      const std::size_t size = std::min(kBlockRows, k - sub);
      Batch b = echelonize_block(buf.data() + sub * words_, size);
      if (b.pivots.empty()) continue;
      rank_ += b.pivots.size();
      const std::size_t next = sub + size;
      if (next < k) reduce_by_batch(b, buf.data() + next * words_, k - next);
      batches_.push_back(std::move(b));
    }
  }
}

Gf2SpanBuilder::Batch Gf2SpanBuilder::echelonize_block(std::uint64_t* rows, std::size_t count) const {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t* v = rows + i * words_;
    for (std::size_t t = 0; t < kept.size(); ++t)
      if (bit(v, pivots[t])) {
        const std::size_t w0 = pivots[t] / 64;
        xor_into(v + w0, rows + kept[t] * words_ + w0, words_ - w0);
      }
    const std::size_t p = first_bit(v, words_);
    if (p == static_cast<std::size_t>(-1)) continue;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      std::uint64_t* u = rows + kept[t] * words_;
      if (bit(u, p)) xor_into(u + p / 64, v + p / 64, words_ - p / 64);
    }
    kept.push_back(i);
    pivots.push_back(p);
  }
  std::vector<std::size_t> order(kept.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pivots[x] < pivots[y]; });
  Batch b;
  b.rows.reserve(kept.size() * words_);
  for (std::size_t t : order) {
    const std::uint64_t* src = rows + kept[t] * words_;
    b.rows.insert(b.rows.end(), src, src + words_);
    b.pivots.push_back(static_cast<std::uint32_t>(pivots[t]));
  }
  return b;
}

void Gf2SpanBuilder::reduce_by_batch(const Batch& batch, std::uint64_t* rows, std::size_t count) {
  const std::size_t nb = batch.pivots.size();
  for (std::size_t g = 0; g < nb; g += kGroup) {
    const unsigned k = static_cast<unsigned>(std::min<std::size_t>(kGroup, nb - g));
    const std::size_t w0 = batch.pivots[g] / 64;
    const std::size_t len = words_ - w0;
    const std::size_t entries = std::size_t{1} << k;
    table_.resize(entries * len);
    std::fill(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(len), 0);
    for (std::size_t idx = 1; idx < entries; ++idx) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(idx));
      const std::uint64_t* prev = table_.data() + (idx & (idx - 1)) * len;
      const std::uint64_t* add = batch.rows.data() + (g + low) * words_ + w0;
      std::uint64_t* out = table_.data() + idx * len;
      for (std::size_t x = 0; x < len; ++x) out[x] = prev[x] ^ add[x];
    }
    std::uint32_t word[kGroup];
    std::uint32_t shift[kGroup];
    for (unsigned t = 0; t < k; ++t) {
      word[t] = batch.pivots[g + t] / 64;
      shift[t] = batch.pivots[g + t] % 64;
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t* v = rows + i * words_;
      std::size_t idx = 0;
      for (unsigned t = 0; t < k; ++t) idx |= ((v[word[t]] >> shift[t]) & 1u) << t;
      if (idx) xor_into(v + w0, table_.data() + idx * len, len);
    }
  }
}

}  // namespace greenring::detail
