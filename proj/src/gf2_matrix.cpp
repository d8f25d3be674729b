#include "greenring/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gf2_span.hpp"

namespace greenring {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] ^= src[k];
}

}  // namespace

GF2Matrix::GF2Matrix(std::size_t size) : size_(size), words_(words_for(size)), bits_(size * words_, 0) {}

GF2Matrix GF2Matrix::identity(std::size_t size) {
  GF2Matrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  GF2Matrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw std::invalid_argument("GF2Matrix::from_rows: matrix must be square");
    std::size_t j = 0;
    for (int v : r) m.set(i, j++, (v & 1) != 0);
    ++i;
  }
  return m;
}

bool GF2Matrix::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t GF2Matrix::count_ones() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(size_);
  std::uint64_t block[64];
  for (std::size_t bi = 0; bi < words_; ++bi) {
    for (std::size_t bj = 0; bj < words_; ++bj) {
      for (std::size_t k = 0; k < 64; ++k) {
        const std::size_t i = bi * 64 + k;
        block[k] = i < size_ ? bits_[i * words_ + bj] : 0;
      }
      detail::transpose64(block);
      for (std::size_t k = 0; k < 64; ++k) {
        const std::size_t j = bj * 64 + k;
        if (j < size_) t.bits_[j * words_ + bi] = block[k];
      }
    }
  }
  return t;
}

GF2Matrix& GF2Matrix::operator+=(const GF2Matrix& other) {
  if (other.size_ != size_) throw std::invalid_argument("GF2Matrix: size mismatch in addition");
  xor_into(bits_.data(), other.bits_.data(), bits_.size());
  return *this;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("GF2Matrix: size mismatch in product");
  GF2Matrix c(a.size_);
  const std::size_t w = a.words_;
  for (std::size_t i = 0; i < a.size_; ++i) {
    std::uint64_t* out = c.bits_.data() + i * w;
    for (std::size_t kw = 0; kw < w; ++kw) {
      std::uint64_t bits = a.bits_[i * w + kw];
      while (bits) {
        const std::size_t k = kw * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        xor_into(out, b.bits_.data() + k * w, w);
      }
    }
  }
  return c;
}

std::size_t rank(const GF2Matrix& m) {
  if (m.size() == 0) return 0;
  detail::Gf2SpanBuilder span(m.size());
  span.add_rows(m.data(), m.size());
  return span.rank();
}

GF2Matrix inverse(const GF2Matrix& m) {
  const std::size_t n = m.size();
  const std::size_t w = m.words_per_row();
  GF2Matrix left = m;
  GF2Matrix right = GF2Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !left.get(pivot, col)) ++pivot;
    if (pivot == n) throw std::invalid_argument("inverse: matrix is singular");
    if (pivot != col) {
      std::swap_ranges(left.row(pivot).begin(), left.row(pivot).end(), left.row(col).begin());
      std::swap_ranges(right.row(pivot).begin(), right.row(pivot).end(), right.row(col).begin());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || !left.get(i, col)) continue;
      xor_into(left.row(i).data(), left.row(col).data(), w);
      xor_into(right.row(i).data(), right.row(col).data(), w);
    }
  }
  return right;
}

GF2Matrix kronecker(const GF2Matrix& a, const GF2Matrix& b) {
  const std::size_t sb = b.size();
  GF2Matrix k(a.size() * sb);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t p = 0; p < sb; ++p)
        for (std::size_t q = 0; q < sb; ++q)
          if (b.get(p, q)) k.set(i * sb + p, j * sb + q, true);
    }
  return k;
}

GF2Matrix direct_sum(std::span<const GF2Matrix> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  GF2Matrix out(total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b.get(i, j)) out.set(offset + i, offset + j, true);
    offset += b.size();
  }
  return out;
}

}  // namespace greenring
