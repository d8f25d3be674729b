#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace greenring {

/// Square matrix over the two-element field, rows packed into 64-bit words.
///
/// Entry (i, j) is the coefficient of basis vector i in the image of basis
/// vector j, so a representation matrix acts on column vectors. Bit j of a
/// row lives in word j / 64 at position j % 64; padding bits are kept zero.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  explicit GF2Matrix(std::size_t size);

  static GF2Matrix identity(std::size_t size);
  /// Row-major 0/1 literal, e.g. {{1, 1}, {0, 1}}.
  static GF2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t size() const noexcept { return size_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    auto& w = bits_[i * words_ + j / 64];
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t i, std::size_t j) noexcept {
    bits_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64);
  }

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t i) noexcept { return {bits_.data() + i * words_, words_}; }
  const std::uint64_t* data() const noexcept { return bits_.data(); }

  bool is_zero() const noexcept;
  std::size_t count_ones() const noexcept;
  GF2Matrix transpose() const;

  GF2Matrix& operator+=(const GF2Matrix& other);
  friend GF2Matrix operator+(GF2Matrix a, const GF2Matrix& b) { return a += b; }
  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over the two-element field (word-parallel elimination).
std::size_t rank(const GF2Matrix& m);

/// Inverse of an invertible matrix; throws std::invalid_argument if singular.
GF2Matrix inverse(const GF2Matrix& m);

/// Kronecker product; basis pair (i, j) maps to i * size(b) + j.
GF2Matrix kronecker(const GF2Matrix& a, const GF2Matrix& b);

/// Block-diagonal sum, blocks in the given order.
GF2Matrix direct_sum(std::span<const GF2Matrix> blocks);

}  // namespace greenring
