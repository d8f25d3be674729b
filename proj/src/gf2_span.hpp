#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace greenring::detail {

/// Incrementally maintained span of bit vectors of a fixed width.
///
/// The basis is a sequence of small batches. Each batch is in reduced
/// echelon form on its own pivots and vanishes on the pivots of every earlier
/// batch, and every basis row starts at its pivot. Reducing a vector therefore
/// visits the batches in order, eight rows at a time through a 256-entry
/// table of their combinations (the "four Russians" trick).
class Gf2SpanBuilder {
 public:
  explicit Gf2SpanBuilder(std::size_t columns);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t rank() const noexcept { return rank_; }

  /// Adds `count` rows stored contiguously with stride words().
  void add_rows(const std::uint64_t* rows, std::size_t count);

 private:
  struct Batch {
    std::vector<std::uint64_t> rows;
    std::vector<std::uint32_t> pivots;  // ascending
  };

  void reduce_by_batch(const Batch& batch, std::uint64_t* rows, std::size_t count);
  Batch echelonize_block(std::uint64_t* rows, std::size_t count) const;

  std::size_t columns_;
  std::size_t words_;
  std::size_t rank_ = 0;
  std::vector<Batch> batches_;
  std::vector<std::uint64_t> table_;
};

/// Transposes a 64x64 bit block in place: bit j of word i moves to bit i of word j.
void transpose64(std::uint64_t* block) noexcept;

}  // namespace greenring::detail
