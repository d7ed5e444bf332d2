#pragma once

// Lehmer-code ranking of board states. The rank of a permutation of N cells
// is sum_i d_i * (N-1-i)! where d_i counts the later cells holding smaller
// tiles; the solved board ranks 0 and the fully reversed board N!-1.

#include <array>
#include <bit>
#include <cstdint>
#include <span>

#include "tmc/board.hpp"

namespace tmc {

// 20! is the largest factorial below 2^64.
inline constexpr int kMaxRankCells = 20;

struct StateRank {
  std::uint64_t value = 0;

  friend bool operator==(const StateRank&, const StateRank&) = default;
  friend auto operator<=>(const StateRank&, const StateRank&) = default;
};

namespace detail {

inline constexpr std::array<std::uint64_t, kMaxRankCells + 1> kFactorials = [] {
  std::array<std::uint64_t, kMaxRankCells + 1> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

// Hot-path rank on raw cells; n <= kMaxRankCells, cells a permutation.
template <typename Cell>
std::uint64_t lehmer_rank(std::span<const Cell> cells) {
  const std::size_t n = cells.size();
  std::uint32_t used = 0;
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned v = static_cast<unsigned>(cells[i]);
    const unsigned smaller_before = static_cast<unsigned>(std::popcount(used & ((1u << v) - 1u)));
    r += (v - smaller_before) * kFactorials[n - 1 - i];
    used |= 1u << v;
  }
  return r;
}

template <typename Cell>
void lehmer_unrank(std::uint64_t r, std::span<Cell> cells) {
  const std::size_t n = cells.size();
  std::uint32_t free = (1u << n) - 1u;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = kFactorials[n - 1 - i];
    unsigned d = static_cast<unsigned>(r / f);
    r %= f;
    // Pick the d-th smallest unused tile.
    std::uint32_t m = free;
    while (d--) m &= m - 1;
    const unsigned v = static_cast<unsigned>(std::countr_zero(m));
    cells[i] = static_cast<Cell>(v);
    free &= ~(1u << v);
  }
}

}  // namespace detail

// Throws InvalidArgument when the board has more than kMaxRankCells cells.
StateRank rank(const BoardState& state);
// Throws InvalidArgument when r >= (rows*cols)! or the board is too large.
BoardState unrank(StateRank r, const BoardDims& dims);

}  // namespace tmc
