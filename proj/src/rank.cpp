#include "tmc/rank.hpp"

#include <vector>

namespace tmc {

StateRank rank(const BoardState& state) {
  if (state.size() > kMaxRankCells) {
    throw InvalidArgument("ranking supports at most " + std::to_string(kMaxRankCells) + " cells");
  }
  return StateRank{detail::lehmer_rank(std::span<const int>(state.cells()))};
}

BoardState unrank(StateRank r, const BoardDims& dims) {
  const int n = dims.cell_count();
  if (n > kMaxRankCells) {
    throw InvalidArgument("ranking supports at most " + std::to_string(kMaxRankCells) + " cells");
  }
  if (r.value >= detail::kFactorials[static_cast<std::size_t>(n)]) {
    throw InvalidArgument("rank " + std::to_string(r.value) + " out of range for " + std::to_string(n) + " cells");
  }
  std::vector<int> cells(static_cast<std::size_t>(n));
  detail::lehmer_unrank(r.value, std::span<int>(cells));
  return BoardState(std::move(cells));
}

}  // namespace tmc
