#pragma once

// Exact Cayley-graph diameter by exhaustive layered breadth-first search
// from the solved board.
//
// Every neighbour of a state at depth i lies at depth i-1, i or i+1, so the
// search only keeps three layers. Each layer is a dense bit array indexed by
// StateRank, rotated as the search advances. Frontier expansion is split
// across worker threads by rank range; layer boundaries are barriers and the
// layer count is the population count of the new layer, so the histogram
// does not depend on the worker count.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tmc/big_count.hpp"
#include "tmc/board.hpp"

namespace tmc {

struct BfsLimits {
  std::uint64_t memory_bytes = std::uint64_t{4} << 30;
  // 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

class LayerHistogram {
 public:
  LayerHistogram(BoardDims dims, std::vector<std::uint64_t> layers);

  const BoardDims& dims() const noexcept { return dims_; }
  // layers()[i] = number of states at distance exactly i.
  const std::vector<std::uint64_t>& layers() const noexcept { return layers_; }
  int diameter() const noexcept { return static_cast<int>(layers_.size()) - 1; }
  std::uint64_t total() const noexcept;
  std::vector<std::uint64_t> cumulative() const;

  friend bool operator==(const LayerHistogram&, const LayerHistogram&) = default;

 private:
  BoardDims dims_;
  std::vector<std::uint64_t> layers_;
};

// Bytes needed by the three rank-indexed bit arrays.
BigCount bfs_memory_estimate(const BoardDims& dims);

// Throws BudgetExceeded before allocating anything when the estimate is over
// limits.memory_bytes or the board has more cells than a rank can index.
LayerHistogram bfs_diameter(const BoardDims& dims, const BfsLimits& limits = {});

// "depth,count,cumulative" header followed by one row per depth.
std::string layer_counts_csv(const LayerHistogram& h);
// {"rows": m, "cols": n, "diameter": d, "layers": [c0, c1, ...]}
std::string layer_counts_json(const LayerHistogram& h);
// Throws ParseError on malformed input or a diameter that disagrees with
// the layer list.
LayerHistogram layer_counts_from_json(std::string_view text);

}  // namespace tmc
