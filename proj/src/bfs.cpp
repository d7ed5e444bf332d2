#include "tmc/bfs.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "json.hpp"
#include "tmc/rank.hpp"

namespace tmc {

namespace {

using Cells = std::array<std::uint8_t, kMaxRankCells>;
using Bits = std::vector<std::uint64_t>;

// Words of the frontier handed to a worker at a time.
constexpr std::size_t kChunkWords = 1024;

// new[p] = old[gather[p]] for one generator.
std::vector<Cells> gather_tables(const BoardDims& dims) {
  std::vector<Cells> out;
  for (const Move& g : generators(dims)) {
    std::vector<int> cells(static_cast<std::size_t>(dims.cell_count()));
    std::iota(cells.begin(), cells.end(), 0);
    apply_move_in_place(std::span<int>(cells), g, dims);
    Cells t{};
    for (std::size_t p = 0; p < cells.size(); ++p) t[p] = static_cast<std::uint8_t>(cells[p]);
    out.push_back(t);
  }
  return out;
}

bool test_bit(const Bits& b, std::uint64_t r) { return (b[r >> 6] >> (r & 63)) & 1u; }

class LayerExpander {
 public:
  LayerExpander(const BoardDims& dims, unsigned threads)
      : n_(static_cast<std::size_t>(dims.cell_count())), gathers_(gather_tables(dims)), threads_(threads) {}

  // Marks in next every neighbour of cur that is in neither prev nor cur.
  void expand(const Bits& prev, const Bits& cur, Bits& next) const {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      while (true) {
        const std::size_t begin = cursor.fetch_add(kChunkWords, std::memory_order_relaxed);
        if (begin >= cur.size()) return;
        const std::size_t end = std::min(cur.size(), begin + kChunkWords);
        for (std::size_t w = begin; w < end; ++w) {
          for (std::uint64_t bits = cur[w]; bits != 0; bits &= bits - 1) {
            expand_state((w << 6) | static_cast<unsigned>(std::countr_zero(bits)), prev, cur, next);
          }
        }
      }
    };
    if (threads_ <= 1) {
      worker();
      return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads_);
    for (unsigned t = 0; t < threads_; ++t) pool.emplace_back(worker);
  }

 private:
  void expand_state(std::uint64_t r, const Bits& prev, const Bits& cur, Bits& next) const {
    Cells from{};
    Cells to{};
    detail::lehmer_unrank(r, std::span<std::uint8_t>(from.data(), n_));
    for (const Cells& g : gathers_) {
      for (std::size_t p = 0; p < n_; ++p) to[p] = from[g[p]];
      const std::uint64_t s = detail::lehmer_rank(std::span<const std::uint8_t>(to.data(), n_));
      if (test_bit(prev, s) || test_bit(cur, s)) continue;
      std::atomic_ref<std::uint64_t>(next[s >> 6]).fetch_or(std::uint64_t{1} << (s & 63), std::memory_order_relaxed);
    }
  }

  std::size_t n_;
  std::vector<Cells> gathers_;
  unsigned threads_;
};

std::uint64_t popcount(const Bits& b) {
  std::uint64_t c = 0;
  for (std::uint64_t w : b) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

}  // namespace

LayerHistogram::LayerHistogram(BoardDims dims, std::vector<std::uint64_t> layers)
    : dims_(dims), layers_(std::move(layers)) {
  if (layers_.empty() || layers_[0] != 1) throw InvalidArgument("a layer histogram starts with a single solved state");
  for (std::uint64_t c : layers_) {
    if (c == 0) throw InvalidArgument("layer histogram has an empty layer before its end");
  }
}

std::uint64_t LayerHistogram::total() const noexcept {
  return std::accumulate(layers_.begin(), layers_.end(), std::uint64_t{0});
}

std::vector<std::uint64_t> LayerHistogram::cumulative() const {
  std::vector<std::uint64_t> out(layers_.size());
  std::partial_sum(layers_.begin(), layers_.end(), out.begin());
  return out;
}

BigCount bfs_memory_estimate(const BoardDims& dims) {
  const BigCount states = factorial(static_cast<unsigned>(dims.cell_count()));
  const BigCount words = (states + 63) / 64;
  return 3 * words * 8;
}

LayerHistogram bfs_diameter(const BoardDims& dims, const BfsLimits& limits) {
  const BigCount estimate = bfs_memory_estimate(dims);
  const std::string label = std::to_string(dims.rows()) + "x" + std::to_string(dims.cols());
  if (dims.cell_count() > kMaxRankCells) {
    throw BudgetExceeded("board " + label + " has more states than a 64-bit rank can index (estimate " +
                             to_string(estimate) + " bytes)",
                         to_string(estimate), limits.memory_bytes);
  }
  if (estimate > limits.memory_bytes) {
    throw BudgetExceeded("board " + label + " needs an estimated " + to_string(estimate) +
                             " bytes of visited-set memory, budget is " + std::to_string(limits.memory_bytes),
                         to_string(estimate), limits.memory_bytes);
  }

  const std::size_t words = static_cast<std::size_t>((factorial(static_cast<unsigned>(dims.cell_count())) + 63) / 64);
  std::array<Bits, 3> layer{Bits(words, 0), Bits(words, 0), Bits(words, 0)};
  // layer[0] = depth i-1, layer[1] = depth i, layer[2] = depth i+1.
  layer[1][0] = 1;  // rank of the solved board

  unsigned threads = limits.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const LayerExpander expander(dims, threads);

  std::vector<std::uint64_t> counts{1};
  while (true) {
    expander.expand(layer[0], layer[1], layer[2]);
    const std::uint64_t c = popcount(layer[2]);
    if (c == 0) break;
    counts.push_back(c);
    std::swap(layer[0], layer[1]);
    std::swap(layer[1], layer[2]);
    std::fill(layer[2].begin(), layer[2].end(), 0);
  }
  return LayerHistogram(dims, std::move(counts));
}

std::string layer_counts_csv(const LayerHistogram& h) {
  std::string out = "depth,count,cumulative\n";
  const std::vector<std::uint64_t> cum = h.cumulative();
  for (std::size_t i = 0; i < h.layers().size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(h.layers()[i]) + "," + std::to_string(cum[i]) + "\n";
  }
  return out;
}

std::string layer_counts_json(const LayerHistogram& h) {
  nlohmann::ordered_json j;
  j["rows"] = h.dims().rows();
  j["cols"] = h.dims().cols();
  j["diameter"] = h.diameter();
  j["layers"] = h.layers();
  return j.dump();
}

LayerHistogram layer_counts_from_json(std::string_view text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    LayerHistogram h(BoardDims(j.at("rows").get<int>(), j.at("cols").get<int>()),
                     j.at("layers").get<std::vector<std::uint64_t>>());
    if (j.at("diameter").get<int>() != h.diameter()) throw ParseError("diameter does not match the layer list");
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed layer histogram JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid layer histogram: ") + e.what());
  }
}

}  // namespace tmc
