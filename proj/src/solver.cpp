#include "tmc/solver.hpp"

#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "tmc/perm.hpp"

namespace tmc {

namespace {

// Content of 1 -> 2 -> 3 -> 1 on any board with rows >= 2, cols >= 3.
constexpr std::array<Move, 7> kCoreWord = {{
    {Axis::kCol, 1, -1},
    {Axis::kRow, 1, +1},
    {Axis::kCol, 1, +1},
    {Axis::kRow, 1, +1},
    {Axis::kCol, 1, -1},
    {Axis::kRow, 1, -2},
    {Axis::kCol, 1, +1},
}};

// The construction runs on a "logical" board with at least three columns.
// For two-column boards that is the transpose; a row shift to the left on
// the transpose is a column shift upward on the real board.
class Frame {
 public:
  explicit Frame(const BoardDims& dims)
      : physical_(dims), transposed_(dims.cols() < 3), logical_(transposed_ ? dims.transposed() : dims) {
    if (logical_.cols() < 3) throw InvalidArgument("3-cycles need a line of length 3; 2x2 is too small");
  }

  const BoardDims& logical() const noexcept { return logical_; }

  // 1-based physical id -> 0-based logical index.
  int to_logical(int id) const {
    const Position p = position_of(physical_, id);
    if (!transposed_) return id - 1;
    return (p.col - 1) * logical_.cols() + (p.row - 1);
  }

  Move to_physical(const Move& mv) const {
    if (!transposed_) return mv;
    return Move{mv.axis == Axis::kRow ? Axis::kCol : Axis::kRow, mv.index, mv.amount};
  }

 private:
  BoardDims physical_;
  bool transposed_;
  BoardDims logical_;
};

MoveSequence inverse_of(std::span<const Move> seq) {
  MoveSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// Moves the pieces starting on the given logical indices onto logical
// positions 0, 1, 2 of row 1, in that order, without disturbing the pieces
// already placed.
MoveSequence route_to_first_row(const BoardDims& logical, const std::array<int, 3>& pieces) {
  const int cols = logical.cols();
  std::vector<int> board(static_cast<std::size_t>(logical.cell_count()));
  std::iota(board.begin(), board.end(), 0);
  MoveSequence route;
  auto emit = [&](Move mv) {
    route.push_back(mv);
    apply_move_in_place(std::span<int>(board), mv, logical);
  };
  auto where = [&](int piece) {
    return static_cast<int>(std::find(board.begin(), board.end(), piece) - board.begin());
  };
  for (int t = 0; t < 3; ++t) {
    int pos = where(pieces[static_cast<std::size_t>(t)]);
    int r = pos / cols;
    int c = pos % cols;
    if (r == 0 && c == t) continue;
    if (r == 0) {
      // Columns left of t hold placed pieces, so c > t here.
      emit(Move{Axis::kCol, c + 1, -1});
      r = 1;
    }
    if (c != t) emit(Move{Axis::kRow, r + 1, c - t});
    emit(Move{Axis::kCol, t + 1, r});
  }
  return route;
}

Solution solve_by_search(const BoardState& state, const BoardDims& dims) {
  const std::vector<Move> gens = generators(dims);
  std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
  std::deque<std::vector<int>> queue{state.cells()};
  parent.emplace(state.cells(), std::pair{std::vector<int>{}, Move{}});
  std::optional<std::vector<int>> goal;
  while (!queue.empty() && !goal) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (const Move& g : gens) {
      std::vector<int> next = cur;
      apply_move_in_place(std::span<int>(next), g, dims);
      if (!parent.emplace(next, std::pair{cur, g}).second) continue;
      if (BoardState(next).is_solved()) {
        goal = next;
        break;
      }
      queue.push_back(std::move(next));
    }
  }
  if (!goal) throw UnsolvableState("state is not reachable from the solved board");
  MoveSequence moves;
  for (std::vector<int> at = *goal; at != state.cells();) {
    const auto& [prev, mv] = parent.at(at);
    moves.push_back(mv);
    at = prev;
  }
  std::reverse(moves.begin(), moves.end());
  return Solution{std::move(moves)};
}

}  // namespace

MoveSequence lemma31_sequence(const BoardDims& dims) {
  const Frame frame(dims);
  MoveSequence out;
  for (const Move& mv : kCoreWord) out.push_back(normalized(frame.to_physical(mv), dims));
  return out;
}

MoveSequence three_cycle(const BoardDims& dims, int a, int b, int c) {
  const Frame frame(dims);
  for (int id : {a, b, c}) {
    if (id < 1 || id > dims.cell_count()) throw InvalidArgument("position " + std::to_string(id) + " outside the board");
  }
  if (a == b || b == c || a == c) throw InvalidArgument("3-cycle positions must be distinct");

  const MoveSequence route =
      route_to_first_row(frame.logical(), {frame.to_logical(a), frame.to_logical(b), frame.to_logical(c)});
  MoveSequence logical = route;
  logical.insert(logical.end(), kCoreWord.begin(), kCoreWord.end());
  const MoveSequence back = inverse_of(route);
  logical.insert(logical.end(), back.begin(), back.end());

  MoveSequence physical;
  physical.reserve(logical.size());
  for (const Move& mv : logical) physical.push_back(frame.to_physical(mv));
  return merge_adjacent(physical, dims);
}

MoveSequence merge_adjacent(std::span<const Move> seq, const BoardDims& dims) {
  MoveSequence out;
  for (const Move& mv : seq) {
    check_move(mv, dims);
    const int len = line_length(dims, mv.axis);
    int amount = ((mv.amount % len) + len) % len;
    if (!out.empty() && out.back().axis == mv.axis && out.back().index == mv.index) {
      amount = (out.back().amount + amount) % len;
      out.pop_back();
    }
    if (amount != 0) out.push_back(Move{mv.axis, mv.index, amount});
  }
  return out;
}

Solution solve(const BoardState& state, const BoardDims& dims) {
  if (state.size() != dims.cell_count()) throw InvalidArgument("state size does not match board");
  if (!is_solvable(state, dims)) {
    throw UnsolvableState("odd permutation on a board with both dimensions odd: " + format_state(state));
  }
  if (state.is_solved()) return Solution{};
  if (dims.rows() == 2 && dims.cols() == 2) return solve_by_search(state, dims);

  MoveSequence moves;
  std::vector<int> cells = state.cells();
  auto run = [&](std::span<const Move> seq) {
    for (const Move& mv : seq) apply_move_in_place(std::span<int>(cells), mv, dims);
    moves.insert(moves.end(), seq.begin(), seq.end());
  };

  // Odd permutations only occur when some line has even length; a single
  // shift of that line is itself odd.
  if (parity(Permutation(cells)) == Parity::kOdd) {
    const Move fix = dims.cols() % 2 == 0 ? Move{Axis::kRow, 1, 1} : Move{Axis::kCol, 1, 1};
    run(std::span<const Move>(&fix, 1));
  }

  const int n = dims.cell_count();
  for (int t = 0; t + 3 <= n; ++t) {
    const int p = static_cast<int>(std::find(cells.begin(), cells.end(), t) - cells.begin());
    if (p == t) continue;
    // Positions below t are final, so p > t and a free third point exists.
    const int q = p == t + 1 ? t + 2 : t + 1;
    run(three_cycle(dims, p + 1, t + 1, q + 1));
  }
  if (!BoardState(cells).is_solved()) throw std::logic_error("3-cycle reduction left the board unsolved");
  return Solution{merge_adjacent(moves, dims)};
}

bool verify(const BoardState& state, std::span<const Move> seq, const BoardDims& dims) {
  return apply_sequence(state, seq, dims).is_solved();
}

}  // namespace tmc
