#pragma once

// Board geometry, states and moves of the torus-sliding puzzle.
//
// Positions are stored 0-based in row-major order; the 1-based ids
// (id = cols * (row - 1) + col) only appear at API and text boundaries.
// Tiles carry the labels 0..rows*cols-1 and the solved board has tile p
// on position p.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmc/error.hpp"

namespace tmc {

class BoardDims {
 public:
  // Throws InvalidArgument unless rows >= 2 and cols >= 2.
  BoardDims(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int cell_count() const noexcept { return rows_ * cols_; }
  BoardDims transposed() const { return BoardDims(cols_, rows_); }

  friend bool operator==(const BoardDims&, const BoardDims&) = default;

 private:
  int rows_;
  int cols_;
};

// 1-based coordinates.
struct Position {
  int row;
  int col;

  friend bool operator==(const Position&, const Position&) = default;
};

// Position id of (row, col), both 1-based: cols * (row - 1) + col.
int phi(const BoardDims& dims, int row, int col);
// Inverse of phi.
Position position_of(const BoardDims& dims, int id);

// Number-notation: cells[p] is the tile on 0-based position p.
class BoardState {
 public:
  // Throws InvalidArgument unless cells is a permutation of 0..size-1.
  explicit BoardState(std::vector<int> cells);

  const std::vector<int>& cells() const noexcept { return cells_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }
  int operator[](std::size_t p) const { return cells_[p]; }

  bool is_solved() const noexcept;

  friend bool operator==(const BoardState&, const BoardState&) = default;
  friend auto operator<=>(const BoardState&, const BoardState&) = default;

 private:
  std::vector<int> cells_;
};

enum class Axis { kRow, kCol };

// One cyclic shift of a line. Positive amounts shift a row left or a column
// up; the amount is reduced modulo the line length when applied.
struct Move {
  Axis axis;
  int index;   // 1-based row (kRow) or column (kCol)
  int amount;

  Move inverse() const { return Move{axis, index, -amount}; }

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

int line_length(const BoardDims& dims, Axis axis);

// Amount reduced into 1..len-1. Throws InvalidArgument for a bad index or
// for amount == 0 (mod len), which is not a generator.
Move normalized(const Move& mv, const BoardDims& dims);

// Throws InvalidArgument when the line index is out of range.
void check_move(const Move& mv, const BoardDims& dims);

BoardState solved_state(const BoardDims& dims);

// Shifts the selected line in place. Amounts that are multiples of the line
// length leave the cells unchanged. No validation beyond the index range.
template <typename Cell>
void apply_move_in_place(std::span<Cell> cells, const Move& mv, const BoardDims& dims) {
  const int rows = dims.rows();
  const int cols = dims.cols();
  if (mv.axis == Axis::kRow) {
    int a = mv.amount % cols;
    if (a < 0) a += cols;
    if (a == 0) return;
    auto first = cells.begin() + static_cast<std::ptrdiff_t>(mv.index - 1) * cols;
    std::rotate(first, first + a, first + cols);
    return;
  }
  int a = mv.amount % rows;
  if (a < 0) a += rows;
  if (a == 0) return;
  constexpr int kStackRows = 64;
  std::array<Cell, kStackRows> stack_buf{};
  std::vector<Cell> heap_buf;
  Cell* column = stack_buf.data();
  if (rows > kStackRows) {
    heap_buf.resize(static_cast<std::size_t>(rows));
    column = heap_buf.data();
  }
  const std::size_t c = static_cast<std::size_t>(mv.index - 1);
  for (int r = 0; r < rows; ++r) column[(r - a + rows) % rows] = cells[c + static_cast<std::size_t>(r) * cols];
  for (int r = 0; r < rows; ++r) cells[c + static_cast<std::size_t>(r) * cols] = column[r];
}

BoardState apply_move(const BoardState& state, const Move& mv, const BoardDims& dims);
// Left fold of apply_move.
BoardState apply_sequence(const BoardState& state, std::span<const Move> seq, const BoardDims& dims);

// Every nontrivial normalized single-line shift, rows first (row 1 amounts
// 1..cols-1, row 2, ...), then columns. Size rows*(cols-1) + cols*(rows-1).
std::vector<Move> generators(const BoardDims& dims);

// One state per generator, in generators() order.
std::vector<BoardState> neighbors(const BoardState& state, const BoardDims& dims);

// Text forms. States: comma-separated 0-based tiles in row-major order.
// Moves: ('R' | 'C') <1-based index> ':' <signed nonzero integer>.
BoardState parse_state(std::string_view text, const BoardDims& dims);
std::string format_state(const BoardState& state);

Move parse_move(std::string_view token);
std::string format_move(const Move& mv);

// Whitespace-separated move tokens, validated against dims. A token whose
// amount is a multiple of its line length is rejected unless lenient, in
// which case it is kept and acts as a no-op.
MoveSequence parse_sequence(std::string_view text, const BoardDims& dims, bool lenient = false);
std::string format_sequence(std::span<const Move> seq);

}  // namespace tmc
