#pragma once

// Constructive solving by commutator 3-cycles.
//
// The core is a 7-move commutator-like word on row 1 and column 1 that
// cycles the contents of positions 1 -> 2 -> 3 -> 1 and fixes everything
// else. Any other 3-cycle (a b c) is obtained by conjugation: a routing word
// carries a, b, c onto 1, 2, 3, the core runs, and the routing is undone.
// Boards with two columns run the same construction on the transposed board.

#include <cstddef>
#include <span>

#include "tmc/board.hpp"

namespace tmc {

struct Solution {
  MoveSequence moves;

  std::size_t length() const noexcept { return moves.size(); }
};

// The 7-move core. Needs a line of length >= 3: for cols >= 3 it cycles
// positions (1 2 3); for cols == 2, rows >= 3 it is the transposed word and
// cycles (1 3 5), i.e. the first three cells of column 1.
// Throws InvalidArgument on 2x2.
MoveSequence lemma31_sequence(const BoardDims& dims);

// A sequence whose net effect moves the content of position a to b, b to c
// and c to a (1-based ids), fixing all other positions. Every move is
// normalized. Throws InvalidArgument for non-distinct or out-of-range
// positions and on 2x2.
MoveSequence three_cycle(const BoardDims& dims, int a, int b, int c);

// Merges adjacent moves on the same line and drops the ones that cancel.
// Output amounts are normalized.
MoveSequence merge_adjacent(std::span<const Move> seq, const BoardDims& dims);

// Throws UnsolvableState when the state is outside the reachable group.
// 2x2 boards are solved optimally by exhaustive search; larger boards get
// an unoptimized 3-cycle solution.
Solution solve(const BoardState& state, const BoardDims& dims);

bool verify(const BoardState& state, std::span<const Move> seq, const BoardDims& dims);

}  // namespace tmc
