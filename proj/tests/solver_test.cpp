#include <random>

#include "doctest.h"
#include "tmc/cli.hpp"
#include "tmc/perm.hpp"
#include "tmc/solver.hpp"

using namespace tmc;

namespace {

std::vector<int> support_of(const Permutation& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) != i) out.push_back(i + 1);
  }
  return out;
}

// The 3-cycle a -> b -> c -> a on 1-based points, built directly.
Permutation cycle_oracle(int n, int a, int b, int c) {
  std::vector<int> images = Permutation::identity(n).images();
  images[static_cast<std::size_t>(a - 1)] = b - 1;
  images[static_cast<std::size_t>(b - 1)] = c - 1;
  images[static_cast<std::size_t>(c - 1)] = a - 1;
  return Permutation(images);
}

}  // namespace

TEST_CASE("core word is a 3-cycle on positions 1, 2, 3") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 3; n <= 6; ++n) {
      const BoardDims dims(m, n);
      const MoveSequence seq = lemma31_sequence(dims);
      CHECK(seq.size() == 7);
      const Permutation p = sequence_permutation(seq, dims);
      CHECK(support_of(p) == std::vector<int>{1, 2, 3});
      CHECK(parity(p) == Parity::kEven);
      MoveSequence thrice = seq;
      thrice.insert(thrice.end(), seq.begin(), seq.end());
      thrice.insert(thrice.end(), seq.begin(), seq.end());
      CHECK(sequence_permutation(thrice, dims).is_identity());
      // Regression constant for the orientation: content 1 -> 2 -> 3 -> 1.
      CHECK(p == cycle_oracle(m * n, 1, 2, 3));
    }
  }
  const BoardDims d3(3, 3);
  CHECK(apply_sequence(solved_state(d3), lemma31_sequence(d3), d3).cells() ==
        std::vector<int>{2, 0, 1, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("two-column boards use the transposed core word") {
  for (int m = 3; m <= 6; ++m) {
    const BoardDims dims(m, 2);
    const Permutation p = sequence_permutation(lemma31_sequence(dims), dims);
    CHECK(support_of(p) == std::vector<int>{1, 3, 5});
  }
  CHECK_THROWS_AS(lemma31_sequence(BoardDims(2, 2)), InvalidArgument);
}

TEST_CASE("three_cycle realizes exactly (a b c)") {
  const BoardDims d3(3, 3);
  CHECK(sequence_permutation(three_cycle(d3, 1, 2, 3), d3) == sequence_permutation(lemma31_sequence(d3), d3));
  CHECK(sequence_permutation(three_cycle(d3, 4, 5, 6), d3) == cycle_oracle(9, 4, 5, 6));
  CHECK(format_cycles(cycle_decomposition(sequence_permutation(three_cycle(d3, 9, 1, 5), d3))) == "(1 5 9)");

  std::mt19937_64 rng(31);
  const std::vector<BoardDims> boards{BoardDims(4, 4), BoardDims(2, 3), BoardDims(2, 5), BoardDims(3, 2),
                                      BoardDims(5, 2), BoardDims(3, 7), BoardDims(6, 4)};
  for (const BoardDims& dims : boards) {
    const int n = dims.cell_count();
    for (int k = 0; k < 100; ++k) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(n)) + 1;
      int b = static_cast<int>(rng() % static_cast<unsigned>(n)) + 1;
      int c = static_cast<int>(rng() % static_cast<unsigned>(n)) + 1;
      if (a == b || b == c || a == c) continue;
      const MoveSequence seq = three_cycle(dims, a, b, c);
      CHECK(sequence_permutation(seq, dims) == cycle_oracle(n, a, b, c));
      for (const Move& mv : seq) {
        CHECK(mv.amount >= 1);
        CHECK(mv.amount < line_length(dims, mv.axis));
      }
    }
  }
  CHECK_THROWS_AS(three_cycle(d3, 1, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(three_cycle(d3, 1, 2, 10), InvalidArgument);
  CHECK_THROWS_AS(three_cycle(BoardDims(2, 2), 1, 2, 3), InvalidArgument);
}

TEST_CASE("merge_adjacent") {
  const BoardDims dims(3, 4);
  const MoveSequence seq{{Axis::kRow, 1, 1}, {Axis::kRow, 1, 2}, {Axis::kCol, 2, 1},
                         {Axis::kCol, 2, -1}, {Axis::kRow, 1, 1}, {Axis::kRow, 2, -1}};
  // R1:+1 R1:+2 -> R1:+3; C2 pair cancels; R1:+3 R1:+1 -> identity; R2:-1 -> R2:+3.
  CHECK(merge_adjacent(seq, dims) == MoveSequence{{Axis::kRow, 2, 3}});
  CHECK(sequence_permutation(merge_adjacent(seq, dims), dims) == sequence_permutation(seq, dims));
}

TEST_CASE("solve") {
  const BoardDims d3(3, 3);
  CHECK(solve(solved_state(d3), d3).moves.empty());
  const BoardState one_col({3, 1, 2, 6, 4, 5, 0, 7, 8});
  CHECK(verify(one_col, solve(one_col, d3).moves, d3));
  CHECK_THROWS_AS(solve(BoardState({1, 0, 2, 3, 4, 5, 6, 7, 8}), d3), UnsolvableState);
  CHECK_THROWS_AS(solve(solved_state(d3), BoardDims(2, 2)), InvalidArgument);
}

TEST_CASE("solve scrambles") {
  for (const BoardDims& dims : {BoardDims(3, 3), BoardDims(4, 4), BoardDims(2, 3), BoardDims(5, 5), BoardDims(3, 2),
                                BoardDims(2, 4), BoardDims(4, 7)}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Scramble s = scramble(dims, seed, 50);
      const Solution sol = solve(s.state, dims);
      CHECK(verify(s.state, sol.moves, dims));
      for (const Move& mv : sol.moves) CHECK(mv.amount % line_length(dims, mv.axis) != 0);
    }
  }
}

TEST_CASE("odd permutations on even boards get a parity fix") {
  for (const BoardDims& dims : {BoardDims(2, 3), BoardDims(4, 4), BoardDims(3, 4), BoardDims(5, 2)}) {
    std::vector<int> cells = solved_state(dims).cells();
    std::swap(cells[0], cells[1]);
    const BoardState s(cells);
    CHECK(parity(Permutation(cells)) == Parity::kOdd);
    CHECK(verify(s, solve(s, dims).moves, dims));
  }
}

TEST_CASE("2x2 is solved optimally by search") {
  const BoardDims d2(2, 2);
  std::vector<int> cells{0, 1, 2, 3};
  std::size_t longest = 0;
  do {
    const BoardState s(cells);
    const Solution sol = solve(s, d2);
    CHECK(verify(s, sol.moves, d2));
    longest = std::max(longest, sol.length());
  } while (std::next_permutation(cells.begin(), cells.end()));
  CHECK(longest == 4);
}

TEST_CASE("verify") {
  const BoardDims d3(3, 3);
  CHECK(verify(solved_state(d3), {}, d3));
  const Scramble s = scramble(d3, 5, 20);
  REQUIRE_FALSE(s.state.is_solved());
  CHECK_FALSE(verify(s.state, {}, d3));
  MoveSequence undo;
  for (auto it = s.moves.rbegin(); it != s.moves.rend(); ++it) undo.push_back(it->inverse());
  CHECK(verify(s.state, undo, d3));
}
