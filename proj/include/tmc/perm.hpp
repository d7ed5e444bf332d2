#pragma once

#include <span>
#include <string>
#include <vector>

#include "tmc/big_count.hpp"
#include "tmc/board.hpp"

namespace tmc {

// A bijection on 0..N-1; images()[i] is the image of point i.
class Permutation {
 public:
  // Throws InvalidArgument unless images is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  const std::vector<int>& images() const noexcept { return images_; }
  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

enum class Parity { kEven, kOdd };

// Apply p first, then q: i -> q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Parity parity(const Permutation& p);
inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::kEven : Parity::kOdd; }

using Cycle = std::vector<int>;
// Nontrivial cycles only, each starting at its smallest point, sorted by
// that point.
std::vector<Cycle> cycle_decomposition(const Permutation& p);
// "(1 4 7)(2 5)" with points shifted to 1-based; "()" for the identity.
std::string format_cycles(std::span<const Cycle> cycles);

// Position-notation: maps each tile to the 0-based position holding it.
// It is the inverse of the number-notation permutation.
Permutation position_notation(const BoardState& state);
BoardState number_notation(const Permutation& positions);

// Where a move sends the content of each position.
Permutation move_permutation(const Move& mv, const BoardDims& dims);
// Left-to-right product of the moves' position permutations.
Permutation sequence_permutation(std::span<const Move> seq, const BoardDims& dims);

// Both dimensions odd: every generator is an even permutation and the group
// is alternating. Otherwise it is the full symmetric group.
bool is_alternating(const BoardDims& dims);
BigCount group_order(const BoardDims& dims);
bool is_solvable(const BoardState& state, const BoardDims& dims);

}  // namespace tmc
