#include "tmc/perm.hpp"

#include <algorithm>
#include <numeric>

namespace tmc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a bijection on 0.." + std::to_string(size() - 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("cannot compose permutations of different lengths");
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(i)] = q(p(i));
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p(i))] = i;
  return Permutation(std::move(out));
}

Parity parity(const Permutation& p) {
  // N minus the number of cycles (fixed points included).
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  int cycles = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) seen[static_cast<std::size_t>(j)] = true;
  }
  return (p.size() - cycles) % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  std::vector<Cycle> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  // Scanning upward means each cycle is first met at its smallest point.
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
    Cycle c;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string format_cycles(std::span<const Cycle> cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation position_notation(const BoardState& state) { return inverse(Permutation(state.cells())); }

BoardState number_notation(const Permutation& positions) { return BoardState(inverse(positions).images()); }

Permutation move_permutation(const Move& mv, const BoardDims& dims) {
  return sequence_permutation(std::span<const Move>(&mv, 1), dims);
}

Permutation sequence_permutation(std::span<const Move> seq, const BoardDims& dims) {
  // Starting from the solved board, tile p tracks the content of position p.
  return position_notation(apply_sequence(solved_state(dims), seq, dims));
}

bool is_alternating(const BoardDims& dims) { return dims.rows() % 2 == 1 && dims.cols() % 2 == 1; }

BigCount group_order(const BoardDims& dims) {
  BigCount n = factorial(static_cast<unsigned>(dims.cell_count()));
  return is_alternating(dims) ? BigCount(n / 2) : n;
}

bool is_solvable(const BoardState& state, const BoardDims& dims) {
  if (state.size() != dims.cell_count()) throw InvalidArgument("state size does not match board");
  if (!is_alternating(dims)) return true;
  return parity(Permutation(state.cells())) == Parity::kEven;
}

}  // namespace tmc
