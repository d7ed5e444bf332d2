#include "tmc/board.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace tmc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Whole-field integer parse; a leading '+' is accepted.
bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) return false;
  }
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

BoardDims::BoardDims(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 2 || cols < 2) {
    throw InvalidArgument("board dimensions must be at least 2x2, got " + std::to_string(rows) + "x" +
                          std::to_string(cols));
  }
}

int phi(const BoardDims& dims, int row, int col) {
  if (row < 1 || row > dims.rows() || col < 1 || col > dims.cols()) {
    throw InvalidArgument("coordinates (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") outside the board");
  }
  return dims.cols() * (row - 1) + col;
}

Position position_of(const BoardDims& dims, int id) {
  if (id < 1 || id > dims.cell_count()) {
    throw InvalidArgument("position id " + std::to_string(id) + " outside the board");
  }
  return Position{(id - 1) / dims.cols() + 1, (id - 1) % dims.cols() + 1};
}

BoardState::BoardState(std::vector<int> cells) : cells_(std::move(cells)) {
  std::vector<bool> seen(cells_.size(), false);
  for (int v : cells_) {
    if (v < 0 || v >= static_cast<int>(cells_.size())) {
      throw InvalidArgument("tile value " + std::to_string(v) + " out of range");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("duplicate tile value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool BoardState::is_solved() const noexcept {
  for (std::size_t p = 0; p < cells_.size(); ++p) {
    if (cells_[p] != static_cast<int>(p)) return false;
  }
  return true;
}

int line_length(const BoardDims& dims, Axis axis) {
  return axis == Axis::kRow ? dims.cols() : dims.rows();
}

void check_move(const Move& mv, const BoardDims& dims) {
  const int lines = mv.axis == Axis::kRow ? dims.rows() : dims.cols();
  if (mv.index < 1 || mv.index > lines) {
    throw InvalidArgument("line index " + std::to_string(mv.index) + " out of range for " + format_move(mv));
  }
}

Move normalized(const Move& mv, const BoardDims& dims) {
  check_move(mv, dims);
  const int len = line_length(dims, mv.axis);
  int a = mv.amount % len;
  if (a < 0) a += len;
  if (a == 0) throw InvalidArgument("move " + format_move(mv) + " is a multiple of the line length");
  return Move{mv.axis, mv.index, a};
}

BoardState solved_state(const BoardDims& dims) {
  std::vector<int> cells(static_cast<std::size_t>(dims.cell_count()));
  std::iota(cells.begin(), cells.end(), 0);
  return BoardState(std::move(cells));
}

BoardState apply_move(const BoardState& state, const Move& mv, const BoardDims& dims) {
  if (state.size() != dims.cell_count()) throw InvalidArgument("state size does not match board");
  check_move(mv, dims);
  std::vector<int> cells = state.cells();
  apply_move_in_place(std::span<int>(cells), mv, dims);
  return BoardState(std::move(cells));
}

BoardState apply_sequence(const BoardState& state, std::span<const Move> seq, const BoardDims& dims) {
  if (state.size() != dims.cell_count()) throw InvalidArgument("state size does not match board");
  for (const Move& mv : seq) check_move(mv, dims);
  std::vector<int> cells = state.cells();
  for (const Move& mv : seq) apply_move_in_place(std::span<int>(cells), mv, dims);
  return BoardState(std::move(cells));
}

std::vector<Move> generators(const BoardDims& dims) {
  std::vector<Move> out;
  out.reserve(static_cast<std::size_t>(dims.rows() * (dims.cols() - 1) + dims.cols() * (dims.rows() - 1)));
  for (int r = 1; r <= dims.rows(); ++r) {
    for (int a = 1; a < dims.cols(); ++a) out.push_back(Move{Axis::kRow, r, a});
  }
  for (int c = 1; c <= dims.cols(); ++c) {
    for (int a = 1; a < dims.rows(); ++a) out.push_back(Move{Axis::kCol, c, a});
  }
  return out;
}

std::vector<BoardState> neighbors(const BoardState& state, const BoardDims& dims) {
  std::vector<BoardState> out;
  for (const Move& g : generators(dims)) out.push_back(apply_move(state, g, dims));
  return out;
}

BoardState parse_state(std::string_view text, const BoardDims& dims) {
  std::vector<int> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view field = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    int v = 0;
    if (!parse_int(field, v)) throw ParseError("malformed cell value '" + std::string(field) + "'");
    cells.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(cells.size()) != dims.cell_count()) {
    throw ParseError("expected " + std::to_string(dims.cell_count()) + " cells, got " +
                     std::to_string(cells.size()));
  }
  try {
    return BoardState(std::move(cells));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("not a permutation: ") + e.what());
  }
}

std::string format_state(const BoardState& state) {
  std::string out;
  for (int p = 0; p < state.size(); ++p) {
    if (p) out += ',';
    out += std::to_string(state[static_cast<std::size_t>(p)]);
  }
  return out;
}

Move parse_move(std::string_view token) {
  const std::string_view t = trim(token);
  const auto bad = [&] { return ParseError("malformed move token '" + std::string(t) + "'"); };
  if (t.size() < 4) throw bad();
  Axis axis;
  if (t[0] == 'R') {
    axis = Axis::kRow;
  } else if (t[0] == 'C') {
    axis = Axis::kCol;
  } else {
    throw bad();
  }
  const std::size_t colon = t.find(':');
  if (colon == std::string_view::npos) throw bad();
  const std::string_view index_text = t.substr(1, colon - 1);
  if (index_text.empty() || !std::isdigit(static_cast<unsigned char>(index_text.front()))) throw bad();
  int index = 0;
  int amount = 0;
  if (!parse_int(index_text, index) || index < 1) throw bad();
  if (!parse_int(t.substr(colon + 1), amount) || amount == 0) throw bad();
  return Move{axis, index, amount};
}

std::string format_move(const Move& mv) {
  std::string out(1, mv.axis == Axis::kRow ? 'R' : 'C');
  out += std::to_string(mv.index);
  out += ':';
  if (mv.amount > 0) out += '+';
  out += std::to_string(mv.amount);
  return out;
}

MoveSequence parse_sequence(std::string_view text, const BoardDims& dims, bool lenient) {
  MoveSequence seq;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      Move mv = parse_move(text.substr(i, j - i));
      try {
        check_move(mv, dims);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
      if (!lenient && mv.amount % line_length(dims, mv.axis) == 0) {
        throw ParseError("move " + format_move(mv) + " is a multiple of the line length");
      }
      seq.push_back(mv);
    }
    i = j;
  }
  return seq;
}

std::string format_sequence(std::span<const Move> seq) {
  std::string out;
  for (const Move& mv : seq) {
    if (!out.empty()) out += ' ';
    out += format_move(mv);
  }
  return out;
}

}  // namespace tmc
