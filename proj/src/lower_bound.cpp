#include "tmc/lower_bound.hpp"

#include <algorithm>

#include "tmc/perm.hpp"

namespace tmc {

namespace {

BigCount sum(const std::vector<BigCount>& v, std::size_t prefix) {
  BigCount s = 0;
  for (std::size_t j = 0; j < std::min(prefix, v.size()); ++j) s += v[j];
  return s;
}

BigCount sum(const std::vector<BigCount>& v) { return sum(v, v.size()); }

// Words ending in the k-th line of a family: any shift of that line after a
// word ending in an earlier line of the same family or any line of the
// other family.
std::vector<BigCount> next_family(const std::vector<BigCount>& same, const std::vector<BigCount>& other,
                                  int entries, int multiplier) {
  const BigCount other_total = sum(other);
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(entries));
  for (int k = 0; k < entries; ++k) out.push_back(multiplier * (sum(same, static_cast<std::size_t>(k)) + other_total));
  return out;
}

}  // namespace

OmegaRecurrence::OmegaRecurrence(const BoardDims& dims, RecurrenceConvention convention)
    : dims_(dims), convention_(convention) {
  current_.omega = 1;
  current_.cumulative = 1;
}

void OmegaRecurrence::advance() {
  const int m = dims_.rows();
  const int n = dims_.cols();
  OmegaLevel next;
  if (level_ == 0) {
    next.row_family.assign(static_cast<std::size_t>(m), BigCount(n - 1));
    next.col_family.assign(static_cast<std::size_t>(n), BigCount(m - 1));
  } else if (convention_ == RecurrenceConvention::kExactCount) {
    next.row_family = next_family(current_.row_family, current_.col_family, m, n - 1);
    next.col_family = next_family(current_.col_family, current_.row_family, n, m - 1);
  } else {
    next.row_family = next_family(current_.row_family, current_.col_family, n, n - 1);
    next.col_family = next_family(current_.col_family, current_.row_family, m, m - 1);
  }
  next.omega = sum(next.row_family) + sum(next.col_family);
  next.cumulative = current_.cumulative + next.omega;
  current_ = std::move(next);
  ++level_;
}

OmegaTable omega_series(const BoardDims& dims, const OmegaStop& stop, RecurrenceConvention convention) {
  std::optional<BigCount> target = stop.target;
  if (!target && !stop.max_level) target = group_order(dims);
  OmegaRecurrence rec(dims, convention);
  OmegaTable table{dims, convention, {rec.current()}};
  while (!(target && rec.current().cumulative >= *target) && !(stop.max_level && rec.level() >= *stop.max_level)) {
    rec.advance();
    table.levels.push_back(rec.current());
  }
  return table;
}

int lower_bound(const BoardDims& dims, RecurrenceConvention convention) {
  const BigCount order = group_order(dims);
  OmegaRecurrence rec(dims, convention);
  while (rec.current().cumulative < order) rec.advance();
  return rec.level();
}

BoundGrid::BoundGrid(int max_rows, int max_cols, std::vector<int> values)
    : max_rows_(max_rows), max_cols_(max_cols), values_(std::move(values)) {
  if (max_rows < 2 || max_cols < 2 ||
      values_.size() != static_cast<std::size_t>((max_rows - 1) * (max_cols - 1))) {
    throw InvalidArgument("bound grid shape does not match its values");
  }
}

int BoundGrid::at(int rows, int cols) const {
  if (rows < 2 || rows > max_rows_ || cols < 2 || cols > max_cols_) {
    throw InvalidArgument("board " + std::to_string(rows) + "x" + std::to_string(cols) + " outside the grid");
  }
  return values_[static_cast<std::size_t>((rows - 2) * (max_cols_ - 1) + (cols - 2))];
}

BoundGrid lower_bound_table(int max_rows, int max_cols, RecurrenceConvention convention) {
  if (max_rows < 2 || max_cols < 2) throw InvalidArgument("bound grid needs at least 2 rows and 2 columns");
  std::vector<int> values;
  for (int m = 2; m <= max_rows; ++m) {
    for (int n = 2; n <= max_cols; ++n) values.push_back(lower_bound(BoardDims(m, n), convention));
  }
  return BoundGrid(max_rows, max_cols, std::move(values));
}

std::string omega_table_csv(const OmegaTable& table, bool with_families) {
  std::size_t row_width = 0;
  std::size_t col_width = 0;
  for (const OmegaLevel& l : table.levels) {
    row_width = std::max(row_width, l.row_family.size());
    col_width = std::max(col_width, l.col_family.size());
  }
  std::string out = "i";
  if (with_families) {
    for (std::size_t k = 1; k <= row_width; ++k) out += ",row_" + std::to_string(k);
    for (std::size_t k = 1; k <= col_width; ++k) out += ",col_" + std::to_string(k);
  }
  out += ",omega,cumulative\n";
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    const OmegaLevel& l = table.levels[i];
    out += std::to_string(i);
    if (with_families) {
      for (std::size_t k = 0; k < row_width; ++k) out += "," + (k < l.row_family.size() ? to_string(l.row_family[k]) : "");
      for (std::size_t k = 0; k < col_width; ++k) out += "," + (k < l.col_family.size() ? to_string(l.col_family[k]) : "");
    }
    out += "," + to_string(l.omega) + "," + to_string(l.cumulative) + "\n";
  }
  return out;
}

std::string bound_grid_csv(const BoundGrid& grid) {
  std::string out = "rows";
  for (int n = 2; n <= grid.max_cols(); ++n) out += "," + std::to_string(n);
  out += "\n";
  for (int m = 2; m <= grid.max_rows(); ++m) {
    out += std::to_string(m);
    for (int n = 2; n <= grid.max_cols(); ++n) out += "," + std::to_string(grid.at(m, n));
    out += "\n";
  }
  return out;
}

}  // namespace tmc
