#pragma once

// Diameter lower bounds by counting canonical move arrangements.
//
// Two relations shrink the set of move words without losing any group
// element: consecutive shifts of the same line merge into one, and shifts of
// distinct parallel lines commute. Keeping only words where every run of
// same-axis moves has strictly increasing line index leaves a set Omega(i)
// of canonical words of length i with |Omega(i)| >= |layer i|. While
// sum_{k<=L} |Omega(k)| is below the group order the diameter exceeds L.
// The counts are split into two families by the axis of the last move and
// indexed by its line, which gives a linear recurrence.

#include <optional>
#include <string>
#include <vector>

#include "tmc/big_count.hpp"
#include "tmc/board.hpp"

namespace tmc {

enum class RecurrenceConvention {
  // The indexing behind the published bound tables: level 1 has one entry
  // per row (cols-1 shifts each) and one per column (rows-1 shifts each);
  // from level 2 on the first family has cols entries with multiplier
  // cols-1 and the second has rows entries with multiplier rows-1.
  // Identical to kExactCount on square boards.
  kTabulated,
  // Exact number of canonical words: rows entries with multiplier cols-1
  // and cols entries with multiplier rows-1 at every level.
  kExactCount,
};

struct OmegaLevel {
  // Counts of words ending in a given line of each family; empty at level 0.
  std::vector<BigCount> row_family;
  std::vector<BigCount> col_family;
  BigCount omega;
  BigCount cumulative;
};

struct OmegaTable {
  BoardDims dims;
  RecurrenceConvention convention;
  // levels[0] is the empty word.
  std::vector<OmegaLevel> levels;
};

// Iterates the recurrence one level at a time, keeping only the current
// level.
class OmegaRecurrence {
 public:
  explicit OmegaRecurrence(const BoardDims& dims, RecurrenceConvention convention = RecurrenceConvention::kTabulated);

  int level() const noexcept { return level_; }
  const OmegaLevel& current() const noexcept { return current_; }
  void advance();

 private:
  BoardDims dims_;
  RecurrenceConvention convention_;
  int level_ = 0;
  OmegaLevel current_;
};

struct OmegaStop {
  // Stop at the first level whose cumulative count reaches target.
  // Defaults to the group order when neither field is set.
  std::optional<BigCount> target;
  std::optional<int> max_level;
};

OmegaTable omega_series(const BoardDims& dims, const OmegaStop& stop = {},
                        RecurrenceConvention convention = RecurrenceConvention::kTabulated);

// Smallest L whose cumulative count reaches the group order; the diameter
// is at least L.
int lower_bound(const BoardDims& dims, RecurrenceConvention convention = RecurrenceConvention::kTabulated);

class BoundGrid {
 public:
  BoundGrid(int max_rows, int max_cols, std::vector<int> values);

  int max_rows() const noexcept { return max_rows_; }
  int max_cols() const noexcept { return max_cols_; }
  // Bound for the rows x cols board, 2 <= rows <= max_rows, 2 <= cols <= max_cols.
  int at(int rows, int cols) const;

 private:
  int max_rows_;
  int max_cols_;
  std::vector<int> values_;
};

BoundGrid lower_bound_table(int max_rows, int max_cols,
                            RecurrenceConvention convention = RecurrenceConvention::kTabulated);

// Columns: i, optional per-family entries (row_1.., col_1..), omega,
// cumulative.
std::string omega_table_csv(const OmegaTable& table, bool with_families);
// First column is the row count, then one column per column count.
std::string bound_grid_csv(const BoundGrid& grid);

}  // namespace tmc
