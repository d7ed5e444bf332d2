#include <boost/multiprecision/gmp.hpp>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tmc/bfs.hpp"
#include "tmc/lower_bound.hpp"
#include "tmc/perm.hpp"

using namespace tmc;

namespace {

std::vector<std::string> digits(const std::vector<BigCount>& v) {
  std::vector<std::string> out;
  for (const BigCount& x : v) out.push_back(to_string(x));
  return out;
}

// Published 4x4 table: level, four family entries, omega, cumulative.
struct Table2Row {
  int i;
  std::array<const char*, 4> family;
  const char* omega;
  const char* cumulative;
};

const Table2Row kTable2[] = {
    {1, {"3", "3", "3", "3"}, "24", "25"},
    {2, {"36", "45", "54", "63"}, "396", "421"},
    {3, {"594", "702", "837", "999"}, "6264", "6685"},
    {4, {"9396", "11178", "13284", "15795"}, "99306", "105991"},
    {5, {"148959", "177147", "210681", "250533"}, "1574640", "1680631"},
    {6, {"2361960", "2808837", "3340278", "3972321"}, "24966792", "26647423"},
    {7, {"37450188", "44536068", "52962579", "62983413"}, "395864496", "422511919"},
    {8, {"593796744", "706147308", "839755512", "998643249"}, "6276685626", "6699197545"},
    {9, {"9415028439", "11196418671", "13314860595", "15834127131"}, "99520869672", "106220067217"},
    {10, {"149281304508", "177526389825", "211115645838", "251060227623"}, "1577967135588", "1684187202805"},
    {11,
     {"2366950703382", "2814794616906", "3347373786381", "3980720723895"},
     "25019679661128",
     "26703866863933"},
};

}  // namespace

TEST_CASE("4x4 series matches the published table digit for digit") {
  const OmegaTable t = omega_series(BoardDims(4, 4));
  REQUIRE(t.levels.size() == 12);
  CHECK(t.levels[0].omega == 1);
  CHECK(t.levels[0].cumulative == 1);
  CHECK(t.levels[0].row_family.empty());
  for (const Table2Row& row : kTable2) {
    CAPTURE(row.i);
    const OmegaLevel& l = t.levels[static_cast<std::size_t>(row.i)];
    const std::vector<std::string> want(row.family.begin(), row.family.end());
    CHECK(digits(l.row_family) == want);
    CHECK(digits(l.col_family) == want);
    CHECK(to_string(l.omega) == row.omega);
    CHECK(to_string(l.cumulative) == row.cumulative);
  }
  CHECK(lower_bound(BoardDims(4, 4)) == 11);
  CHECK(t.levels[10].cumulative < group_order(BoardDims(4, 4)));
}

TEST_CASE("3x3 series") {
  const OmegaTable t = omega_series(BoardDims(3, 3), OmegaStop{.max_level = 4});
  REQUIRE(t.levels.size() == 5);
  CHECK(t.levels[1].omega == 12);
  CHECK(t.levels[2].omega == 96);
  CHECK(t.levels[3].omega == 736);
  CHECK(t.levels[4].omega == 5664);
}

TEST_CASE("exact convention counts canonical words") {
  for (auto [m, n, depth] : {std::tuple{2, 2, 6}, {2, 3, 6}, {3, 2, 6}, {3, 3, 5}, {2, 4, 5}, {3, 4, 4}, {4, 3, 4}}) {
    CAPTURE(m);
    CAPTURE(n);
    const OmegaTable t = omega_series(BoardDims(m, n), OmegaStop{.max_level = depth}, RecurrenceConvention::kExactCount);
    for (int i = 0; i <= depth; ++i) {
      CAPTURE(i);
      CHECK(t.levels[static_cast<std::size_t>(i)].omega == oracle::count_canonical_words(m, n, i));
    }
  }
}

TEST_CASE("conventions agree on square boards") {
  for (int n = 2; n <= 8; ++n) {
    const BoardDims dims(n, n);
    const OmegaTable a = omega_series(dims, OmegaStop{.max_level = 15});
    const OmegaTable b = omega_series(dims, OmegaStop{.max_level = 15}, RecurrenceConvention::kExactCount);
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
      CHECK(a.levels[i].omega == b.levels[i].omega);
      CHECK(a.levels[i].row_family == b.levels[i].row_family);
    }
  }
}

TEST_CASE("series invariants") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      for (RecurrenceConvention c : {RecurrenceConvention::kTabulated, RecurrenceConvention::kExactCount}) {
        const BoardDims dims(m, n);
        const OmegaTable t = omega_series(dims, {}, c);
        CHECK(t.levels[1].omega == m * (n - 1) + n * (m - 1));
        for (std::size_t i = 1; i < t.levels.size(); ++i) {
          const OmegaLevel& l = t.levels[i];
          BigCount s = 0;
          for (const BigCount& v : l.row_family) s += v;
          for (const BigCount& v : l.col_family) s += v;
          CHECK(l.omega == s);
          CHECK(l.cumulative == t.levels[i - 1].cumulative + l.omega);
          CHECK(l.cumulative > t.levels[i - 1].cumulative);
        }
        CHECK(t.levels.back().cumulative >= group_order(dims));
        CHECK(t.levels[t.levels.size() - 2].cumulative < group_order(dims));
        CHECK(lower_bound(dims, c) == static_cast<int>(t.levels.size()) - 1);
        CHECK(lower_bound(dims, c) == lower_bound(dims.transposed(), c));
      }
    }
  }
}

TEST_CASE("stop rules") {
  const BoardDims dims(4, 4);
  CHECK(omega_series(dims, OmegaStop{.max_level = 0}).levels.size() == 1);
  CHECK(omega_series(dims, OmegaStop{.max_level = 3}).levels.size() == 4);
  CHECK(omega_series(dims, OmegaStop{.target = BigCount(421)}).levels.size() == 3);
  CHECK(omega_series(dims, OmegaStop{.target = BigCount(422)}).levels.size() == 4);
  CHECK(omega_series(dims, OmegaStop{.target = BigCount(10000), .max_level = 2}).levels.size() == 3);
}

TEST_CASE("published bounds") {
  CHECK(lower_bound(BoardDims(3, 3)) == 6);
  CHECK(lower_bound(BoardDims(5, 5)) == 18);
  CHECK(lower_bound(BoardDims(8, 8)) == 48);
  CHECK(lower_bound(BoardDims(2, 5)) == 7);
  CHECK(lower_bound(BoardDims(3, 6)) == 13);
  CHECK(lower_bound(BoardDims(7, 4)) == 20);

  const BoundGrid g = lower_bound_table(8, 8);
  CHECK(g.at(2, 2) == 3);
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) CHECK(g.at(m, n) == g.at(n, m));
  CHECK_THROWS_AS(g.at(9, 2), InvalidArgument);
  CHECK_THROWS_AS(lower_bound_table(1, 4), InvalidArgument);
}

TEST_CASE("bounds never exceed the exact diameter") {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
    const BoardDims dims(m, n);
    const LayerHistogram h = bfs_diameter(dims);
    for (RecurrenceConvention c : {RecurrenceConvention::kTabulated, RecurrenceConvention::kExactCount}) {
      CHECK(lower_bound(dims, c) <= h.diameter());
      const OmegaTable t = omega_series(dims, OmegaStop{.max_level = h.diameter()}, c);
      for (std::size_t i = 0; i < h.layers().size(); ++i) {
        CAPTURE(i);
        CHECK(t.levels[i].omega >= h.layers()[i]);
      }
      CHECK(t.levels[0].omega == h.layers()[0]);
      CHECK(t.levels[1].omega == h.layers()[1]);
    }
  }
}

TEST_CASE("digits agree with a GMP backend") {
  // Same recurrence written out directly over mpz_int.
  using Mpz = boost::multiprecision::mpz_int;
  for (auto [m, n] : {std::pair{4, 4}, {8, 8}, {3, 7}, {6, 2}}) {
    const OmegaTable t = omega_series(BoardDims(m, n));
    std::vector<Mpz> row(static_cast<std::size_t>(m), Mpz(n - 1));
    std::vector<Mpz> col(static_cast<std::size_t>(n), Mpz(m - 1));
    Mpz cumulative = 1 + Mpz(m * (n - 1) + n * (m - 1));
    CHECK(to_string(t.levels[1].cumulative) == cumulative.str());
    for (std::size_t i = 2; i < t.levels.size(); ++i) {
      Mpz row_total = 0;
      Mpz col_total = 0;
      for (const Mpz& v : row) row_total += v;
      for (const Mpz& v : col) col_total += v;
      std::vector<Mpz> next_row;
      std::vector<Mpz> next_col;
      Mpz prefix = 0;
      for (int k = 0; k < n; ++k) {
        next_row.push_back((n - 1) * (prefix + col_total));
        if (k < static_cast<int>(row.size())) prefix += row[static_cast<std::size_t>(k)];
      }
      prefix = 0;
      for (int k = 0; k < m; ++k) {
        next_col.push_back((m - 1) * (prefix + row_total));
        if (k < static_cast<int>(col.size())) prefix += col[static_cast<std::size_t>(k)];
      }
      row = next_row;
      col = next_col;
      for (const Mpz& v : row) cumulative += v;
      for (const Mpz& v : col) cumulative += v;
      CHECK(to_string(t.levels[i].cumulative) == cumulative.str());
    }
  }
}

TEST_CASE("csv layouts") {
  const OmegaTable t = omega_series(BoardDims(4, 4), OmegaStop{.max_level = 2});
  CHECK(omega_table_csv(t, false) == "i,omega,cumulative\n0,1,1\n1,24,25\n2,396,421\n");
  CHECK(omega_table_csv(t, true) ==
        "i,row_1,row_2,row_3,row_4,col_1,col_2,col_3,col_4,omega,cumulative\n"
        "0,,,,,,,,,1,1\n"
        "1,3,3,3,3,3,3,3,3,24,25\n"
        "2,36,45,54,63,36,45,54,63,396,421\n");
  CHECK(bound_grid_csv(lower_bound_table(3, 3)) == "rows,2,3\n2,3,4\n3,4,6\n");
}
