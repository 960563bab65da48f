#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "column_word.hpp"
#include "matrix.hpp"
#include "oracles.hpp"

using namespace pmh;

namespace {
Grid grid_of(const std::string& text, int rows, int cols, int alphabet = 1) {
  Grid g{rows, cols, alphabet, {}};
  for (char ch : text)
    if (ch >= '0' && ch <= '9') g.cells.push_back(static_cast<std::uint8_t>(ch - '0'));
  REQUIRE(g.cells.size() == static_cast<std::size_t>(rows) * cols);
  return g;
}
}  // namespace

TEST_CASE("packedness predicate") {
  CHECK(is_packed(grid_of("10 01", 2, 2)));
  CHECK_FALSE(is_packed(grid_of("00 11", 2, 2)));  // null first row
  CHECK_FALSE(is_packed(grid_of("2", 1, 1)));      // entry above the bound
  CHECK(is_packed(grid_of("2", 1, 1, 2)));
  CHECK(is_packed(Grid{0, 0, 1, {}}));  // the empty matrix
  CHECK_FALSE(is_packed(grid_of("1 1", 1, 2)));  // not square
}

TEST_CASE("compression") {
  // Left factor of the size-5 column decomposition: 5x3, compresses to 3x3.
  Grid left = grid_of("011 001 000 100 000", 5, 3);
  Grid cp = compress(left);
  CHECK(cp.rows == 3);
  CHECK(cp.cols == 3);
  CHECK(is_packed(cp));
  CHECK(compress(cp) == cp);  // idempotent on the result

  Grid zero = grid_of("00 00", 2, 2);
  Grid empty = compress(zero);
  CHECK(empty.rows == 0);
  CHECK(empty.cols == 0);

  auto m = parse_matrix("1 1\n1 0", 1);
  CHECK(compress(m.to_grid()) == m.to_grid());
}

TEST_CASE("over and under") {
  auto one = parse_matrix("1", 1);
  auto e = PackedMatrix::empty(1);
  CHECK(over(e, one) == one);
  CHECK(under(e, one) == one);
  CHECK(over(one, one) == parse_matrix("1 0\n0 1", 1));
  CHECK(under(one, one) == parse_matrix("0 1\n1 0", 1));
  CHECK_THROWS_AS(over(one, parse_matrix("2", 2)), std::invalid_argument);

  // Associativity on random triples.
  std::mt19937 rng(7);
  auto pool = enumerate_packed(1, 2);
  for (int t = 0; t < 20; ++t) {
    auto& a = pool[rng() % pool.size()];
    auto& b = pool[rng() % pool.size()];
    auto& c = pool[rng() % pool.size()];
    CHECK(over(over(a, b), c) == over(a, over(b, c)));
    CHECK(under(under(a, b), c) == under(a, under(b, c)));
  }
}

TEST_CASE("column splits") {
  // The size-5 example admits the displayed cut after column 3.
  auto m = parse_matrix("0 1 1 0 0\n0 0 1 0 0\n0 0 0 1 1\n1 0 0 0 0\n0 0 0 1 1", 1);
  auto splits = column_splits(m);
  bool found = false;
  for (auto& [l, r] : splits)
    if (l.cols == 3) found = true;
  CHECK(found);

  // Only trivial splits when every cut separates a row's nonzeros.
  auto blocked = parse_matrix("1 1\n1 0", 1);
  CHECK(column_splits(blocked).size() == 2);

  // Identity n = 2: trivial cuts plus the middle one.
  auto id2 = parse_matrix("1 0\n0 1", 1);
  CHECK(column_splits(id2).size() == 3);

  // No split may put nonzeros of one row on both sides.
  for (const auto& mat : enumerate_packed(1, 3))
    for (auto& [l, r] : column_splits(mat))
      for (int row = 0; row < 3; ++row) {
        bool in_left = !Grid(l).row_is_null(row);
        bool in_right = !Grid(r).row_is_null(row);
        CHECK_FALSE((in_left && in_right));
      }
}

TEST_CASE("connectivity") {
  auto one = parse_matrix("1", 1);
  CHECK(one.is_connected());
  CHECK(one.is_anti_connected());
  CHECK_FALSE(over(one, one).is_connected());
  CHECK_FALSE(under(one, one).is_anti_connected());
  CHECK_THROWS_AS(PackedMatrix::empty(1).is_connected(), std::invalid_argument);

  // Connected counts by size match the generator dimensions 0, 1, 6, 252.
  const long expected[] = {1, 6, 252};
  for (int n = 1; n <= 3; ++n) {
    long connected = 0, anti = 0;
    for (const auto& m : enumerate_packed(1, n)) {
      connected += m.is_connected();
      anti += m.is_anti_connected();
    }
    CHECK(connected == expected[n - 1]);
    CHECK(anti == expected[n - 1]);  // transpose/reversal symmetry
  }
}

TEST_CASE("counting formulas") {
  CHECK(count_packed(1, 3, 4) == 45);
  CHECK(count_packed(2, 2, 3) == 32);
  CHECK(count_packed(1, 3, 2) == 0);   // below the support range
  CHECK(count_packed(1, 2, 5) == 0);   // above it
  CHECK(count_packed_by_size(1, 3) == 265);
  CHECK(count_packed_by_size(2, 2) == 56);
  CHECK(count_packed_by_weight(1, 4) == 70);

  // Table 1(a) row 3 and Table 1(b) row 3.
  const long row1a[] = {6, 45, 90, 78, 36, 9, 1};
  const long row1b[] = {48, 720, 2880, 4992, 4608, 2304, 512};
  for (int l = 3; l <= 9; ++l) {
    CHECK(count_packed(1, 3, l) == row1a[l - 3]);
    CHECK(count_packed(2, 3, l) == row1b[l - 3]);
  }
}

TEST_CASE("enumeration agrees with the formulas and is ordered") {
  for (int k = 1; k <= 2; ++k)
    for (int n = 0; n <= 3; ++n) {
      auto all = enumerate_packed(k, n);
      CHECK(BigInt(all.size()) == count_packed_by_size(k, n));
      // Stratified by weight too.
      std::map<int, long> by_weight;
      for (const auto& m : all) ++by_weight[m.weight()];
      for (int l = n; l <= n * n; ++l)
        CHECK(BigInt(by_weight[l]) == count_packed(k, n, l));
      // Documented order: row-major entry strings ascend.
      CHECK(std::is_sorted(all.begin(), all.end(),
                           [](const PackedMatrix& a, const PackedMatrix& b) {
                             return a.cells() < b.cells();
                           }));
      // No duplicates.
      std::set<std::vector<std::uint8_t>> seen;
      for (const auto& m : all) CHECK(seen.insert(m.cells()).second);
    }
  CHECK(enumerate_packed(1, 2).size() == 7);
  CHECK(enumerate_packed_by_weight(1, 3).size() == 10);
  auto empty_stratum = enumerate_packed(1, 0);
  REQUIRE(empty_stratum.size() == 1);
  CHECK(empty_stratum[0].is_empty());
}

TEST_CASE("transpose") {
  auto id = parse_matrix("1 0\n0 1", 1);
  CHECK(id.transpose() == id);
  auto sym = parse_matrix("1 1\n1 0", 1);
  CHECK(sym.transpose() == sym);
  for (const auto& m : enumerate_packed(1, 3)) {
    auto t = m.transpose();
    CHECK(t.transpose() == m);
    CHECK(t.size() == m.size());
    CHECK(t.weight() == m.weight());
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(t.at(c, r) == m.at(r, c));
  }
}

TEST_CASE("column order") {
  // The displayed comparisons of equal-height columns.
  CHECK(column_less({1, 0, 0}, {0, 0, 1}));
  CHECK(column_less({2, 1, 0}, {1, 2, 0}));
  CHECK_FALSE(column_less({1, 0}, {1, 0}));
  CHECK(column_compare({1, 0}, {1, 0}) == 0);
  CHECK_THROWS_AS(column_compare({1}, {1, 0}), std::invalid_argument);

  // Word view of a matrix round-trips.
  for (const auto& m : enumerate_packed(1, 2)) {
    auto w = to_column_word(m);
    CHECK(w.height == 2);
    CHECK(w.length() == 2);
    auto g = word_to_grid(w, 1);
    CHECK(as_packed(g).has_value());
    CHECK(*as_packed(g) == m);
    CHECK(compress(w) == w);
  }
}

TEST_CASE("matrix text format") {
  CHECK(format_matrix(PackedMatrix::empty(1)) == "empty");
  CHECK(parse_matrix("empty", 1).is_empty());
  auto m = parse_matrix("1 1\n0 1", 1);
  CHECK(format_matrix(m) == "1 1\n0 1");
  for (const auto& x : enumerate_packed(2, 2)) CHECK(parse_matrix(format_matrix(x), 2) == x);
  CHECK_THROWS_AS(parse_matrix("1 0\n1", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("0 0\n1 1", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("boom", 1), std::invalid_argument);
}

TEST_CASE("large exact counts") {
  // Values far beyond 64-bit range must come out exactly.
  CHECK(count_packed_by_size(2, 6).str() == "147662286695991296");
  CHECK(count_packed_by_size(1, 6) == BigInt("57366997447"));
}
