#ifndef PMH_COLUMN_WORD_HPP
#define PMH_COLUMN_WORD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace pmh {

/// A letter of the column alphabet: one column, entries listed top to bottom.
using Column = std::vector<std::uint8_t>;

/// Word over the column alphabet.  All letters share one height; a packed
/// matrix of size n is exactly a height-n word of length n whose compression
/// is itself.
struct ColumnWord {
  int height = 0;
  std::vector<Column> letters;

  std::size_t length() const { return letters.size(); }
};

/// Total order on columns: compare the bottom-to-top readings
/// lexicographically.  Heights must agree.
/// Returns <0, 0, >0.  Throws std::invalid_argument on height mismatch.
int column_compare(const Column& a, const Column& b);
bool column_less(const Column& a, const Column& b);

bool operator==(const ColumnWord& a, const ColumnWord& b);

ColumnWord to_column_word(const PackedMatrix& m);

/// Reassembles a word into a grid (letters become columns).
Grid word_to_grid(const ColumnWord& w, int alphabet);

/// Compression of a word: drop all-zero letters, then drop the rows that are
/// zero in every remaining letter.  Idempotent; fixes packed-matrix words.
ColumnWord compress(const ColumnWord& w);

/// Commutative image: the multiset of letters, canonically sorted.
std::vector<Column> evaluation(const ColumnWord& w);

/// Restriction to an alphabet interval [lo, hi]: keep exactly the letters c
/// with lo <= c <= hi in the column order.
ColumnWord restrict_to_interval(const ColumnWord& w, const Column& lo, const Column& hi);

/// Stable standardization: letters ranked by the column order, ties broken
/// left to right; returns a permutation of 1..length as one-line values.
std::vector<int> standardize(const ColumnWord& w);

}  // namespace pmh

#endif
