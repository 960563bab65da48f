#ifndef PMH_MATRIX_HPP
#define PMH_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace pmh {

/// Rectangular matrix with entries in {0,...,alphabet}, possibly with null
/// rows or columns.  Used as the factor type of column/row splits before
/// compression; the square no-null-line case is promoted to PackedMatrix.
struct Grid {
  int rows = 0;
  int cols = 0;
  int alphabet = 1;
  std::vector<std::uint8_t> cells;  // row-major, rows*cols entries

  std::uint8_t at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
  bool row_is_null(int r) const;
  bool col_is_null(int c) const;
};

bool operator==(const Grid& a, const Grid& b);

/// Square matrix over {0,...,alphabet} in which every row and every column
/// holds at least one nonzero entry.  The unique 0x0 matrix is allowed and
/// acts as the unit for the over/under operators.
///
/// Values are immutable after construction and safe to share across threads.
class PackedMatrix {
 public:
  /// Validates squareness, entry bounds and the no-null-line condition;
  /// throws std::invalid_argument on violation.
  PackedMatrix(int alphabet, int size, std::vector<std::uint8_t> cells);

  static PackedMatrix empty(int alphabet = 1);

  int alphabet() const { return alphabet_; }
  int size() const { return size_; }
  /// Number of nonzero entries.
  int weight() const { return weight_; }
  bool is_empty() const { return size_ == 0; }

  std::uint8_t at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * size_ + col];
  }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  Grid to_grid() const;
  PackedMatrix transpose() const;

  /// No nontrivial block-diagonal (over) factorization.  Defined only for
  /// nonempty matrices; the empty matrix is by convention neither connected
  /// nor anti-connected and both predicates throw on it.
  bool is_connected() const;
  /// No nontrivial block-antidiagonal (under) factorization.
  bool is_anti_connected() const;

 private:
  int alphabet_;
  int size_;
  int weight_;
  std::vector<std::uint8_t> cells_;
};

/// Identity of entries and size; the alphabet bound is a property of the
/// ambient space, not of the matrix, and is ignored here.
bool operator==(const PackedMatrix& a, const PackedMatrix& b);
inline bool operator!=(const PackedMatrix& a, const PackedMatrix& b) { return !(a == b); }

/// The one canonical order used everywhere a total order on basis keys is
/// needed: by size, then weight, then row-major entries lexicographically.
bool canonical_less(const PackedMatrix& a, const PackedMatrix& b);
inline bool operator<(const PackedMatrix& a, const PackedMatrix& b) { return canonical_less(a, b); }

struct MatrixHash {
  std::size_t operator()(const PackedMatrix& m) const;
};

// ---------------------------------------------------------------------------
// Structural predicates and block operators

bool is_packed(const Grid& g);

/// Deletes every all-zero row and all-zero column; idempotent.
Grid compress(const Grid& g);

/// Promotes a grid to a PackedMatrix when is_packed holds.
std::optional<PackedMatrix> as_packed(const Grid& g);

/// Block-diagonal concatenation: m1 top-left, m2 bottom-right.
PackedMatrix over(const PackedMatrix& m1, const PackedMatrix& m2);
/// Block-antidiagonal concatenation: m1 top-right, m2 bottom-left.
PackedMatrix under(const PackedMatrix& m1, const PackedMatrix& m2);

/// All vertical cuts (after column j, 0 <= j <= n) whose two compressed
/// factors are square; includes the two trivial cuts.  Returned factors are
/// the uncompressed slices.
std::vector<std::pair<Grid, Grid>> column_splits(const PackedMatrix& m);
/// Horizontal analogue.
std::vector<std::pair<Grid, Grid>> row_splits(const PackedMatrix& m);

/// Slice helpers used by the split and shuffle code paths.
Grid column_slice(const PackedMatrix& m, int from, int to);  // columns [from,to)
Grid row_slice(const PackedMatrix& m, int from, int to);     // rows [from,to)

/// True when the cut after column j yields two square compressed factors.
bool column_cut_valid(const PackedMatrix& m, int j);
bool row_cut_valid(const PackedMatrix& m, int j);

// ---------------------------------------------------------------------------
// Counting (exact sieve formulas, arbitrary precision)

/// Matrices of size n over {0..k} with exactly l nonzero entries and no null
/// line: sum over i,j of (-1)^(i+j) C(n,i) C(n,j) C(ij,l) k^l.
BigInt count_packed(int k, int n, int l);
BigInt count_packed_by_size(int k, int n);
BigInt count_packed_by_weight(int k, int l);

// ---------------------------------------------------------------------------
// Enumeration.  Deterministic order: lexicographic on the row-major entry
// string (and for the by-weight variant, by size first).  Single-consumer
// iterators; independent iterators may run concurrently.

class PackedEnumerator {
 public:
  /// All k-packed matrices of size n.
  static PackedEnumerator by_size(int k, int n);
  /// All k-packed matrices with exactly l nonzero entries (sizes
  /// ceil(sqrt(l))..l, ascending).
  static PackedEnumerator by_weight(int k, int l);

  std::optional<PackedMatrix> next();

 private:
  PackedEnumerator() = default;
  bool advance();

  int k_ = 1;
  int size_ = 0;
  int target_weight_ = -1;  // -1 means unconstrained
  int max_size_ = 0;        // by-weight mode iterates size_ up to this
  bool by_weight_mode_ = false;
  bool done_ = false;
  bool fresh_ = true;
  std::vector<std::vector<std::uint8_t>> rows_;  // current partial matrix
  std::vector<PackedMatrix> pending_;            // emitted in order
  std::size_t pending_pos_ = 0;

  void fill_pending();
  void dfs(std::vector<std::uint8_t>& stack_rows, int row, int used_weight,
           std::vector<int>& col_cover);
};

std::vector<PackedMatrix> enumerate_packed(int k, int n);
std::vector<PackedMatrix> enumerate_packed_by_weight(int k, int l);

// ---------------------------------------------------------------------------
// Text format (bit-exact, shared by CLI and golden tests): one line per row,
// single-digit entries separated by single spaces, the empty matrix as the
// literal "empty".  Streams separate matrices with one blank line.

std::string format_matrix(const PackedMatrix& m);
std::string format_grid(const Grid& g);

/// Parses the text format; the alphabet bound is the given k.
/// Throws std::invalid_argument on malformed input or invariant violation.
PackedMatrix parse_matrix(const std::string& text, int alphabet);

}  // namespace pmh

#endif
