#include "matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pmh {

bool Grid::row_is_null(int r) const {
  for (int c = 0; c < cols; ++c)
    if (at(r, c) != 0) return false;
  return true;
}

bool Grid::col_is_null(int c) const {
  for (int r = 0; r < rows; ++r)
    if (at(r, c) != 0) return false;
  return true;
}

bool operator==(const Grid& a, const Grid& b) {
  return a.rows == b.rows && a.cols == b.cols && a.cells == b.cells;
}

PackedMatrix::PackedMatrix(int alphabet, int size, std::vector<std::uint8_t> cells)
    : alphabet_(alphabet), size_(size), weight_(0), cells_(std::move(cells)) {
  if (alphabet_ < 1) throw std::invalid_argument("alphabet bound must be >= 1");
  if (size_ < 0) throw std::invalid_argument("negative size");
  if (cells_.size() != static_cast<std::size_t>(size_) * size_)
    throw std::invalid_argument("cell count does not match size");
  for (auto v : cells_) {
    if (v > alphabet_) throw std::invalid_argument("entry exceeds alphabet bound");
    if (v != 0) ++weight_;
  }
  for (int r = 0; r < size_; ++r) {
    bool row_ok = false, col_ok = false;
    for (int i = 0; i < size_; ++i) {
      row_ok |= at(r, i) != 0;
      col_ok |= at(i, r) != 0;
    }
    if (!row_ok) throw std::invalid_argument("null row in packed matrix");
    if (!col_ok) throw std::invalid_argument("null column in packed matrix");
  }
}

PackedMatrix PackedMatrix::empty(int alphabet) { return PackedMatrix(alphabet, 0, {}); }

Grid PackedMatrix::to_grid() const { return Grid{size_, size_, alphabet_, cells_}; }

PackedMatrix PackedMatrix::transpose() const {
  std::vector<std::uint8_t> t(cells_.size());
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) t[static_cast<std::size_t>(c) * size_ + r] = at(r, c);
  return PackedMatrix(alphabet_, size_, std::move(t));
}

namespace {

// m = A over B with A of size j: both off-diagonal blocks null.
bool over_cut_at(const PackedMatrix& m, int j) {
  int n = m.size();
  for (int r = 0; r < j; ++r)
    for (int c = j; c < n; ++c)
      if (m.at(r, c) != 0) return false;
  for (int r = j; r < n; ++r)
    for (int c = 0; c < j; ++c)
      if (m.at(r, c) != 0) return false;
  return true;
}

// m = A under B with B occupying the first c columns (bottom-left block).
bool under_cut_at(const PackedMatrix& m, int c) {
  int n = m.size();
  int top = n - c;  // rows occupied by the top-right block
  for (int r = 0; r < top; ++r)
    for (int j = 0; j < c; ++j)
      if (m.at(r, j) != 0) return false;
  for (int r = top; r < n; ++r)
    for (int j = c; j < n; ++j)
      if (m.at(r, j) != 0) return false;
  return true;
}

}  // namespace

bool PackedMatrix::is_connected() const {
  if (size_ == 0) throw std::invalid_argument("connectivity is undefined for the empty matrix");
  for (int j = 1; j < size_; ++j)
    if (over_cut_at(*this, j)) return false;
  return true;
}

bool PackedMatrix::is_anti_connected() const {
  if (size_ == 0) throw std::invalid_argument("connectivity is undefined for the empty matrix");
  for (int c = 1; c < size_; ++c)
    if (under_cut_at(*this, c)) return false;
  return true;
}

bool operator==(const PackedMatrix& a, const PackedMatrix& b) {
  return a.size() == b.size() && a.cells() == b.cells();
}

bool canonical_less(const PackedMatrix& a, const PackedMatrix& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a.cells() < b.cells();
}

std::size_t MatrixHash::operator()(const PackedMatrix& m) const {
  std::size_t h = static_cast<std::size_t>(m.size()) * 1000003u;
  for (auto v : m.cells()) h = h * 131 + v + 7;
  return h;
}

bool is_packed(const Grid& g) {
  if (g.rows != g.cols) return false;
  for (auto v : g.cells)
    if (v > g.alphabet) return false;
  for (int r = 0; r < g.rows; ++r)
    if (g.row_is_null(r)) return false;
  for (int c = 0; c < g.cols; ++c)
    if (g.col_is_null(c)) return false;
  return true;
}

Grid compress(const Grid& g) {
  std::vector<int> keep_rows, keep_cols;
  for (int r = 0; r < g.rows; ++r)
    if (!g.row_is_null(r)) keep_rows.push_back(r);
  for (int c = 0; c < g.cols; ++c)
    if (!g.col_is_null(c)) keep_cols.push_back(c);
  Grid out;
  out.rows = static_cast<int>(keep_rows.size());
  out.cols = static_cast<int>(keep_cols.size());
  out.alphabet = g.alphabet;
  out.cells.reserve(static_cast<std::size_t>(out.rows) * out.cols);
  for (int r : keep_rows)
    for (int c : keep_cols) out.cells.push_back(g.at(r, c));
  return out;
}

std::optional<PackedMatrix> as_packed(const Grid& g) {
  if (!is_packed(g)) return std::nullopt;
  return PackedMatrix(g.alphabet, g.rows, g.cells);
}

PackedMatrix over(const PackedMatrix& m1, const PackedMatrix& m2) {
  if (m1.alphabet() != m2.alphabet())
    throw std::invalid_argument("alphabet mismatch in over");
  int n1 = m1.size(), n2 = m2.size(), n = n1 + n2;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n1; ++r)
    for (int c = 0; c < n1; ++c) cells[static_cast<std::size_t>(r) * n + c] = m1.at(r, c);
  for (int r = 0; r < n2; ++r)
    for (int c = 0; c < n2; ++c)
      cells[static_cast<std::size_t>(n1 + r) * n + n1 + c] = m2.at(r, c);
  return PackedMatrix(m1.alphabet(), n, std::move(cells));
}

PackedMatrix under(const PackedMatrix& m1, const PackedMatrix& m2) {
  if (m1.alphabet() != m2.alphabet())
    throw std::invalid_argument("alphabet mismatch in under");
  int n1 = m1.size(), n2 = m2.size(), n = n1 + n2;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n1; ++r)
    for (int c = 0; c < n1; ++c)
      cells[static_cast<std::size_t>(r) * n + n2 + c] = m1.at(r, c);
  for (int r = 0; r < n2; ++r)
    for (int c = 0; c < n2; ++c)
      cells[static_cast<std::size_t>(n1 + r) * n + c] = m2.at(r, c);
  return PackedMatrix(m1.alphabet(), n, std::move(cells));
}

Grid column_slice(const PackedMatrix& m, int from, int to) {
  Grid g;
  g.rows = m.size();
  g.cols = to - from;
  g.alphabet = m.alphabet();
  g.cells.reserve(static_cast<std::size_t>(g.rows) * g.cols);
  for (int r = 0; r < g.rows; ++r)
    for (int c = from; c < to; ++c) g.cells.push_back(m.at(r, c));
  return g;
}

Grid row_slice(const PackedMatrix& m, int from, int to) {
  Grid g;
  g.rows = to - from;
  g.cols = m.size();
  g.alphabet = m.alphabet();
  g.cells.reserve(static_cast<std::size_t>(g.rows) * g.cols);
  for (int r = from; r < to; ++r)
    for (int c = 0; c < g.cols; ++c) g.cells.push_back(m.at(r, c));
  return g;
}

bool column_cut_valid(const PackedMatrix& m, int j) {
  // Left slice compresses to a square iff its nonzero rows number j; the
  // right slice is then forced square as well since every row of m is
  // nonzero on exactly one side or both -- require both counts to match.
  int n = m.size();
  int left_rows = 0, right_rows = 0;
  for (int r = 0; r < n; ++r) {
    bool l = false, rr = false;
    for (int c = 0; c < j; ++c) l |= m.at(r, c) != 0;
    for (int c = j; c < n; ++c) rr |= m.at(r, c) != 0;
    left_rows += l;
    right_rows += rr;
  }
  return left_rows == j && right_rows == n - j;
}

bool row_cut_valid(const PackedMatrix& m, int j) {
  int n = m.size();
  int top_cols = 0, bottom_cols = 0;
  for (int c = 0; c < n; ++c) {
    bool t = false, b = false;
    for (int r = 0; r < j; ++r) t |= m.at(r, c) != 0;
    for (int r = j; r < n; ++r) b |= m.at(r, c) != 0;
    top_cols += t;
    bottom_cols += b;
  }
  return top_cols == j && bottom_cols == n - j;
}

std::vector<std::pair<Grid, Grid>> column_splits(const PackedMatrix& m) {
  std::vector<std::pair<Grid, Grid>> out;
  int n = m.size();
  for (int j = 0; j <= n; ++j)
    if (column_cut_valid(m, j))
      out.emplace_back(column_slice(m, 0, j), column_slice(m, j, n));
  return out;
}

std::vector<std::pair<Grid, Grid>> row_splits(const PackedMatrix& m) {
  std::vector<std::pair<Grid, Grid>> out;
  int n = m.size();
  for (int j = 0; j <= n; ++j)
    if (row_cut_valid(m, j))
      out.emplace_back(row_slice(m, 0, j), row_slice(m, j, n));
  return out;
}

BigInt count_packed(int k, int n, int l) {
  if (k < 1 || n < 0 || l < 0) throw std::invalid_argument("count_packed domain");
  BigInt total = 0;
  BigInt kl = int_pow(k, l);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      BigInt term = binomial(n, i) * binomial(n, j) * binomial(static_cast<long>(i) * j, l);
      if ((i + j) % 2 != 0) term = -term;
      total += term;
    }
  return total * kl;
}

BigInt count_packed_by_size(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("count_packed_by_size domain");
  BigInt total = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      BigInt term =
          binomial(n, i) * binomial(n, j) * int_pow(k + 1, static_cast<long>(i) * j);
      if ((i + j) % 2 != 0) term = -term;
      total += term;
    }
  return total;
}

BigInt count_packed_by_weight(int k, int l) {
  if (k < 1 || l < 0) throw std::invalid_argument("count_packed_by_weight domain");
  BigInt total = 0;
  int n_min = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(l))));
  while (n_min > 0 && static_cast<long>(n_min - 1) * (n_min - 1) >= l) --n_min;
  while (static_cast<long>(n_min) * n_min < l) ++n_min;
  for (int n = n_min; n <= l; ++n) total += count_packed(k, n, l);
  return total;
}

// --------------------------------------------------------------------------
// Enumeration: depth-first over rows in ascending lexicographic order, which
// yields exactly the documented row-major order.  A branch is pruned when
// the weight budget cannot be met or when uncovered columns exceed what the
// remaining rows can still reach.

PackedEnumerator PackedEnumerator::by_size(int k, int n) {
  PackedEnumerator e;
  e.k_ = k;
  e.size_ = n;
  e.max_size_ = n;
  e.by_weight_mode_ = false;
  return e;
}

PackedEnumerator PackedEnumerator::by_weight(int k, int l) {
  PackedEnumerator e;
  e.k_ = k;
  e.target_weight_ = l;
  e.by_weight_mode_ = true;
  int n_min = 0;
  while (static_cast<long>(n_min) * n_min < l) ++n_min;
  if (l == 0) n_min = 0;
  e.size_ = n_min;
  e.max_size_ = l == 0 ? 0 : l;
  return e;
}

void PackedEnumerator::dfs(std::vector<std::uint8_t>& stack_rows, int row, int used_weight,
                           std::vector<int>& col_cover) {
  int n = size_;
  if (row == n) {
    if (target_weight_ >= 0 && used_weight != target_weight_) return;
    for (int c = 0; c < n; ++c)
      if (col_cover[c] == 0) return;
    pending_.emplace_back(k_, n, stack_rows);
    return;
  }
  int remaining_rows = n - row;
  if (target_weight_ >= 0) {
    int rem = target_weight_ - used_weight;
    if (rem < remaining_rows || rem > remaining_rows * n) return;
  }
  // Iterate the row vector in ascending lex order.
  std::vector<std::uint8_t> rowv(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int row_weight) {
    if (pos == n) {
      if (row_weight == 0) return;  // null row
      for (int c = 0; c < n; ++c) {
        stack_rows[static_cast<std::size_t>(row) * n + c] = rowv[c];
        col_cover[c] += rowv[c] != 0;
      }
      dfs(stack_rows, row + 1, used_weight + row_weight, col_cover);
      for (int c = 0; c < n; ++c) col_cover[c] -= rowv[c] != 0;
      return;
    }
    for (std::uint8_t v = 0; v <= k_; ++v) {
      rowv[pos] = v;
      rec(pos + 1, row_weight + (v != 0));
    }
    rowv[pos] = 0;
  };
  rec(0, 0);
}

void PackedEnumerator::fill_pending() {
  pending_.clear();
  pending_pos_ = 0;
  while (pending_.empty()) {
    if (size_ > max_size_) {
      done_ = true;
      return;
    }
    if (size_ == 0) {
      if (target_weight_ <= 0) pending_.push_back(PackedMatrix::empty(k_));
      ++size_;
      if (!by_weight_mode_) max_size_ = size_ - 1;  // single size: stop after
      if (!pending_.empty()) return;
      continue;
    }
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(size_) * size_, 0);
    std::vector<int> cover(size_, 0);
    dfs(cells, 0, 0, cover);
    ++size_;
    if (!by_weight_mode_) max_size_ = size_ - 1;
  }
}

std::optional<PackedMatrix> PackedEnumerator::next() {
  if (fresh_) {
    fresh_ = false;
    fill_pending();
  }
  while (!done_) {
    if (pending_pos_ < pending_.size()) return pending_[pending_pos_++];
    fill_pending();
  }
  return std::nullopt;
}

std::vector<PackedMatrix> enumerate_packed(int k, int n) {
  auto e = PackedEnumerator::by_size(k, n);
  std::vector<PackedMatrix> out;
  while (auto m = e.next()) out.push_back(*m);
  return out;
}

std::vector<PackedMatrix> enumerate_packed_by_weight(int k, int l) {
  auto e = PackedEnumerator::by_weight(k, l);
  std::vector<PackedMatrix> out;
  while (auto m = e.next()) out.push_back(*m);
  return out;
}

std::string format_grid(const Grid& g) {
  if (g.rows == 0 || g.cols == 0) return "empty";
  std::string out;
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      if (c) out += ' ';
      out += static_cast<char>('0' + g.at(r, c));
    }
    if (r + 1 < g.rows) out += '\n';
  }
  return out;
}

std::string format_matrix(const PackedMatrix& m) { return format_grid(m.to_grid()); }

PackedMatrix parse_matrix(const std::string& text, int alphabet) {
  std::string trimmed = text;
  while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == ' '))
    trimmed.pop_back();
  if (trimmed == "empty") return PackedMatrix::empty(alphabet);
  std::vector<std::vector<std::uint8_t>> rows;
  std::istringstream in(trimmed);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) throw std::invalid_argument("blank line inside matrix");
    std::vector<std::uint8_t> row;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok.size() != 1 || tok[0] < '0' || tok[0] > '9')
        throw std::invalid_argument("matrix entries must be single digits");
      row.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix text");
  std::size_t n = rows.size();
  std::vector<std::uint8_t> cells;
  for (auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("matrix is not square");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return PackedMatrix(alphabet, static_cast<int>(n), std::move(cells));
}

}  // namespace pmh
