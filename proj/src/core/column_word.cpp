#include "column_word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pmh {

int column_compare(const Column& a, const Column& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("column_compare: height mismatch");
  // Bottom-to-top reading.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool column_less(const Column& a, const Column& b) { return column_compare(a, b) < 0; }

bool operator==(const ColumnWord& a, const ColumnWord& b) {
  return a.height == b.height && a.letters == b.letters;
}

ColumnWord to_column_word(const PackedMatrix& m) {
  ColumnWord w;
  w.height = m.size();
  w.letters.reserve(m.size());
  for (int c = 0; c < m.size(); ++c) {
    Column col(m.size());
    for (int r = 0; r < m.size(); ++r) col[r] = m.at(r, c);
    w.letters.push_back(std::move(col));
  }
  return w;
}

Grid word_to_grid(const ColumnWord& w, int alphabet) {
  Grid g;
  g.rows = w.height;
  g.cols = static_cast<int>(w.length());
  g.alphabet = alphabet;
  g.cells.assign(static_cast<std::size_t>(g.rows) * g.cols, 0);
  for (int c = 0; c < g.cols; ++c)
    for (int r = 0; r < g.rows; ++r)
      g.cells[static_cast<std::size_t>(r) * g.cols + c] = w.letters[c][r];
  return g;
}

ColumnWord compress(const ColumnWord& w) {
  std::vector<const Column*> nonzero;
  for (const auto& c : w.letters)
    if (std::any_of(c.begin(), c.end(), [](std::uint8_t v) { return v != 0; }))
      nonzero.push_back(&c);
  std::vector<int> keep_rows;
  for (int r = 0; r < w.height; ++r) {
    bool live = false;
    for (auto* c : nonzero) live |= (*c)[r] != 0;
    if (live) keep_rows.push_back(r);
  }
  ColumnWord out;
  out.height = static_cast<int>(keep_rows.size());
  for (auto* c : nonzero) {
    Column reduced;
    reduced.reserve(keep_rows.size());
    for (int r : keep_rows) reduced.push_back((*c)[r]);
    out.letters.push_back(std::move(reduced));
  }
  return out;
}

std::vector<Column> evaluation(const ColumnWord& w) {
  std::vector<Column> ev = w.letters;
  std::sort(ev.begin(), ev.end(), column_less);
  return ev;
}

ColumnWord restrict_to_interval(const ColumnWord& w, const Column& lo, const Column& hi) {
  ColumnWord out;
  out.height = w.height;
  for (const auto& c : w.letters)
    if (column_compare(lo, c) <= 0 && column_compare(c, hi) <= 0) out.letters.push_back(c);
  return out;
}

std::vector<int> standardize(const ColumnWord& w) {
  std::size_t m = w.length();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return column_less(w.letters[i], w.letters[j]);
  });
  std::vector<int> values(m);
  for (std::size_t rank = 0; rank < m; ++rank) values[idx[rank]] = static_cast<int>(rank) + 1;
  return values;
}

}  // namespace pmh
