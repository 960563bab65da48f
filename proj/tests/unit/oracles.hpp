// Independent reference implementations used only to check the library.
// These deliberately avoid the code paths they validate.

#ifndef PMH_TEST_ORACLES_HPP
#define PMH_TEST_ORACLES_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "column_word.hpp"
#include "matrix.hpp"

namespace pmh::oracle {

// Recursive column-shuffle enumeration: interleaves two padded column lists
// head-first instead of choosing position subsets.
inline void shuffle_words(const std::vector<std::vector<std::uint8_t>>& a,
                          const std::vector<std::vector<std::uint8_t>>& b, std::size_t ia,
                          std::size_t ib, std::vector<std::vector<std::uint8_t>>& acc,
                          std::vector<std::vector<std::vector<std::uint8_t>>>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.push_back(acc);
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    shuffle_words(a, b, ia + 1, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    shuffle_words(a, b, ia, ib + 1, acc, out);
    acc.pop_back();
  }
}

inline std::vector<PackedMatrix> column_shuffle(const PackedMatrix& m1, const PackedMatrix& m2) {
  int n1 = m1.size(), n2 = m2.size(), n = n1 + n2;
  std::vector<std::vector<std::uint8_t>> a, b;
  for (int c = 0; c < n1; ++c) {
    std::vector<std::uint8_t> col(n, 0);
    for (int r = 0; r < n1; ++r) col[r] = m1.at(r, c);
    a.push_back(std::move(col));
  }
  for (int c = 0; c < n2; ++c) {
    std::vector<std::uint8_t> col(n, 0);
    for (int r = 0; r < n2; ++r) col[n1 + r] = m2.at(r, c);
    b.push_back(std::move(col));
  }
  std::vector<std::vector<std::vector<std::uint8_t>>> words;
  std::vector<std::vector<std::uint8_t>> acc;
  shuffle_words(a, b, 0, 0, acc, words);
  std::vector<PackedMatrix> out;
  for (const auto& w : words) {
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) cells[static_cast<std::size_t>(r) * n + c] = w[c][r];
    out.emplace_back(m1.alphabet(), n, std::move(cells));
  }
  return out;
}

// ---------------------------------------------------------------------
// Right weak order on permutations via inversion sets.

using Perm = std::vector<int>;  // one-line, values 1..n

inline std::set<std::pair<int, int>> inversions(const Perm& p) {
  std::set<std::pair<int, int>> inv;
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) inv.insert({p[j], p[i]});  // value pair, smaller first
  return inv;
}

// Covers in the right weak order: swap an ascent of adjacent positions.
inline std::vector<Perm> weak_order_covers(const Perm& p) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) {
      Perm q = p;
      std::swap(q[i], q[i + 1]);
      out.push_back(std::move(q));
    }
  return out;
}

inline bool weak_order_leq(const Perm& a, const Perm& b) {
  auto ia = inversions(a), ib = inversions(b);
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

inline PackedMatrix permutation_matrix(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(p[j] - 1) * n + j] = 1;
  return PackedMatrix(1, n, std::move(cells));
}

// ---------------------------------------------------------------------
// Rewriting-closure partitions for the sylvester and plactic relations on
// column words (letters compared in the bottom-to-top order).

enum class Relation { Sylvester, Plactic };

inline std::vector<ColumnWord> rewrite_neighbors(const ColumnWord& w, Relation rel) {
  std::vector<ColumnWord> out;
  auto leq = [](const Column& x, const Column& y) { return column_compare(x, y) <= 0; };
  auto lt = [](const Column& x, const Column& y) { return column_compare(x, y) < 0; };
  std::size_t m = w.length();
  if (rel == Relation::Sylvester) {
    // ac u b <-> ca u b with a <= b < c, swap at any prefix position.
    for (std::size_t i = 0; i + 1 < m; ++i)
      for (std::size_t jb = i + 2; jb < m; ++jb) {
        const Column& x = w.letters[i];
        const Column& y = w.letters[i + 1];
        const Column& b = w.letters[jb];
        bool fwd = leq(x, b) && lt(b, y);  // pattern a c ... b
        bool bwd = leq(y, b) && lt(b, x);  // pattern c a ... b
        if (fwd || bwd) {
          ColumnWord v = w;
          std::swap(v.letters[i], v.letters[i + 1]);
          out.push_back(std::move(v));
        }
      }
  } else {
    // Knuth: x z y <-> z x y (x <= y < z) and y x z <-> y z x (x < y <= z).
    for (std::size_t i = 0; i + 2 < m; ++i) {
      const Column& p = w.letters[i];
      const Column& q = w.letters[i + 1];
      const Column& r = w.letters[i + 2];
      // first relation, both directions: swap positions i, i+1
      if ((leq(p, r) && lt(r, q)) || (leq(q, r) && lt(r, p))) {
        ColumnWord v = w;
        std::swap(v.letters[i], v.letters[i + 1]);
        out.push_back(std::move(v));
      }
      // second relation, both directions: swap positions i+1, i+2
      if ((lt(q, p) && leq(p, r)) || (lt(r, p) && leq(p, q))) {
        ColumnWord v = w;
        std::swap(v.letters[i + 1], v.letters[i + 2]);
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

inline std::string word_token(const ColumnWord& w) {
  std::string s;
  for (const auto& c : w.letters) {
    for (auto v : c) s += static_cast<char>('0' + v);
    s += '|';
  }
  return s;
}

// Partition of the given words into rewriting-closure classes.
inline std::map<std::string, int> closure_classes(const std::vector<ColumnWord>& words,
                                                  Relation rel) {
  std::map<std::string, int> cls;
  int next = 0;
  for (const auto& w : words) {
    std::string token = word_token(w);
    if (cls.count(token)) continue;
    int id = next++;
    std::deque<ColumnWord> queue{w};
    cls[token] = id;
    while (!queue.empty()) {
      ColumnWord cur = std::move(queue.front());
      queue.pop_front();
      for (auto& nb : rewrite_neighbors(cur, rel)) {
        std::string t = word_token(nb);
        if (!cls.count(t)) {
          cls[t] = id;
          queue.push_back(std::move(nb));
        }
      }
    }
  }
  return cls;
}

}  // namespace pmh::oracle

#endif
