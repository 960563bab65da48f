#include "order.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hopf.hpp"

namespace pmh {

namespace {

int trailing_zeros_in_column(const PackedMatrix& m, int col) {
  int n = m.size(), z = 0;
  for (int r = n - 1; r >= 0 && m.at(r, col) == 0; --r) ++z;
  return z;
}

int leading_zeros_in_column(const PackedMatrix& m, int col) {
  int n = m.size(), z = 0;
  for (int r = 0; r < n && m.at(r, col) == 0; ++r) ++z;
  return z;
}

PackedMatrix swap_columns(const PackedMatrix& m, int i) {
  std::vector<std::uint8_t> cells = m.cells();
  int n = m.size();
  for (int r = 0; r < n; ++r)
    std::swap(cells[static_cast<std::size_t>(r) * n + i],
              cells[static_cast<std::size_t>(r) * n + i + 1]);
  return PackedMatrix(m.alphabet(), n, std::move(cells));
}

}  // namespace

std::vector<PackedMatrix> covers(const PackedMatrix& m) {
  std::vector<PackedMatrix> out;
  int n = m.size();
  for (int i = 0; i + 1 < n; ++i) {
    int s = trailing_zeros_in_column(m, i);
    int p = leading_zeros_in_column(m, i + 1);
    if (s + p >= n) out.push_back(swap_columns(m, i));
  }
  return out;
}

std::vector<PackedMatrix> covers_inverse(const PackedMatrix& m) {
  std::vector<PackedMatrix> out;
  int n = m.size();
  for (int i = 0; i + 1 < n; ++i) {
    PackedMatrix candidate = swap_columns(m, i);
    int s = trailing_zeros_in_column(candidate, i);
    int p = leading_zeros_in_column(candidate, i + 1);
    if (s + p >= n) out.push_back(std::move(candidate));
  }
  return out;
}

namespace {

template <typename Succ>
MatrixSet closure(const PackedMatrix& start, Succ&& successors) {
  MatrixSet seen{start};
  std::deque<PackedMatrix> queue{start};
  while (!queue.empty()) {
    PackedMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : successors(cur))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

}  // namespace

MatrixSet upward_closure(const PackedMatrix& m) {
  return closure(m, [](const PackedMatrix& x) { return covers(x); });
}

MatrixSet downward_closure(const PackedMatrix& m) {
  return closure(m, [](const PackedMatrix& x) { return covers_inverse(x); });
}

bool leq_M(const PackedMatrix& lo, const PackedMatrix& hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("size mismatch in order comparison");
  if (lo == hi) return true;
  if (lo.weight() != hi.weight()) return false;
  return upward_closure(lo).count(hi) > 0;
}

MatrixSet interval(const PackedMatrix& lo, const PackedMatrix& hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("size mismatch in interval");
  MatrixSet up = upward_closure(lo);
  if (up.count(hi) == 0) return {};
  MatrixSet down = downward_closure(hi);
  MatrixSet out;
  for (const auto& m : up)
    if (down.count(m)) out.insert(m);
  return out;
}

Element E_expand(const PackedMatrix& m) {
  Element e(Basis::F);
  for (const auto& x : upward_closure(m)) e.add_term(x, 1);
  return e;
}

Element H_expand(const PackedMatrix& m) {
  Element e(Basis::F);
  for (const auto& x : downward_closure(m)) e.add_term(x, 1);
  return e;
}

PackedMatrix product_E(const PackedMatrix& m1, const PackedMatrix& m2) {
  return over(m1, m2);
}

PackedMatrix product_H(const PackedMatrix& m1, const PackedMatrix& m2) {
  return under(m1, m2);
}

std::vector<PackedMatrix> connected_factors(const PackedMatrix& m) {
  std::vector<PackedMatrix> out;
  int n = m.size();
  int start = 0;
  for (int j = 1; j <= n; ++j) {
    if (j < n) {
      // Split after j only when both off-diagonal blocks of the remaining
      // bottom-right square are clear for the prefix boundary.
      bool cut = true;
      for (int r = 0; r < j && cut; ++r)
        for (int c = j; c < n; ++c)
          if (m.at(r, c) != 0) {
            cut = false;
            break;
          }
      for (int r = j; r < n && cut; ++r)
        for (int c = 0; c < j; ++c)
          if (m.at(r, c) != 0) {
            cut = false;
            break;
          }
      if (!cut) continue;
    }
    // Block [start, j) is a factor.
    int size = j - start;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(size) * size);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) cells[static_cast<std::size_t>(r) * size + c] =
          m.at(start + r, start + c);
    out.emplace_back(m.alphabet(), size, std::move(cells));
    start = j;
  }
  return out;
}

Element W_expand(const PackedMatrix& m) {
  if (m.is_empty()) return unit_element(Basis::FDual, m);
  auto factors = connected_factors(m);
  Element acc = unit_element(Basis::FDual, factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = dual_product_F(acc, unit_element(Basis::FDual, factors[i]));
  return acc;
}

namespace {
bool transpose_canonical_less(const PackedMatrix& a, const PackedMatrix& b) {
  return canonical_less(a.transpose(), b.transpose());
}
}  // namespace

std::vector<std::vector<Rational>> V_basis(std::vector<PackedMatrix> component,
                                           std::vector<PackedMatrix>* ordered_out) {
  // W is unitriangular when keys are ordered by ascending transpose: the
  // expansion of W of m is supported on m and keys with larger transposes,
  // and larger in the matrix order means smaller row-major entries.
  std::sort(component.begin(), component.end(), transpose_canonical_less);
  std::size_t n = component.size();
  std::map<PackedMatrix, std::size_t, detail::CanonicalKeyLess> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(component[i], i);

  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [key, coeff] : W_expand(component[i]).terms()) {
      auto it = index.find(key);
      if (it == index.end())
        throw std::invalid_argument("W expansion leaves the stratum");
      if (it->second > i) throw std::invalid_argument("W expansion is not triangular");
      w[i][it->second] = coeff;
    }
    if (w[i][i] != 1) throw std::invalid_argument("W expansion is not unitriangular");
  }

  // V pairs to delta against W, so V = (W^-1)^T.  Invert the lower
  // unitriangular W by forward substitution, then transpose.
  std::vector<std::vector<Rational>> u(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    u[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = 0;
      for (std::size_t l = j; l < i; ++l) s += w[i][l] * u[l][j];
      u[i][j] = -s;
    }
  }
  std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i][j] = u[j][i];
  if (ordered_out) *ordered_out = std::move(component);
  return v;
}

Element V_expand(const PackedMatrix& m) {
  auto all = enumerate_packed(m.alphabet(), m.size());
  std::vector<PackedMatrix> stratum;
  for (auto& x : all)
    if (x.weight() == m.weight()) stratum.push_back(x);
  std::vector<PackedMatrix> ordered;
  auto v = V_basis(stratum, &ordered);
  std::size_t row = 0;
  while (row < ordered.size() && !(ordered[row] == m)) ++row;
  if (row == ordered.size()) throw std::invalid_argument("key not in its stratum");
  Element out(Basis::F);
  for (std::size_t j = 0; j < ordered.size(); ++j) out.add_term(ordered[j], v[row][j]);
  return out;
}

}  // namespace pmh
