#include "asm_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace pmh {

namespace {

// Every line must have nonzero prefix sums in {0,1} and total 1; this is
// exactly the alternating +,-,...,+ condition.
bool line_ok(const std::vector<std::int8_t>& vals) {
  int sum = 0;
  for (int v : vals) {
    sum += v;
    if (sum < 0 || sum > 1) return false;
  }
  return sum == 1;
}

}  // namespace

Asm::Asm(int size, std::vector<std::int8_t> cells) : size_(size), cells_(std::move(cells)) {
  if (size_ < 0) throw std::invalid_argument("negative size");
  if (cells_.size() != static_cast<std::size_t>(size_) * size_)
    throw std::invalid_argument("cell count does not match size");
  for (auto v : cells_)
    if (v < -1 || v > 1) throw std::invalid_argument("entries must be in {-1,0,1}");
  for (int r = 0; r < size_; ++r) {
    std::vector<std::int8_t> row(size_), col(size_);
    for (int i = 0; i < size_; ++i) {
      row[i] = at(r, i);
      col[i] = at(i, r);
    }
    if (!line_ok(row)) throw std::invalid_argument("row is not alternating");
    if (!line_ok(col)) throw std::invalid_argument("column is not alternating");
  }
}

PackedMatrix Asm::support() const {
  std::vector<std::uint8_t> cells(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) cells[i] = cells_[i] != 0;
  return PackedMatrix(1, size_, std::move(cells));
}

Asm Asm::transpose() const {
  std::vector<std::int8_t> t(cells_.size());
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) t[static_cast<std::size_t>(c) * size_ + r] = at(r, c);
  return Asm(size_, std::move(t));
}

Asm Asm::reverse_rows() const {
  std::vector<std::int8_t> t(cells_.size());
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c)
      t[static_cast<std::size_t>(size_ - 1 - r) * size_ + c] = at(r, c);
  return Asm(size_, std::move(t));
}

Asm Asm::reverse_columns() const {
  std::vector<std::int8_t> t(cells_.size());
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c)
      t[static_cast<std::size_t>(r) * size_ + size_ - 1 - c] = at(r, c);
  return Asm(size_, std::move(t));
}

bool operator==(const Asm& a, const Asm& b) {
  return a.size() == b.size() && a.cells() == b.cells();
}

std::string format_asm(const Asm& a) {
  if (a.size() == 0) return "empty";
  std::string out;
  for (int r = 0; r < a.size(); ++r) {
    for (int c = 0; c < a.size(); ++c) {
      if (c) out += ' ';
      out += a.at(r, c) == 0 ? '0' : (a.at(r, c) > 0 ? '+' : '-');
    }
    if (r + 1 < a.size()) out += '\n';
  }
  return out;
}

std::optional<Asm> asm_from_packed(const PackedMatrix& m) {
  int n = m.size();
  std::vector<std::int8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    std::int8_t sign = 1;
    for (int c = 0; c < n; ++c) {
      if (m.at(r, c) != 0) {
        cells[static_cast<std::size_t>(r) * n + c] = sign;
        sign = -sign;
      }
    }
  }
  try {
    return Asm(n, std::move(cells));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool is_asm_support(const PackedMatrix& m) { return asm_from_packed(m).has_value(); }

std::vector<Asm> enumerate_asm(int n) {
  std::vector<Asm> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<std::int8_t>{});
    return out;
  }
  std::vector<std::int8_t> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> col_sum(n, 0);

  // Row by row; within a row cell by cell, values tried in -1 < 0 < +1
  // order, keeping row and column prefix sums in {0,1}.
  std::function<void(int, int, int)> place = [&](int row, int col, int row_sum) {
    if (col == n) {
      if (row_sum != 1) return;
      if (row + 1 == n) {
        bool complete = std::all_of(col_sum.begin(), col_sum.end(), [](int s) { return s == 1; });
        if (complete) out.emplace_back(n, cells);
      } else {
        place(row + 1, 0, 0);
      }
      return;
    }
    for (std::int8_t v = -1; v <= 1; ++v) {
      int rs = row_sum + v;
      int cs = col_sum[col] + v;
      if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
      cells[static_cast<std::size_t>(row) * n + col] = v;
      col_sum[col] = cs;
      place(row, col + 1, rs);
      col_sum[col] -= v;
      cells[static_cast<std::size_t>(row) * n + col] = 0;
    }
  };
  place(0, 0, 0);
  return out;
}

const char* stat_name(Stat s) {
  switch (s) {
    case Stat::Ne: return "ne";
    case Stat::Sw: return "sw";
    case Stat::Se: return "se";
    case Stat::Nw: return "nw";
    case Stat::Oi: return "oi";
    case Stat::Io: return "io";
  }
  return "?";
}

Stat stat_from_name(const std::string& name) {
  if (name == "ne") return Stat::Ne;
  if (name == "sw") return Stat::Sw;
  if (name == "se") return Stat::Se;
  if (name == "nw") return Stat::Nw;
  if (name == "oi") return Stat::Oi;
  if (name == "io") return Stat::Io;
  throw std::invalid_argument("unknown statistic: " + name);
}

long VertexStats::get(Stat s) const {
  switch (s) {
    case Stat::Ne: return ne;
    case Stat::Sw: return sw;
    case Stat::Se: return se;
    case Stat::Nw: return nw;
    case Stat::Oi: return oi;
    case Stat::Io: return io;
  }
  return 0;
}

VertexStats six_vertex_stats(const Asm& a) {
  VertexStats st;
  int n = a.size();
  for (int j = 0; j < n; ++j) {
    int v = 0;  // column partial sum down to the current row
    for (int i = 0; i < n; ++i) {
      v += a.at(i, j);
      int r = 0;
      for (int jj = 0; jj <= j; ++jj) r += a.at(i, jj);
      if (a.at(i, j) > 0) ++st.oi;
      else if (a.at(i, j) < 0) ++st.io;
      else if (v == 0 && r == 0) ++st.ne;
      else if (v == 1 && r == 1) ++st.sw;
      else if (v == 1 && r == 0) ++st.se;
      else ++st.nw;
    }
  }
  return st;
}

long quotient_dim(const std::set<Stat>& stats, int n) {
  std::set<std::vector<long>> tuples;
  for (const auto& a : enumerate_asm(n)) {
    VertexStats st = six_vertex_stats(a);
    std::vector<long> tuple;
    for (Stat s : stats) tuple.push_back(st.get(s));
    tuples.insert(std::move(tuple));
  }
  return static_cast<long>(tuples.size());
}

VerifyReport asm_closure_check(int size_budget) {
  VerifyReport report;
  CheckResult product_check{"ASM supports closed under product"};
  CheckResult coproduct_check{"ASM supports closed under coproduct"};
  CheckResult transpose_check{"ASM supports closed under transposition"};

  std::vector<std::vector<Asm>> by_size(size_budget + 1);
  for (int n = 0; n <= size_budget; ++n) by_size[n] = enumerate_asm(n);

  for (int n1 = 0; n1 <= size_budget; ++n1)
    for (int n2 = 0; n1 + n2 <= size_budget; ++n2)
      for (const auto& a : by_size[n1])
        for (const auto& b : by_size[n2]) {
          ++product_check.instances;
          Element prod = product_F(a.support(), b.support());
          for (const auto& [key, coeff] : prod.terms())
            if (!is_asm_support(key) && product_check.ok) {
              product_check.ok = false;
              product_check.counterexample = format_matrix(key);
            }
        }

  for (int n = 0; n <= size_budget; ++n)
    for (const auto& a : by_size[n]) {
      ++coproduct_check.instances;
      for (const auto& [pair, coeff] : coproduct_F(a.support()).terms())
        if ((!is_asm_support(pair.first) || !is_asm_support(pair.second)) &&
            coproduct_check.ok) {
          coproduct_check.ok = false;
          coproduct_check.counterexample = format_matrix(a.support());
        }
      ++transpose_check.instances;
      if (!is_asm_support(a.support().transpose()) && transpose_check.ok) {
        transpose_check.ok = false;
        transpose_check.counterexample = format_matrix(a.support());
      }
    }

  report.checks.push_back(std::move(product_check));
  report.checks.push_back(std::move(coproduct_check));
  report.checks.push_back(std::move(transpose_check));
  return report;
}

bool morphism_identity_check(Stat stat, const Asm& d1, const Asm& d2, bool dual) {
  int n1 = d1.size(), n2 = d2.size(), n = n1 + n2;
  long s1 = six_vertex_stats(d1).get(stat);
  long s2 = six_vertex_stats(d2).get(stat);
  Element prod = dual ? dual_product_F(d1.support(), d2.support())
                      : product_F(d1.support(), d2.support());

  if (stat == Stat::Io || stat == Stat::Oi) {
    long expected_terms = binomial(n, n1).convert_to<long>();
    if (static_cast<long>(prod.term_count()) != expected_terms) return false;
    for (const auto& [key, coeff] : prod.terms()) {
      auto a = asm_from_packed(key);
      if (!a) return false;
      if (six_vertex_stats(*a).get(stat) != s1 + s2) return false;
    }
    return true;
  }

  QPoly sum;
  for (const auto& [key, coeff] : prod.terms()) {
    auto a = asm_from_packed(key);
    if (!a) return false;
    sum += QPoly::monomial(static_cast<int>(six_vertex_stats(*a).get(stat)));
  }
  QPoly expected = QPoly::monomial(static_cast<int>(s1 + s2)) * q_multinomial(n, n1, n2);
  return sum == expected;
}

VerifyReport asm_morphism_check(int size_budget) {
  VerifyReport report;
  CheckResult additive{"io/oi additive on every product term"};
  CheckResult gaussian{"zero-statistic q-sums match the q-multinomial"};

  std::vector<std::vector<Asm>> by_size(size_budget + 1);
  for (int n = 0; n <= size_budget; ++n) by_size[n] = enumerate_asm(n);

  for (int n1 = 1; n1 < size_budget; ++n1)
    for (int n2 = 1; n1 + n2 <= size_budget; ++n2)
      for (const auto& a : by_size[n1])
        for (const auto& b : by_size[n2])
          for (bool dual : {false, true}) {
            for (Stat s : {Stat::Io, Stat::Oi}) {
              ++additive.instances;
              if (!morphism_identity_check(s, a, b, dual) && additive.ok) {
                additive.ok = false;
                additive.counterexample =
                    format_asm(a) + "\n\n" + format_asm(b) + "\n(" + stat_name(s) + ")";
              }
            }
            for (Stat s : {Stat::Ne, Stat::Sw, Stat::Se, Stat::Nw}) {
              ++gaussian.instances;
              if (!morphism_identity_check(s, a, b, dual) && gaussian.ok) {
                gaussian.ok = false;
                gaussian.counterexample =
                    format_asm(a) + "\n\n" + format_asm(b) + "\n(" + stat_name(s) + ")";
              }
            }
          }

  report.checks.push_back(std::move(additive));
  report.checks.push_back(std::move(gaussian));
  return report;
}

}  // namespace pmh
