#include "embeddings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pmh {

bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) {
  return a.perm == b.perm && a.colors == b.colors;
}

ColoredPermutation parse_colored_permutation(const std::string& text) {
  std::string word = text, colors;
  if (auto pos = text.find(':'); pos != std::string::npos) {
    word = text.substr(0, pos);
    colors = text.substr(pos + 1);
  }
  ColoredPermutation p;
  for (char ch : word) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("permutation letters must be digits 1-9");
    p.perm.push_back(ch - '0');
  }
  if (colors.empty()) {
    p.colors.assign(p.perm.size(), 1);
  } else {
    for (char ch : colors) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("colors must be digits 1-9");
      p.colors.push_back(ch - '0');
    }
  }
  if (p.colors.size() != p.perm.size())
    throw std::invalid_argument("color word length must match the permutation size");
  std::vector<bool> seen(p.perm.size() + 1, false);
  for (int v : p.perm) {
    if (v < 1 || v > static_cast<int>(p.perm.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  return p;
}

PackedMatrix alpha_k(const ColoredPermutation& p, int k) {
  int n = static_cast<int>(p.perm.size());
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) {
    if (p.colors[j] > k) throw std::invalid_argument("color exceeds alphabet bound");
    cells[static_cast<std::size_t>(p.perm[j] - 1) * n + j] =
        static_cast<std::uint8_t>(p.colors[j]);
  }
  return PackedMatrix(k, n, std::move(cells));
}

std::vector<ColoredPermutation> enumerate_colored_permutations(int n, int k) {
  std::vector<ColoredPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> colors(n, 1);
    while (true) {
      out.push_back({perm, colors});
      int i = n - 1;
      while (i >= 0 && colors[i] == k) colors[i--] = 1;
      if (i < 0) break;
      ++colors[i];
    }
    if (n == 0) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<ColoredPermutation> colored_shuffle(const ColoredPermutation& a,
                                                const ColoredPermutation& b) {
  int n1 = static_cast<int>(a.perm.size());
  int n2 = static_cast<int>(b.perm.size());
  int n = n1 + n2;
  std::vector<ColoredPermutation> out;
  // Choose the positions of a's letters; b's letters shift by n1.
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n1) {
      ColoredPermutation w;
      w.perm.assign(n, 0);
      w.colors.assign(n, 0);
      std::vector<bool> is_a(n, false);
      for (int p : pick) is_a[p] = true;
      int ia = 0, ib = 0;
      for (int pos = 0; pos < n; ++pos) {
        if (is_a[pos]) {
          w.perm[pos] = a.perm[ia];
          w.colors[pos] = a.colors[ia++];
        } else {
          w.perm[pos] = b.perm[ib] + n1;
          w.colors[pos] = b.colors[ib++];
        }
      }
      out.push_back(std::move(w));
      return;
    }
    for (int i = start; i <= n - (n1 - depth); ++i) {
      pick.push_back(i);
      rec(i + 1, depth + 1);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

bool colored_shuffle_correspondence(const ColoredPermutation& a, const ColoredPermutation& b,
                                    int k) {
  Element lhs = product_F(alpha_k(a, k), alpha_k(b, k));
  Element rhs(Basis::F);
  for (const auto& w : colored_shuffle(a, b)) rhs.add_term(alpha_k(w, k), 1);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Uniform block permutations

bool operator==(const UniformBlockPermutation& a, const UniformBlockPermutation& b) {
  return a.size == b.size && a.blocks == b.blocks;
}

namespace {

std::vector<int> parse_element_set(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("malformed block: " + text);
  std::vector<int> out;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("malformed block: " + text);
    out.push_back(std::stoi(tok));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_ubp(const UniformBlockPermutation& u) {
  std::set<int> dom, img;
  for (const auto& [d, i] : u.blocks) {
    if (d.size() != i.size()) throw std::invalid_argument("block sizes differ");
    if (d.empty()) throw std::invalid_argument("empty block");
    for (int x : d)
      if (x < 1 || x > u.size || !dom.insert(x).second)
        throw std::invalid_argument("domain side is not a partition");
    for (int x : i)
      if (x < 1 || x > u.size || !img.insert(x).second)
        throw std::invalid_argument("image side is not a partition");
  }
  if (static_cast<int>(dom.size()) != u.size || static_cast<int>(img.size()) != u.size)
    throw std::invalid_argument("blocks do not cover [n]");
}

void canonicalize(UniformBlockPermutation& u) {
  std::sort(u.blocks.begin(), u.blocks.end(),
            [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
}

}  // namespace

UniformBlockPermutation parse_ubp(const std::string& text) {
  UniformBlockPermutation u;
  std::istringstream in(text);
  std::string chunk;
  int max_elem = 0;
  while (std::getline(in, chunk, ';')) {
    std::string s;
    for (char c : chunk)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) continue;
    auto arrow = s.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("block needs '->': " + s);
    auto dom = parse_element_set(s.substr(0, arrow));
    auto img = parse_element_set(s.substr(arrow + 2));
    for (int x : dom) max_elem = std::max(max_elem, x);
    for (int x : img) max_elem = std::max(max_elem, x);
    u.blocks.emplace_back(std::move(dom), std::move(img));
  }
  u.size = max_elem;
  validate_ubp(u);
  canonicalize(u);
  return u;
}

std::string format_ubp(const UniformBlockPermutation& u) {
  std::string out;
  for (std::size_t b = 0; b < u.blocks.size(); ++b) {
    if (b) out += "; ";
    auto dump = [&](const std::vector<int>& xs) {
      out += '{';
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
      }
      out += '}';
    };
    dump(u.blocks[b].first);
    out += "->";
    dump(u.blocks[b].second);
  }
  return out.empty() ? "{}" : out;
}

UniformBlockPermutation ubp_inverse(const UniformBlockPermutation& u) {
  UniformBlockPermutation inv;
  inv.size = u.size;
  for (const auto& [d, i] : u.blocks) inv.blocks.emplace_back(i, d);
  canonicalize(inv);
  return inv;
}

PackedMatrix beta(const UniformBlockPermutation& u) {
  int n = u.size;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [dom, img] : u.blocks)
    for (int j : dom)
      for (int i : img) cells[static_cast<std::size_t>(i - 1) * n + (j - 1)] = 1;
  return PackedMatrix(1, n, std::move(cells));
}

std::optional<UniformBlockPermutation> ubp_from_support(const PackedMatrix& m) {
  int n = m.size();
  // Connected components of the bipartite support graph on rows x columns.
  std::vector<int> row_comp(n, -1), col_comp(n, -1);
  int comps = 0;
  for (int seed = 0; seed < n; ++seed) {
    if (col_comp[seed] != -1) continue;
    int id = comps++;
    std::vector<int> col_stack{seed};
    col_comp[seed] = id;
    std::vector<int> row_stack;
    while (!col_stack.empty() || !row_stack.empty()) {
      if (!col_stack.empty()) {
        int c = col_stack.back();
        col_stack.pop_back();
        for (int r = 0; r < n; ++r)
          if (m.at(r, c) != 0 && row_comp[r] == -1) {
            row_comp[r] = id;
            row_stack.push_back(r);
          }
      } else {
        int r = row_stack.back();
        row_stack.pop_back();
        for (int c = 0; c < n; ++c)
          if (m.at(r, c) != 0 && col_comp[c] == -1) {
            col_comp[c] = id;
            col_stack.push_back(c);
          }
      }
    }
  }
  UniformBlockPermutation u;
  u.size = n;
  for (int id = 0; id < comps; ++id) {
    std::vector<int> rows, cols;
    for (int r = 0; r < n; ++r)
      if (row_comp[r] == id) rows.push_back(r + 1);
    for (int c = 0; c < n; ++c)
      if (col_comp[c] == id) cols.push_back(c + 1);
    if (rows.size() != cols.size()) return std::nullopt;
    for (int r : rows)
      for (int c : cols)
        if (m.at(r - 1, c - 1) == 0) return std::nullopt;  // not a full rectangle
    u.blocks.emplace_back(cols, rows);
  }
  canonicalize(u);
  return u;
}

bool is_ubp_support(const PackedMatrix& m) { return ubp_from_support(m).has_value(); }

std::vector<UniformBlockPermutation> enumerate_ubp(int n) {
  std::vector<UniformBlockPermutation> out;
  for (const auto& m : enumerate_packed(1, n))
    if (auto u = ubp_from_support(m)) out.push_back(std::move(*u));
  return out;
}

// ---------------------------------------------------------------------------
// Image closure

VerifyReport image_closure_check(const MatrixPredicate& in_image, int size_budget,
                                 const std::string& label) {
  VerifyReport report;
  CheckResult product_check{label + ": image closed under product"};
  CheckResult coproduct_check{label + ": image closed under coproduct"};

  std::vector<std::vector<PackedMatrix>> image(size_budget + 1);
  for (int n = 0; n <= size_budget; ++n)
    for (const auto& m : enumerate_packed(1, n))
      if (in_image(m)) image[n].push_back(m);

  for (int n1 = 0; n1 <= size_budget; ++n1)
    for (int n2 = 0; n1 + n2 <= size_budget; ++n2)
      for (const auto& a : image[n1])
        for (const auto& b : image[n2]) {
          ++product_check.instances;
          for (const auto& [key, coeff] : product_F(a, b).terms())
            if (!in_image(key) && product_check.ok) {
              product_check.ok = false;
              product_check.counterexample = format_matrix(key);
            }
        }

  for (int n = 0; n <= size_budget; ++n)
    for (const auto& m : image[n]) {
      ++coproduct_check.instances;
      for (const auto& [pair, coeff] : coproduct_F(m).terms())
        if ((!in_image(pair.first) || !in_image(pair.second)) && coproduct_check.ok) {
          coproduct_check.ok = false;
          coproduct_check.counterexample = format_matrix(m);
        }
    }

  report.checks.push_back(std::move(product_check));
  report.checks.push_back(std::move(coproduct_check));
  return report;
}

VerifyReport embeddings_check(int size_budget, bool inject_nonclosed_fault) {
  VerifyReport report;

  auto is_permutation_matrix = [](const PackedMatrix& m) {
    return m.weight() == m.size();  // one nonzero per line forces this
  };
  for (auto& check :
       image_closure_check(is_permutation_matrix, size_budget, "permutation image").checks)
    report.checks.push_back(std::move(check));
  for (auto& check :
       image_closure_check(is_ubp_support, std::min(size_budget, 3), "block-bijection image")
           .checks)
    report.checks.push_back(std::move(check));

  if (inject_nonclosed_fault) {
    // Connected matrices do not span a subalgebra; this is the deliberate
    // failing control.
    auto connected = [](const PackedMatrix& m) { return m.is_empty() || m.is_connected(); };
    for (auto& check :
         image_closure_check(connected, std::min(size_budget, 3), "connected (control)").checks)
      report.checks.push_back(std::move(check));
  }

  CheckResult correspondence{"colored shifted shuffle matches the matrix product"};
  for (int k = 1; k <= 2; ++k)
    for (int n1 = 0; n1 <= 2; ++n1)
      for (int n2 = 0; n1 + n2 <= 3; ++n2)
        for (const auto& a : enumerate_colored_permutations(n1, k))
          for (const auto& b : enumerate_colored_permutations(n2, k)) {
            ++correspondence.instances;
            if (!colored_shuffle_correspondence(a, b, k) && correspondence.ok) {
              correspondence.ok = false;
              correspondence.counterexample = format_matrix(alpha_k(a, k)) + "\n\n" +
                                              format_matrix(alpha_k(b, k));
            }
          }
  report.checks.push_back(std::move(correspondence));

  CheckResult transpose_inverse{"transpose of a block-bijection matrix is its inverse's"};
  for (int n = 0; n <= 3; ++n)
    for (const auto& u : enumerate_ubp(n)) {
      ++transpose_inverse.instances;
      if (!(beta(u).transpose() == beta(ubp_inverse(u))) && transpose_inverse.ok) {
        transpose_inverse.ok = false;
        transpose_inverse.counterexample = format_ubp(u);
      }
    }
  report.checks.push_back(std::move(transpose_inverse));

  return report;
}

}  // namespace pmh
