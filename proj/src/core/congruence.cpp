#include "congruence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pmh {

const char* congruence_name(CongruenceKind kind) {
  switch (kind) {
    case CongruenceKind::Sylvester: return "sylvester";
    case CongruenceKind::Plactic: return "plactic";
    case CongruenceKind::Hypoplactic: return "hypoplactic";
    case CongruenceKind::Total: return "total";
    case CongruenceKind::BrokenLast: return "broken";
  }
  return "?";
}

CongruenceKind congruence_from_name(const std::string& name) {
  if (name == "sylvester") return CongruenceKind::Sylvester;
  if (name == "plactic") return CongruenceKind::Plactic;
  if (name == "hypoplactic") return CongruenceKind::Hypoplactic;
  if (name == "total") return CongruenceKind::Total;
  if (name == "broken") return CongruenceKind::BrokenLast;
  throw std::invalid_argument("unknown congruence: " + name);
}

namespace {

std::string letter_str(const Column& c) {
  std::string s;
  s.reserve(c.size());
  for (auto v : c) s += static_cast<char>('0' + v);
  return s;
}

std::string ev_str(const ColumnWord& w) {
  std::string s = "h" + std::to_string(w.height) + ":";
  for (const auto& c : evaluation(w)) {
    s += letter_str(c);
    s += ',';
  }
  return s;
}

// Binary search tree with column labels, built by right-to-left insertion;
// at a node, letters less than or equal to the label descend left.  The
// shape-and-labels print is the sylvester key.
struct BstNode {
  Column label;
  int left = -1, right = -1;
};

int bst_insert(std::vector<BstNode>& pool, int root, const Column& x) {
  if (root < 0) {
    pool.push_back(BstNode{x});
    return static_cast<int>(pool.size()) - 1;
  }
  if (column_compare(x, pool[root].label) <= 0) {
    int child = bst_insert(pool, pool[root].left, x);
    pool[root].left = child;
  } else {
    int child = bst_insert(pool, pool[root].right, x);
    pool[root].right = child;
  }
  return root;
}

void bst_print(const std::vector<BstNode>& pool, int node, std::string& out) {
  if (node < 0) {
    out += '.';
    return;
  }
  out += '(';
  bst_print(pool, pool[node].left, out);
  out += letter_str(pool[node].label);
  bst_print(pool, pool[node].right, out);
  out += ')';
}

std::string sylvester_key(const ColumnWord& w) {
  std::vector<BstNode> pool;
  int root = -1;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    root = bst_insert(pool, root, *it);
  std::string out;
  bst_print(pool, root, out);
  return out;
}

// Row insertion with weakly increasing rows: the bumped entry is the
// leftmost one strictly greater than the inserted letter.
std::string plactic_key(const ColumnWord& w) {
  std::vector<std::vector<Column>> rows;
  for (const auto& letter : w.letters) {
    Column x = letter;
    std::size_t r = 0;
    while (true) {
      if (r == rows.size()) {
        rows.emplace_back();
        rows.back().push_back(x);
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x, column_less);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
      ++r;
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (const auto& c : row) {
      out += letter_str(c);
      out += ',';
    }
    out += '/';
  }
  return out;
}

std::string hypoplactic_key(const ColumnWord& w) {
  std::vector<int> std_word = standardize(w);
  std::size_t m = std_word.size();
  std::vector<int> pos(m + 2, 0);
  for (std::size_t i = 0; i < m; ++i) pos[std_word[i]] = static_cast<int>(i);
  std::string out = "r";
  for (std::size_t v = 1; v + 1 <= m; ++v)
    if (pos[v + 1] < pos[v]) out += std::to_string(v) + ",";
  return out;
}

}  // namespace

std::string class_key(CongruenceKind kind, const ColumnWord& w) {
  if (kind == CongruenceKind::BrokenLast)
    return w.letters.empty() ? std::string("last:") : "last:" + letter_str(w.letters.back());
  std::string key = "ev:" + ev_str(w) + ";";
  ColumnWord cw = compress(w);
  switch (kind) {
    case CongruenceKind::Sylvester: key += sylvester_key(cw); break;
    case CongruenceKind::Plactic: key += plactic_key(cw); break;
    case CongruenceKind::Hypoplactic: key += hypoplactic_key(cw); break;
    case CongruenceKind::Total: break;  // the evaluation is the whole key
    case CongruenceKind::BrokenLast: break;
  }
  return key;
}

namespace {

std::vector<PackedMatrix> stratum(int k, Grading grading, int degree) {
  return grading == Grading::Size ? enumerate_packed(k, degree)
                                  : enumerate_packed_by_weight(k, degree);
}

}  // namespace

long class_count(CongruenceKind kind, int k, Grading grading, int degree) {
  std::set<std::string> keys;
  for (const auto& m : stratum(k, grading, degree))
    keys.insert(class_key(kind, to_column_word(m)));
  return static_cast<long>(keys.size());
}

std::vector<long> class_dims(CongruenceKind kind, int k, Grading grading, int max_degree) {
  std::vector<long> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(class_count(kind, k, grading, d));
  return out;
}

// ---------------------------------------------------------------------------
// Good-congruence validator

namespace {

std::vector<Column> alphabet_of_height(int k, int h) {
  std::vector<Column> out;
  Column cur(h, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == h) {
      out.push_back(cur);
      return;
    }
    for (std::uint8_t v = 0; v <= k; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), column_less);
  return out;
}

std::vector<ColumnWord> words_up_to(int k, int height, int max_length) {
  std::vector<ColumnWord> out;
  auto letters = alphabet_of_height(k, height);
  std::vector<Column> cur;
  std::function<void(int)> rec = [&](int len) {
    ColumnWord w;
    w.height = height;
    w.letters = cur;
    out.push_back(w);
    if (len == max_length) return;
    for (const auto& c : letters) {
      cur.push_back(c);
      rec(len + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

ColumnWord concat(const ColumnWord& a, const ColumnWord& b) {
  ColumnWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::string word_str(const ColumnWord& w) {
  std::string s;
  for (const auto& c : w.letters) {
    s += letter_str(c);
    s += ' ';
  }
  return s.empty() ? "(empty word)" : s;
}

}  // namespace

VerifyReport validate_good_congruence(CongruenceKind kind, int max_height, int max_length,
                                      unsigned seed) {
  VerifyReport report;
  CheckResult concat_check{"congruence stable under concatenation"};
  CheckResult interval_check{"stable under restriction to alphabet intervals"};
  CheckResult decompression_check{"decompression biconditional"};
  std::mt19937_64 rng(seed);

  for (int h = 1; h <= max_height; ++h) {
    auto words = words_up_to(1, h, max_length);
    auto letters = alphabet_of_height(1, h);

    // Group words by class key.
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < words.size(); ++i)
      classes[class_key(kind, words[i])].push_back(i);

    // (1) and (2) on congruent pairs.
    for (const auto& [key, members] : classes) {
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const ColumnWord& u = words[members[a]];
          const ColumnWord& v = words[members[b]];

          // Concatenation by every single letter on both sides, plus a few
          // random longer contexts.
          std::vector<ColumnWord> contexts;
          for (const auto& c : letters) {
            ColumnWord one;
            one.height = h;
            one.letters.push_back(c);
            contexts.push_back(one);
          }
          for (int t = 0; t < 3; ++t) {
            ColumnWord rnd;
            rnd.height = h;
            int len = static_cast<int>(rng() % 3);
            for (int i = 0; i < len; ++i) rnd.letters.push_back(letters[rng() % letters.size()]);
            contexts.push_back(rnd);
          }
          for (const auto& wrd : contexts) {
            ++concat_check.instances;
            bool ok = class_key(kind, concat(wrd, u)) == class_key(kind, concat(wrd, v)) &&
                      class_key(kind, concat(u, wrd)) == class_key(kind, concat(v, wrd));
            if (!ok && concat_check.ok) {
              concat_check.ok = false;
              concat_check.counterexample =
                  "u = " + word_str(u) + "; v = " + word_str(v) + "; context = " + word_str(wrd);
            }
          }

          // Intervals spanned by pairs of letters of the alphabet.
          for (std::size_t lo = 0; lo < letters.size(); ++lo)
            for (std::size_t hi = lo; hi < letters.size(); ++hi) {
              ++interval_check.instances;
              ColumnWord ru = restrict_to_interval(u, letters[lo], letters[hi]);
              ColumnWord rv = restrict_to_interval(v, letters[lo], letters[hi]);
              if (class_key(kind, ru) != class_key(kind, rv) && interval_check.ok) {
                interval_check.ok = false;
                interval_check.counterexample = "u = " + word_str(u) + "; v = " + word_str(v) +
                                                "; interval [" + letter_str(letters[lo]) + ", " +
                                                letter_str(letters[hi]) + "]";
              }
            }
        }
    }

    // (3) both directions: group by (evaluation, key of compression) and
    // compare with the congruence itself.
    std::map<std::string, std::vector<std::size_t>> decompression_classes;
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::string k2 = ev_str(words[i]) + "||" + class_key(kind, compress(words[i]));
      decompression_classes[k2].push_back(i);
    }
    for (const auto& [key, members] : decompression_classes)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          ++decompression_check.instances;
          if (class_key(kind, words[members[a]]) != class_key(kind, words[members[b]]) &&
              decompression_check.ok) {
            decompression_check.ok = false;
            decompression_check.counterexample = "u = " + word_str(words[members[a]]) +
                                                 "; v = " + word_str(words[members[b]]);
          }
        }
    for (const auto& [key, members] : classes)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          ++decompression_check.instances;
          const ColumnWord& u = words[members[a]];
          const ColumnWord& v = words[members[b]];
          bool ok = ev_str(u) == ev_str(v) &&
                    class_key(kind, compress(u)) == class_key(kind, compress(v));
          if (!ok && decompression_check.ok) {
            decompression_check.ok = false;
            decompression_check.counterexample =
                "u = " + word_str(u) + "; v = " + word_str(v);
          }
        }
  }

  report.checks.push_back(std::move(concat_check));
  report.checks.push_back(std::move(interval_check));
  report.checks.push_back(std::move(decompression_check));
  return report;
}

// ---------------------------------------------------------------------------
// Class-sum closure checks

VerifyReport p_basis_product_check(CongruenceKind kind, int n1, int n2) {
  VerifyReport report;
  CheckResult product_check{"class-sum product is a 0/1 sum of whole classes"};
  CheckResult coproduct_check{"class-sum coproduct is constant on class pairs"};

  auto s1 = enumerate_packed(1, n1);
  auto s2 = enumerate_packed(1, n2);
  auto s12 = enumerate_packed(1, n1 + n2);

  auto key_of = [&](const PackedMatrix& m) { return class_key(kind, to_column_word(m)); };

  std::map<std::string, std::vector<PackedMatrix>> classes1, classes2;
  std::map<PackedMatrix, std::string, detail::CanonicalKeyLess> key12;
  std::map<std::string, std::vector<PackedMatrix>> classes12;
  for (const auto& m : s1) classes1[key_of(m)].push_back(m);
  for (const auto& m : s2) classes2[key_of(m)].push_back(m);
  for (const auto& m : s12) {
    auto key = key_of(m);
    key12.emplace(m, key);
    classes12[key].push_back(m);
  }

  for (const auto& [k1, members1] : classes1)
    for (const auto& [k2, members2] : classes2) {
      ++product_check.instances;
      Element sum(Basis::F);
      for (const auto& a : members1)
        for (const auto& b : members2) sum += product_F(a, b);
      bool ok = true;
      std::set<std::string> touched;
      for (const auto& [key, coeff] : sum.terms()) {
        if (coeff != 1) ok = false;
        touched.insert(key12.at(key));
      }
      for (const auto& cls : touched)
        for (const auto& member : classes12.at(cls))
          if (sum.coefficient(member) == 0) ok = false;
      if (!ok && product_check.ok) {
        product_check.ok = false;
        product_check.counterexample = format_matrix(members1.front()) + "\n\n" +
                                       format_matrix(members2.front());
      }
    }

  // Coproduct side: the coefficient of F_A (x) F_B in the coproduct of a
  // class sum must depend only on the pair of classes of A and B, and every
  // member pair of a touched class pair must appear with that coefficient.
  std::vector<std::map<std::string, long>> class_sizes(n1 + n2 + 1);
  for (int d = 0; d <= n1 + n2; ++d)
    for (const auto& m : enumerate_packed(1, d)) ++class_sizes[d][key_of(m)];

  for (const auto& [cls, members] : classes12) {
    ++coproduct_check.instances;
    Tensor total(Basis::F);
    for (const auto& m : members) total += coproduct_F(m);

    struct PairInfo {
      Rational coeff;
      long count = 0;
      int left_size = 0, right_size = 0;
    };
    std::map<std::pair<std::string, std::string>, PairInfo> by_class_pair;
    bool ok = true;
    for (const auto& [pr, coeff] : total.terms()) {
      auto kp = std::pair{key_of(pr.first), key_of(pr.second)};
      auto [it, inserted] = by_class_pair.try_emplace(
          kp, PairInfo{coeff, 0, pr.first.size(), pr.second.size()});
      if (!inserted && it->second.coeff != coeff) ok = false;
      ++it->second.count;
    }
    for (const auto& [kp, info] : by_class_pair) {
      long expected = class_sizes[info.left_size].at(kp.first) *
                      class_sizes[info.right_size].at(kp.second);
      if (info.count != expected) ok = false;
    }
    if (!ok && coproduct_check.ok) {
      coproduct_check.ok = false;
      coproduct_check.counterexample = format_matrix(members.front());
    }
  }

  report.checks.push_back(std::move(product_check));
  report.checks.push_back(std::move(coproduct_check));
  return report;
}

}  // namespace pmh
