#include "hopf.hpp"

#include <algorithm>
#include <sstream>

namespace pmh {

namespace {

// Builds the shuffle term for one choice of positions of m1's columns
// (m1 padded below with n2 zero rows, m2 padded above with n1 zero rows).
PackedMatrix shuffle_term(const PackedMatrix& m1, const PackedMatrix& m2,
                          const std::vector<int>& positions_of_m1) {
  int n1 = m1.size(), n2 = m2.size(), n = n1 + n2;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<bool> from_m1(n, false);
  for (int p : positions_of_m1) from_m1[p] = true;
  int c1 = 0, c2 = 0;
  for (int c = 0; c < n; ++c) {
    if (from_m1[c]) {
      for (int r = 0; r < n1; ++r) cells[static_cast<std::size_t>(r) * n + c] = m1.at(r, c1);
      ++c1;
    } else {
      for (int r = 0; r < n2; ++r)
        cells[static_cast<std::size_t>(n1 + r) * n + c] = m2.at(r, c2);
      ++c2;
    }
  }
  return PackedMatrix(m1.alphabet(), n, std::move(cells));
}

void check_same_alphabet(const PackedMatrix& m1, const PackedMatrix& m2) {
  if (m1.alphabet() != m2.alphabet())
    throw std::invalid_argument("alphabet mismatch between operands");
}

// Enumerates all n1-subsets of {0..n-1} and feeds them to f.
template <typename F>
void for_each_subset(int n, int n1, F&& f) {
  std::vector<int> pick(n1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n1) {
      f(pick);
      return;
    }
    for (int i = start; i <= n - (n1 - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

Element product_F(const PackedMatrix& m1, const PackedMatrix& m2, HopfFault fault) {
  check_same_alphabet(m1, m2);
  Element out(Basis::F);
  std::vector<PackedMatrix> terms;
  for_each_subset(m1.size() + m2.size(), m1.size(),
                  [&](const std::vector<int>& pos) { terms.push_back(shuffle_term(m1, m2, pos)); });
  if (fault == HopfFault::DropShuffleTerm && terms.size() >= 2) terms.pop_back();
  for (auto& t : terms) out.add_term(t, 1);
  return out;
}

Tensor coproduct_F(const PackedMatrix& m) {
  Tensor out(Basis::F);
  for (int j = 0; j <= m.size(); ++j) {
    if (!column_cut_valid(m, j)) continue;
    auto left = as_packed(compress(column_slice(m, 0, j)));
    auto right = as_packed(compress(column_slice(m, j, m.size())));
    out.add_term({*left, *right}, 1);
  }
  return out;
}

Element antipode_F(const PackedMatrix& m) {
  int n = m.size();
  if (n == 0) return unit_element(Basis::F, m);
  Element out(Basis::F);
  // Cut-point subsets of {1..n-1}; each block of a factorization must have a
  // square compression.  Exponential in n, fine for the sizes in play.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> cuts{0};
    for (int j = 1; j < n; ++j)
      if (mask & (1u << (j - 1))) cuts.push_back(j);
    cuts.push_back(n);
    std::vector<PackedMatrix> blocks;
    bool valid = true;
    for (std::size_t b = 0; b + 1 < cuts.size() && valid; ++b) {
      auto cp = as_packed(compress(column_slice(m, cuts[b], cuts[b + 1])));
      if (!cp || cp->size() != cuts[b + 1] - cuts[b]) {
        valid = false;
        break;
      }
      blocks.push_back(*cp);
    }
    if (!valid) continue;
    Element prod = unit_element(Basis::F, blocks[0]);
    for (std::size_t b = 1; b < blocks.size(); ++b) {
      Element next(Basis::F);
      for (const auto& [key, coeff] : prod.terms()) {
        Element p = product_F(key, blocks[b]);
        p *= coeff;
        next += p;
      }
      prod = std::move(next);
    }
    prod *= Rational(blocks.size() % 2 == 0 ? 1 : -1);
    out += prod;
  }
  return out;
}

Element antipode_F(const Element& e) {
  Element out(e.basis());
  for (const auto& [key, coeff] : e.terms()) {
    Element s = antipode_F(key);
    s *= coeff;
    out += s;
  }
  return out;
}

namespace {

PackedMatrix row_shuffle_term(const PackedMatrix& m1, const PackedMatrix& m2,
                              const std::vector<int>& positions_of_m1) {
  int n1 = m1.size(), n2 = m2.size(), n = n1 + n2;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<bool> from_m1(n, false);
  for (int p : positions_of_m1) from_m1[p] = true;
  int r1 = 0, r2 = 0;
  for (int r = 0; r < n; ++r) {
    if (from_m1[r]) {
      for (int c = 0; c < n1; ++c) cells[static_cast<std::size_t>(r) * n + c] = m1.at(r1, c);
      ++r1;
    } else {
      for (int c = 0; c < n2; ++c)
        cells[static_cast<std::size_t>(r) * n + n1 + c] = m2.at(r2, c);
      ++r2;
    }
  }
  return PackedMatrix(m1.alphabet(), n, std::move(cells));
}

}  // namespace

Element dual_product_F(const PackedMatrix& m1, const PackedMatrix& m2, HopfFault fault) {
  check_same_alphabet(m1, m2);
  Element out(Basis::FDual);
  std::vector<PackedMatrix> terms;
  for_each_subset(m1.size() + m2.size(), m1.size(), [&](const std::vector<int>& pos) {
    terms.push_back(row_shuffle_term(m1, m2, pos));
  });
  if (fault == HopfFault::DropShuffleTerm && terms.size() >= 2) terms.pop_back();
  for (auto& t : terms) out.add_term(t, 1);
  return out;
}

Tensor dual_coproduct_F(const PackedMatrix& m) {
  Tensor out(Basis::FDual);
  for (int j = 0; j <= m.size(); ++j) {
    if (!row_cut_valid(m, j)) continue;
    auto top = as_packed(compress(row_slice(m, 0, j)));
    auto bottom = as_packed(compress(row_slice(m, j, m.size())));
    out.add_term({*top, *bottom}, 1);
  }
  return out;
}

namespace {
Basis dual_of(Basis b) {
  if (b == Basis::F) return Basis::FDual;
  if (b == Basis::FDual) return Basis::F;
  throw std::invalid_argument("duality transpose applies to F / F* elements");
}
}  // namespace

Element duality_transpose(const Element& e) {
  Element out(dual_of(e.basis()));
  for (const auto& [key, coeff] : e.terms()) out.add_term(key.transpose(), coeff);
  return out;
}

Tensor duality_transpose(const Tensor& t) {
  Tensor out(dual_of(t.basis()));
  for (const auto& [key, coeff] : t.terms())
    out.add_term({key.first.transpose(), key.second.transpose()}, coeff);
  return out;
}

Element dendriform_left(const PackedMatrix& m1, const PackedMatrix& m2) {
  if (m1.is_empty() || m2.is_empty())
    throw std::invalid_argument("dendriform products require nonempty operands");
  check_same_alphabet(m1, m2);
  int n = m1.size() + m2.size();
  Element out(Basis::F);
  for_each_subset(n, m1.size(), [&](const std::vector<int>& pos) {
    if (pos.back() == n - 1) out.add_term(shuffle_term(m1, m2, pos), 1);
  });
  return out;
}

Element dendriform_right(const PackedMatrix& m1, const PackedMatrix& m2) {
  if (m1.is_empty() || m2.is_empty())
    throw std::invalid_argument("dendriform products require nonempty operands");
  check_same_alphabet(m1, m2);
  int n = m1.size() + m2.size();
  Element out(Basis::F);
  for_each_subset(n, m1.size(), [&](const std::vector<int>& pos) {
    if (pos.back() != n - 1) out.add_term(shuffle_term(m1, m2, pos), 1);
  });
  return out;
}

namespace {

// True when the bottom row of m has its nonzero entries among columns
// [0, j) -- by the decomposition lemma it cannot straddle a valid cut.
bool bottom_row_in_left(const PackedMatrix& m, int j) {
  int n = m.size();
  for (int c = 0; c < j; ++c)
    if (m.at(n - 1, c) != 0) return true;
  return false;
}

}  // namespace

Tensor codendriform_left(const PackedMatrix& m) {
  if (m.is_empty())
    throw std::invalid_argument("codendriform coproducts require a nonempty argument");
  Tensor out(Basis::F);
  for (int j = 1; j < m.size(); ++j) {
    if (!column_cut_valid(m, j) || !bottom_row_in_left(m, j)) continue;
    auto left = as_packed(compress(column_slice(m, 0, j)));
    auto right = as_packed(compress(column_slice(m, j, m.size())));
    out.add_term({*left, *right}, 1);
  }
  return out;
}

Tensor codendriform_right(const PackedMatrix& m) {
  if (m.is_empty())
    throw std::invalid_argument("codendriform coproducts require a nonempty argument");
  Tensor out(Basis::F);
  for (int j = 1; j < m.size(); ++j) {
    if (!column_cut_valid(m, j) || bottom_row_in_left(m, j)) continue;
    auto left = as_packed(compress(column_slice(m, 0, j)));
    auto right = as_packed(compress(column_slice(m, j, m.size())));
    out.add_term({*left, *right}, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bilinear extensions

Element product_F(const Element& a, const Element& b, HopfFault fault) {
  Element out(Basis::F);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Element p = product_F(ka, kb, fault);
      p *= ca * cb;
      out += p;
    }
  return out;
}

Element dual_product_F(const Element& a, const Element& b, HopfFault fault) {
  Element out(Basis::FDual);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Element p = dual_product_F(ka, kb, fault);
      p *= ca * cb;
      out += p;
    }
  return out;
}

Tensor coproduct_F(const Element& e) {
  Tensor out(e.basis());
  for (const auto& [k, c] : e.terms()) {
    Tensor t = coproduct_F(k);
    t *= c;
    out += t;
  }
  return out;
}

Element dendriform_left(const Element& a, const Element& b) {
  Element out(Basis::F);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Element p = dendriform_left(ka, kb);
      p *= ca * cb;
      out += p;
    }
  return out;
}

Element dendriform_right(const Element& a, const Element& b) {
  Element out(Basis::F);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Element p = dendriform_right(ka, kb);
      p *= ca * cb;
      out += p;
    }
  return out;
}

Tensor codendriform_left(const Element& e) {
  Tensor out(e.basis());
  for (const auto& [k, c] : e.terms()) {
    Tensor t = codendriform_left(k);
    t *= c;
    out += t;
  }
  return out;
}

Tensor codendriform_right(const Element& e) {
  Tensor out(e.basis());
  for (const auto& [k, c] : e.terms()) {
    Tensor t = codendriform_right(k);
    t *= c;
    out += t;
  }
  return out;
}

Tensor product_F(const Tensor& a, const Tensor& b, HopfFault fault) {
  Tensor out(a.basis());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Element left = product_F(ka.first, kb.first, fault);
      Element right = product_F(ka.second, kb.second, fault);
      Rational c = ca * cb;
      for (const auto& [kl, cl] : left.terms())
        for (const auto& [kr, cr] : right.terms()) out.add_term({kl, kr}, c * cl * cr);
    }
  return out;
}

Tensor3 apply_slot(const Tensor& t, int slot, SlotOp op) {
  Tensor3 out(t.basis());
  for (const auto& [key, coeff] : t.terms()) {
    const PackedMatrix& target = slot == 0 ? key.first : key.second;
    Tensor expanded(t.basis());
    switch (op) {
      case SlotOp::Full: expanded = coproduct_F(target); break;
      case SlotOp::Left: expanded = codendriform_left(target); break;
      case SlotOp::Right: expanded = codendriform_right(target); break;
    }
    for (const auto& [pair, c] : expanded.terms()) {
      if (slot == 0)
        out.add_term({pair.first, pair.second, key.second}, coeff * c);
      else
        out.add_term({key.first, pair.first, pair.second}, coeff * c);
    }
  }
  return out;
}

Tensor3 coproduct_left_slot(const Tensor& t) { return apply_slot(t, 0, SlotOp::Full); }
Tensor3 coproduct_right_slot(const Tensor& t) { return apply_slot(t, 1, SlotOp::Full); }

// ---------------------------------------------------------------------------
// Axiom verification

bool VerifyReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.ok ? "pass" : "FAIL") << "  " << c.name << "  (" << c.instances
        << " instances)\n";
    if (!c.ok && !c.counterexample.empty())
      out << "  counterexample:\n" << c.counterexample << "\n";
  }
  out << (all_ok() ? "OK" : "VIOLATIONS FOUND") << "\n";
  return out.str();
}

namespace {

std::string instance_text(const std::vector<PackedMatrix>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += "\n\n";
    out += format_matrix(ms[i]);
  }
  return out;
}

struct AxiomChecker {
  int k;
  HopfFault fault;
  std::vector<std::vector<PackedMatrix>> strata;  // strata[n]

  const std::vector<PackedMatrix>& of_size(int n) { return strata[n]; }

  CheckResult associativity(int total_budget) {
    CheckResult res{"associativity (a.b).c = a.(b.c)"};
    for (int a = 1; a + 2 <= total_budget; ++a)
      for (int b = 1; a + b + 1 <= total_budget; ++b)
        for (int c = 1; a + b + c <= total_budget; ++c)
          for (const auto& ma : of_size(a))
            for (const auto& mb : of_size(b))
              for (const auto& mc : of_size(c)) {
                ++res.instances;
                Element lhs = product_F(product_F(ma, mb, fault),
                                        unit_element(Basis::F, mc), fault);
                Element rhs = product_F(unit_element(Basis::F, ma),
                                        product_F(mb, mc, fault), fault);
                if (!(lhs == rhs) && res.ok) {
                  res.ok = false;
                  res.counterexample = instance_text({ma, mb, mc});
                }
              }
    return res;
  }

  CheckResult coassociativity(int size_budget) {
    CheckResult res{"coassociativity (D(x)I)D = (I(x)D)D"};
    for (int n = 0; n <= size_budget; ++n)
      for (const auto& m : of_size(n)) {
        ++res.instances;
        Tensor d = coproduct_F(m);
        Tensor3 lhs = apply_slot(d, 0, SlotOp::Full);
        Tensor3 rhs = apply_slot(d, 1, SlotOp::Full);
        if (!(lhs == rhs) && res.ok) {
          res.ok = false;
          res.counterexample = instance_text({m});
        }
      }
    return res;
  }

  CheckResult coproduct_multiplicative(int pair_budget) {
    CheckResult res{"coproduct is an algebra morphism"};
    for (int a = 0; a <= pair_budget; ++a)
      for (int b = 0; a + b <= pair_budget; ++b)
        for (const auto& ma : of_size(a))
          for (const auto& mb : of_size(b)) {
            ++res.instances;
            Tensor lhs = coproduct_F(product_F(ma, mb, fault));
            Tensor rhs = product_F(coproduct_F(ma), coproduct_F(mb), fault);
            if (!(lhs == rhs) && res.ok) {
              res.ok = false;
              res.counterexample = instance_text({ma, mb});
            }
          }
    return res;
  }

  CheckResult antipode_convolution(int size_budget) {
    CheckResult res{"antipode convolution m(S(x)I)D = unit.counit"};
    for (int n = 0; n <= size_budget; ++n)
      for (const auto& m : of_size(n)) {
        ++res.instances;
        Element acc(Basis::F);
        for (const auto& [pair, coeff] : coproduct_F(m).terms()) {
          Element s = antipode_F(pair.first);
          s *= coeff;
          acc += product_F(s, unit_element(Basis::F, pair.second), fault);
        }
        Element expected(Basis::F);
        if (n == 0) expected.add_term(PackedMatrix::empty(k), 1);
        if (!(acc == expected) && res.ok) {
          res.ok = false;
          res.counterexample = instance_text({m});
        }
      }
    return res;
  }

  CheckResult dendriform_partition(int pair_budget) {
    CheckResult res{"product splits as left + right"};
    for (int a = 1; a + 1 <= pair_budget; ++a)
      for (int b = 1; a + b <= pair_budget; ++b)
        for (const auto& ma : of_size(a))
          for (const auto& mb : of_size(b)) {
            ++res.instances;
            Element sum = dendriform_left(ma, mb) + dendriform_right(ma, mb);
            if (!(sum == product_F(ma, mb, fault)) && res.ok) {
              res.ok = false;
              res.counterexample = instance_text({ma, mb});
            }
          }
    return res;
  }

  CheckResult dendriform_axioms(int total_budget) {
    CheckResult res{"dendriform axioms (1)-(3)"};
    for (int a = 1; a + 2 <= total_budget; ++a)
      for (int b = 1; a + b + 1 <= total_budget; ++b)
        for (int c = 1; a + b + c <= total_budget; ++c)
          for (const auto& ma : of_size(a))
            for (const auto& mb : of_size(b))
              for (const auto& mc : of_size(c)) {
                ++res.instances;
                Element x = unit_element(Basis::F, ma);
                Element y = unit_element(Basis::F, mb);
                Element z = unit_element(Basis::F, mc);
                bool ok1 = dendriform_left(dendriform_left(x, y), z) ==
                           dendriform_left(x, product_F(y, z, fault));
                bool ok2 = dendriform_left(dendriform_right(x, y), z) ==
                           dendriform_right(x, dendriform_left(y, z));
                bool ok3 = dendriform_right(product_F(x, y, fault), z) ==
                           dendriform_right(x, dendriform_right(y, z));
                if (!(ok1 && ok2 && ok3) && res.ok) {
                  res.ok = false;
                  res.counterexample = instance_text({ma, mb, mc});
                }
              }
    return res;
  }

  CheckResult codendriform_axioms(int size_budget) {
    CheckResult res{"codendriform axioms (1)-(3)"};
    for (int n = 1; n <= size_budget; ++n)
      for (const auto& m : of_size(n)) {
        ++res.instances;
        Tensor dl = codendriform_left(m);
        Tensor dr = codendriform_right(m);
        Tensor3 l1 = apply_slot(dl, 0, SlotOp::Left);
        Tensor3 r1 = apply_slot(dl, 1, SlotOp::Left) + apply_slot(dl, 1, SlotOp::Right);
        Tensor3 l2 = apply_slot(dl, 0, SlotOp::Right);
        Tensor3 r2 = apply_slot(dr, 1, SlotOp::Left);
        Tensor3 l3 = apply_slot(dr, 0, SlotOp::Left) + apply_slot(dr, 0, SlotOp::Right);
        Tensor3 r3 = apply_slot(dr, 1, SlotOp::Right);
        if (!(l1 == r1 && l2 == r2 && l3 == r3) && res.ok) {
          res.ok = false;
          res.counterexample = instance_text({m});
        }
      }
    return res;
  }
};

}  // namespace

VerifyReport verify_axioms(int k, int size_budget, HopfFault fault, int antipode_budget) {
  AxiomChecker checker{k, fault, {}};
  checker.strata.resize(size_budget + 1);
  for (int n = 0; n <= size_budget; ++n) checker.strata[n] = enumerate_packed(k, n);

  if (antipode_budget < 0) antipode_budget = std::min(size_budget, 3);
  antipode_budget = std::min(antipode_budget, size_budget);
  VerifyReport report;
  report.checks.push_back(checker.associativity(size_budget));
  report.checks.push_back(checker.coassociativity(size_budget));
  report.checks.push_back(checker.coproduct_multiplicative(size_budget));
  report.checks.push_back(checker.antipode_convolution(antipode_budget));
  report.checks.push_back(checker.dendriform_partition(size_budget));
  report.checks.push_back(checker.dendriform_axioms(size_budget));
  report.checks.push_back(checker.codendriform_axioms(size_budget));
  return report;
}

}  // namespace pmh
