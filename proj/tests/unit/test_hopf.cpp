#include <doctest.h>

#include <set>

#include "hopf.hpp"
#include "oracles.hpp"

using namespace pmh;

namespace {

Element f_sum(std::initializer_list<const char*> texts, int k = 1) {
  Element e(Basis::F);
  for (auto* t : texts) e.add_term(parse_matrix(t, k), 1);
  return e;
}

Tensor f_tensor_sum(std::initializer_list<std::pair<const char*, const char*>> pairs,
                    Basis basis = Basis::F, int k = 1) {
  Tensor t(basis);
  for (auto& [l, r] : pairs) t.add_term({parse_matrix(l, k), parse_matrix(r, k)}, 1);
  return t;
}

}  // namespace

TEST_CASE("the six-term fundamental product") {
  auto m1 = parse_matrix("0 1\n1 1", 1);
  auto m2 = parse_matrix("1 0\n0 1", 1);
  Element expected = f_sum({
      "0 1 0 0\n1 1 0 0\n0 0 1 0\n0 0 0 1",
      "0 0 1 0\n1 0 1 0\n0 1 0 0\n0 0 0 1",
      "0 0 0 1\n1 0 0 1\n0 1 0 0\n0 0 1 0",
      "0 0 1 0\n0 1 1 0\n1 0 0 0\n0 0 0 1",
      "0 0 0 1\n0 1 0 1\n1 0 0 0\n0 0 1 0",
      "0 0 0 1\n0 0 1 1\n1 0 0 0\n0 1 0 0",
  });
  CHECK(product_F(m1, m2) == expected);

  // Independent interleaving oracle gives the same support.
  auto words = oracle::column_shuffle(m1, m2);
  CHECK(words.size() == 6);
  for (const auto& w : words) CHECK(product_F(m1, m2).coefficient(w) == 1);

  // Unit.
  auto e = PackedMatrix::empty(1);
  CHECK(product_F(e, m1) == unit_element(Basis::F, m1));
  CHECK(product_F(m1, e) == unit_element(Basis::F, m1));
}

TEST_CASE("the three-term coproduct") {
  auto m = parse_matrix("1 1 0 0\n0 0 0 1\n1 0 1 0\n0 1 0 0", 1);
  Tensor expected = f_tensor_sum({
      {"1 1 0 0\n0 0 0 1\n1 0 1 0\n0 1 0 0", "empty"},
      {"1 1 0\n1 0 1\n0 1 0", "1"},
      {"empty", "1 1 0 0\n0 0 0 1\n1 0 1 0\n0 1 0 0"},
  });
  CHECK(coproduct_F(m) == expected);

  CHECK(coproduct_F(PackedMatrix::empty(1)) ==
        f_tensor_sum({{"empty", "empty"}}));
  CHECK(coproduct_F(parse_matrix("1", 1)) ==
        f_tensor_sum({{"empty", "1"}, {"1", "empty"}}));
}

TEST_CASE("antipode") {
  CHECK(antipode_F(parse_matrix("1", 1)) ==
        Rational(-1) * unit_element(Basis::F, parse_matrix("1", 1)));

  auto m = parse_matrix("0 1 1\n1 0 0\n0 1 0", 1);
  Element expected = f_sum({
                         "1 0 0\n0 1 1\n0 1 0",
                         "0 1 0\n1 0 1\n1 0 0",
                         "0 0 1\n1 1 0\n1 0 0",
                     }) -
                     f_sum({"0 1 1\n1 0 0\n0 1 0"});
  CHECK(antipode_F(m) == expected);

  Element twice = antipode_F(antipode_F(m));
  Element expected2 = f_sum({
                          "1 1 0\n1 0 0\n0 0 1",
                          "1 0 1\n1 0 0\n0 1 0",
                          "0 1 1\n0 1 0\n1 0 0",
                          "0 1 1\n1 0 0\n0 1 0",
                      }) -
                      f_sum({
                          "1 0 0\n0 1 1\n0 1 0",
                          "0 1 0\n1 0 1\n1 0 0",
                          "0 0 1\n1 1 0\n1 0 0",
                      });
  CHECK(twice == expected2);
  CHECK_FALSE(twice == unit_element(Basis::F, m));  // S is not an involution

  CHECK(antipode_F(PackedMatrix::empty(1)) ==
        unit_element(Basis::F, PackedMatrix::empty(1)));
  // Homogeneity: same bidegree on every term.
  for (const auto& [key, coeff] : antipode_F(m).terms()) {
    CHECK(key.size() == m.size());
    CHECK(key.weight() == m.weight());
  }
}

TEST_CASE("dual product and dual coproduct") {
  auto m1 = parse_matrix("0 1\n1 1", 1);
  auto m2 = parse_matrix("1 0\n0 1", 1);
  Element expected(Basis::FDual);
  for (auto* t : {
           "0 1 0 0\n1 1 0 0\n0 0 1 0\n0 0 0 1",
           "0 1 0 0\n0 0 1 0\n1 1 0 0\n0 0 0 1",
           "0 0 1 0\n0 1 0 0\n1 1 0 0\n0 0 0 1",
           "0 1 0 0\n0 0 1 0\n0 0 0 1\n1 1 0 0",
           "0 0 1 0\n0 1 0 0\n0 0 0 1\n1 1 0 0",
           "0 0 1 0\n0 0 0 1\n0 1 0 0\n1 1 0 0",
       })
    expected.add_term(parse_matrix(t, 1), 1);
  CHECK(dual_product_F(m1, m2) == expected);
  CHECK(dual_product_F(PackedMatrix::empty(1), m1).coefficient(m1) == 1);

  auto m = parse_matrix("0 0 1 0\n0 0 0 1\n1 0 0 0\n1 1 0 0", 1);
  Tensor dual_cop = f_tensor_sum(
      {
          {"0 0 1 0\n0 0 0 1\n1 0 0 0\n1 1 0 0", "empty"},
          {"1 0\n0 1", "1 0\n1 1"},
          {"1", "0 0 1\n1 0 0\n1 1 0"},
          {"empty", "0 0 1 0\n0 0 0 1\n1 0 0 0\n1 1 0 0"},
      },
      Basis::FDual);
  CHECK(dual_coproduct_F(m) == dual_cop);
}

TEST_CASE("duality transpose intertwines the structures") {
  CHECK(duality_transpose(unit_element(Basis::F, parse_matrix("1 0\n0 1", 1))) ==
        unit_element(Basis::FDual, parse_matrix("1 0\n0 1", 1)));

  for (int k = 1; k <= 2; ++k) {
    int max_n = k == 1 ? 3 : 2;
    std::vector<std::vector<PackedMatrix>> strata(max_n + 1);
    for (int n = 0; n <= max_n; ++n) strata[n] = enumerate_packed(k, n);
    for (int n1 = 0; n1 <= max_n; ++n1)
      for (int n2 = 0; n1 + n2 <= max_n; ++n2)
        for (const auto& a : strata[n1])
          for (const auto& b : strata[n2])
            CHECK(duality_transpose(product_F(a, b)) ==
                  dual_product_F(a.transpose(), b.transpose()));
    for (int n = 0; n <= max_n; ++n)
      for (const auto& m : strata[n])
        CHECK(duality_transpose(coproduct_F(m)) == dual_coproduct_F(m.transpose()));
  }
}

TEST_CASE("dendriform splitting") {
  auto m1 = parse_matrix("0 1\n1 1", 1);
  auto m2 = parse_matrix("1 0\n0 1", 1);
  Element left = f_sum({
      "0 0 0 1\n1 0 0 1\n0 1 0 0\n0 0 1 0",
      "0 0 0 1\n0 1 0 1\n1 0 0 0\n0 0 1 0",
      "0 0 0 1\n0 0 1 1\n1 0 0 0\n0 1 0 0",
  });
  Element right = f_sum({
      "0 1 0 0\n1 1 0 0\n0 0 1 0\n0 0 0 1",
      "0 0 1 0\n1 0 1 0\n0 1 0 0\n0 0 0 1",
      "0 0 1 0\n0 1 1 0\n1 0 0 0\n0 0 0 1",
  });
  CHECK(dendriform_left(m1, m2) == left);
  CHECK(dendriform_right(m1, m2) == right);
  CHECK_THROWS_AS(dendriform_left(PackedMatrix::empty(1), m1), std::invalid_argument);

  // Partition of the product for all pairs with n1 + n2 <= 4.
  std::vector<std::vector<PackedMatrix>> strata(4);
  for (int n = 1; n <= 3; ++n) strata[n] = enumerate_packed(1, n);
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n1 + n2 <= 4; ++n2)
      for (const auto& a : strata[n1])
        for (const auto& b : strata[n2]) {
          Element l = dendriform_left(a, b), r = dendriform_right(a, b);
          CHECK(l + r == product_F(a, b));
          for (const auto& [key, coeff] : l.terms()) CHECK(r.coefficient(key) == 0);
        }
}

TEST_CASE("codendriform splitting") {
  auto m = parse_matrix(
      "1 0 0 0 0 0\n0 1 1 0 0 0\n0 0 0 0 0 1\n0 0 0 1 0 0\n0 0 0 1 1 0\n0 0 1 0 0 0", 1);
  Tensor left = f_tensor_sum({
      {"1 0 0\n0 1 1\n0 0 1", "0 0 1\n1 0 0\n1 1 0"},
      {"1 0 0 0 0\n0 1 1 0 0\n0 0 0 1 0\n0 0 0 1 1\n0 0 1 0 0", "1"},
  });
  Tensor right = f_tensor_sum({
      {"1", "1 1 0 0 0\n0 0 0 0 1\n0 0 1 0 0\n0 0 1 1 0\n0 1 0 0 0"},
  });
  CHECK(codendriform_left(m) == left);
  CHECK(codendriform_right(m) == right);

  // Reduced-coproduct partition for all sizes <= 4.
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_packed(1, n)) {
      Tensor full = coproduct_F(x);
      Tensor sum = codendriform_left(x) + codendriform_right(x);
      sum.add_term({PackedMatrix::empty(1), x}, 1);
      sum.add_term({x, PackedMatrix::empty(1)}, 1);
      CHECK(sum == full);
    }
}

TEST_CASE("bigrading and multiplicity-freeness") {
  auto strata2 = enumerate_packed(1, 2);
  for (const auto& a : strata2)
    for (const auto& b : strata2) {
      Element p = product_F(a, b);
      CHECK(p.term_count() == 6);  // C(4, 2)
      for (const auto& [key, coeff] : p.terms()) {
        CHECK(coeff == 1);
        CHECK(key.size() == 4);
        CHECK(key.weight() == a.weight() + b.weight());
      }
    }
  for (const auto& m : enumerate_packed(1, 3))
    for (const auto& [pair, coeff] : coproduct_F(m).terms()) {
      CHECK(coeff == 1);
      CHECK(pair.first.size() + pair.second.size() == 3);
      CHECK(pair.first.weight() + pair.second.weight() == m.weight());
    }
}

TEST_CASE("axiom verification") {
  auto report = verify_axioms(1, 4);
  CHECK(report.all_ok());

  auto report2 = verify_axioms(2, 3);
  CHECK(report2.all_ok());

  auto faulty = verify_axioms(1, 3, HopfFault::DropShuffleTerm);
  CHECK_FALSE(faulty.all_ok());
  bool has_counterexample = false;
  for (const auto& c : faulty.checks)
    if (!c.ok && !c.counterexample.empty()) has_counterexample = true;
  CHECK(has_counterexample);
  CHECK(faulty.to_text().find("FAIL") != std::string::npos);
}
