#include <doctest.h>

#include "qpoly.hpp"
#include "series.hpp"

using namespace pmh;

TEST_CASE("q-integers and q-factorials") {
  CHECK(q_int(3) == QPoly({1, 1, 1}));
  CHECK(q_int(0).is_zero());
  CHECK(q_factorial(0) == QPoly(BigInt(1)));
  CHECK(q_factorial(3).degree() == 3);          // n(n-1)/2
  CHECK(q_factorial(3).eval(1) == 6);           // ordinary factorial at q = 1
  CHECK(q_factorial(4).degree() == 6);
}

TEST_CASE("q-multinomials") {
  CHECK(q_multinomial(2, 1, 1) == QPoly({1, 1}));
  CHECK(q_multinomial(3, 0, 3) == QPoly(BigInt(1)));

  // Pascal recurrence with the q-shift, up to n = 8.
  for (int n = 1; n <= 8; ++n)
    for (int n1 = 0; n1 <= n; ++n1) {
      int n2 = n - n1;
      QPoly lhs = q_multinomial(n, n1, n2);
      QPoly rhs;
      if (n1 >= 1) rhs += q_multinomial(n - 1, n1 - 1, n2);
      if (n2 >= 1) rhs += QPoly::monomial(n1) * q_multinomial(n - 1, n1, n2 - 1);
      CHECK(lhs == rhs);
      // q = 1 recovers the binomial coefficient.
      CHECK(lhs.eval(1) == binomial(n, n1));
    }
  CHECK_THROWS_AS(q_multinomial(3, 1, 1), std::invalid_argument);
}

TEST_CASE("exact division guards") {
  CHECK_THROWS_AS(q_int(3).divide_exact(q_int(2)), std::domain_error);
  CHECK((q_int(2) * q_int(3)).divide_exact(q_int(3)) == q_int(2));
}

TEST_CASE("printing") {
  CHECK(q_int(3).str() == "1 + q + q^2");
  CHECK(QPoly().str() == "0");
  CHECK((QPoly(BigInt(-1)) + QPoly::monomial(2, 2)).str() == "-1 + 2*q^2");
}

TEST_CASE("generator and totally-primitive series") {
  DimSeries h({1, 1, 7, 265, 41503});
  CHECK(series_generators(h) == DimSeries({0, 1, 6, 252, 40944}));
  CHECK(series_totally_primitive(h) == DimSeries({0, 1, 5, 240, 40404}));

  DimSeries asm_h({1, 1, 2, 7, 42, 429});
  CHECK(series_generators(asm_h) == DimSeries({0, 1, 1, 4, 29, 343}));
  CHECK(series_totally_primitive(asm_h) == DimSeries({0, 1, 0, 2, 20, 277}));

  DimSeries weight_h = hilbert_series(1, Grading::Weight, 8);
  auto g = series_generators(weight_h);
  const char* expected_g[] = {"0", "1", "1", "7", "51", "497", "5865", "81305", "1293333"};
  for (int i = 0; i <= 8; ++i) CHECK(g.at(i) == BigInt(expected_g[i]));

  // Reconstruction: 1 / (1 - G) = H up to truncation.
  std::vector<BigInt> one_minus_g(static_cast<std::size_t>(g.order()) + 1);
  one_minus_g[0] = 1;
  for (int i = 1; i <= g.order(); ++i) one_minus_g[i] = -g.at(i);
  CHECK(DimSeries(one_minus_g).reciprocal() == weight_h);
}

TEST_CASE("hilbert series from the counting formulas") {
  CHECK(hilbert_series(1, Grading::Size, 4) == DimSeries({1, 1, 7, 265, 41503}));
  CHECK(hilbert_series(2, Grading::Weight, 5) == DimSeries({1, 2, 8, 80, 1120, 20544}));
  CHECK_THROWS_AS(series_generators(DimSeries({2, 1})), std::invalid_argument);
}
