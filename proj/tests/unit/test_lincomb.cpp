#include <doctest.h>

#include "lincomb.hpp"
#include "order.hpp"

using namespace pmh;

TEST_CASE("element arithmetic is exact") {
  auto m = parse_matrix("1 1\n1 0", 1);
  Element f = unit_element(Basis::F, m);

  Element minus = f;
  minus *= Rational(-1);
  CHECK((f + minus).is_zero());

  Element half = f;
  half *= Rational(1, 2);
  CHECK(half + half == f);

  Element e(Basis::E);
  CHECK_THROWS_AS(f + e, std::invalid_argument);

  // Group laws on a small random-ish sample.
  auto pool = enumerate_packed(1, 2);
  Element a(Basis::F), b(Basis::F);
  for (std::size_t i = 0; i < pool.size(); ++i)
    (i % 2 ? a : b).add_term(pool[i], Rational(static_cast<int>(i) - 3, 7));
  CHECK(a + b == b + a);
  CHECK((a - a).is_zero());
  Element scaled = a + a;
  Element twice = a;
  twice *= 2;
  CHECK(scaled == twice);
}

TEST_CASE("tensors") {
  auto m = parse_matrix("1", 1);
  Tensor t = tensor(unit_element(Basis::F, PackedMatrix::empty(1)), unit_element(Basis::F, m));
  CHECK(t.term_count() == 1);
  CHECK(t.coefficient({PackedMatrix::empty(1), m}) == 1);
}

TEST_CASE("serialization") {
  auto m = parse_matrix("1 0\n0 1", 1);
  Element f = unit_element(Basis::F, m);
  f *= Rational(-3, 2);
  CHECK(serialize(f) ==
        R"({"basis":"F","terms":[{"coeff":"-3/2","matrix":"1 0\n0 1"}]})");
  Tensor t = tensor(unit_element(Basis::F, m), unit_element(Basis::F, PackedMatrix::empty(1)));
  CHECK(serialize(t) ==
        R"({"basis":"F","terms":[{"coeff":"1","left":"1 0\n0 1","right":"empty"}]})");
}

TEST_CASE("triangular inversion") {
  auto component = enumerate_packed(1, 2);

  SUBCASE("identity expansion") {
    auto inv = triangular_invert([](const PackedMatrix& m) { return unit_element(Basis::F, m); },
                                 component, canonical_less);
    for (std::size_t i = 0; i < inv.size(); ++i)
      for (std::size_t j = 0; j < inv.size(); ++j)
        CHECK(inv[i][j] == (i == j ? 1 : 0));
  }

  SUBCASE("elementary-to-fundamental on the size-2 component") {
    // E is supported on canonically smaller keys, so order descending.
    auto inv = triangular_invert(E_expand, component, [](const PackedMatrix& a,
                                                         const PackedMatrix& b) {
      return canonical_less(b, a);
    });
    REQUIRE(inv.size() == 7);
    for (const auto& row : inv)
      for (const auto& v : row)
        CHECK((v == 0 || v == 1 || v == -1));
  }

  SUBCASE("single connected key of size 1") {
    std::vector<PackedMatrix> tiny{parse_matrix("1", 1)};
    auto inv = triangular_invert(E_expand, tiny, canonical_less);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0][0] == 1);
  }

  SUBCASE("non-triangular input is reported") {
    auto shifted = [&](const PackedMatrix& m) {
      // Maps every key to a fixed element: not triangular.
      Element e(Basis::F);
      e.add_term(component.front(), 1);
      e.add_term(component.back(), 1);
      return e;
    };
    CHECK_THROWS_AS(triangular_invert(shifted, component, canonical_less),
                    std::invalid_argument);
  }
}
