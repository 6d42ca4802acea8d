#include <doctest.h>

#include "gen.hpp"
#include "kshadow/linalg.hpp"

using namespace kshadow;

namespace {
LaurentPoly X(int a) { return LaurentPoly::monomial(LatticeVector{a}); }
}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  testgen::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = testgen::laurent(rng, 2, 4, 2), b = testgen::laurent(rng, 2, 4, 2), c = testgen::laurent(rng, 2, 3, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly(2));
    CHECK(a * LaurentPoly::constant(2, 1) == a);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    CHECK(a.inverted().inverted() == a);
  }
}

TEST_CASE("exact division") {
  // e^a - e^-a = -e^-a (1 - e^a)(1 + e^a)
  const auto f = X(1) - X(-1);
  const auto q = exact_divide(f, LaurentPoly::one_minus(LatticeVector{1}));
  REQUIRE(q.has_value());
  CHECK(*q == -(X(-1) + X(0)));
  CHECK_FALSE(exact_divide(X(0) + X(2), LaurentPoly::one_minus(LatticeVector{1})).has_value());
  CHECK_THROWS_AS(divide_exact(X(0) + X(2), LaurentPoly::one_minus(LatticeVector{1})), std::domain_error);

  testgen::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto a = testgen::laurent(rng, 2, 4, 2);
    auto d = testgen::laurent(rng, 2, 3, 1);
    if (d.is_zero()) continue;
    const auto back = exact_divide(a * d, d);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
}

TEST_CASE("units and monomials") {
  CHECK(X(3).is_unit());
  CHECK((-X(-2)).is_unit());
  CHECK_FALSE((X(0) + X(1)).is_unit());
  CHECK_FALSE(LaurentPoly(1).is_unit());
  CHECK(X(2).shifted(LatticeVector{-2}) == X(0));
  CHECK((X(1) + X(-1)).coefficient(LatticeVector{1}) == 1);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  testgen::Rng rng(17);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      LaurentMatrix m(n, std::vector<LaurentPoly>(n));
      for (auto& row : m)
        for (auto& e : row) e = testgen::laurent(rng, 1, 2, 1, 2);
      // Leibniz formula over all permutations.
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      LaurentPoly det(1);
      do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
        LaurentPoly term = LaurentPoly::constant(1, inv % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term = term * m[i][p[i]];
        det += term;
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(determinant(m) == det);
      CHECK(fraction_field_rank(m) == (det.is_zero() ? fraction_field_rank(m) : n));
    }
}

TEST_CASE("fraction field rank") {
  const auto one = X(0), x = X(1);
  CHECK(fraction_field_rank({{one, x}, {x, x * x}}) == 1);
  CHECK(fraction_field_rank({{one, x}, {x, one}}) == 2);
  CHECK(fraction_field_rank({{LaurentPoly(1), LaurentPoly(1)}}) == 0);
  CHECK(fraction_field_rank({{one, x, x}, {x, x * x, one}}) == 2);
}
