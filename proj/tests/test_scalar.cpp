#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcat/scalar.hpp"

using namespace gcat;

TEST_CASE("rational construction and arithmetic") {
  Scalar a(1, 2), b(1, 3);
  CHECK((a + b) == Scalar(5, 6));
  CHECK((a * b) == Scalar(1, 6));
  CHECK((a - a).is_zero());
  CHECK(a.inverse() == Scalar(2));
  CHECK_THROWS_AS(Scalar::zero().inverse(), math_error);
}

TEST_CASE("i squared is minus one") {
  Scalar i = Scalar::root_of_unity(4, 1);
  CHECK(i * i == Scalar(-1));
  CHECK(i.conjugate() == -i);
}

TEST_CASE("fifth roots of unity sum to -1 without the trivial one") {
  Scalar s = Scalar::zero(5);
  for (long k = 1; k < 5; ++k) s += Scalar::root_of_unity(5, k);
  CHECK(s == Scalar(-1));
}

TEST_CASE("golden ratio phi = 1 + z5 + z5^4 satisfies phi^2 = phi + 1") {
  // (1+sqrt5)/2 = 1 + zeta5 + zeta5^4
  Scalar phi = Scalar(1) + Scalar::root_of_unity(5, 1) + Scalar::root_of_unity(5, 4);
  CHECK(phi * phi == phi + Scalar(1));
  CHECK((phi * phi.inverse()) == Scalar(1));
  // the derived value: phi^2 expands to phi + 1 exactly
  Scalar expect = phi + Scalar(1);
  CHECK(phi * phi == expect);
}

TEST_CASE("inverse of 1 + z5 + z5^4") {
  Scalar v = Scalar(1) + Scalar::root_of_unity(5, 1) + Scalar::root_of_unity(5, 4);
  CHECK(v * v.inverse() == Scalar(1));
}

TEST_CASE("cross-conductor arithmetic lifts to lcm") {
  Scalar i = Scalar::root_of_unity(4, 1);
  Scalar w = Scalar::root_of_unity(3, 1);
  Scalar prod = i * w;
  CHECK(prod.conductor() == 12);
  CHECK(prod == Scalar::root_of_unity(12, 3) * Scalar::root_of_unity(12, 4));
  CHECK(prod == Scalar::root_of_unity(12, 7));
}

TEST_CASE("minus one across conductors") {
  CHECK(Scalar::root_of_unity(2, 1) == Scalar(-1));
  CHECK(Scalar::root_of_unity(4, 2) == Scalar(-1));
  CHECK(Scalar::root_of_unity(6, 3) == Scalar(-1));
}

TEST_CASE("conjugation is a field automorphism and fixes rationals") {
  Scalar x = Scalar(3, 7) + Scalar(2) * Scalar::root_of_unity(8, 3);
  Scalar y = Scalar(1) - Scalar::root_of_unity(8, 1);
  CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
  CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
  CHECK(Scalar(5, 3).conjugate() == Scalar(5, 3));
}

TEST_CASE("serialization round trips exactly") {
  std::vector<Scalar> samples = {
      Scalar::zero(),
      Scalar(-7, 3),
      Scalar::root_of_unity(12, 5) * Scalar(3, 2) - Scalar(1, 5),
      Scalar(1) + Scalar::root_of_unity(5, 1) + Scalar::root_of_unity(5, 4),
      -Scalar::root_of_unity(8, 1),
  };
  for (const auto& s : samples) {
    CAPTURE(s.str());
    CHECK(Scalar::parse(s.str()) == s);
  }
}

TEST_CASE("parse accepts handwritten forms") {
  CHECK(Scalar::parse("1/2 + 3*z^2 (mod 8)") ==
        Scalar(1, 2) + Scalar(3) * Scalar::root_of_unity(8, 2));
  CHECK(Scalar::parse("-z (mod 4)") == -Scalar::root_of_unity(4, 1));
  CHECK(Scalar::parse("0 (mod 3)").is_zero());
  CHECK_THROWS_AS(Scalar::parse("nonsense"), parse_error);
}

TEST_CASE("field axioms on pseudo-random triples") {
  // deterministic LCG; exact equality everywhere
  unsigned long state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 200; ++trial) {
    long N = 12;
    auto rnd = [&]() {
      Scalar s = Scalar::zero(N);
      for (long j = 0; j < 4; ++j)
        s += Scalar(next(), 1 + std::abs(next()) % 3) * Scalar::root_of_unity(N, std::abs(next()) % N);
      return s;
    };
    Scalar a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("sqrt of rationals inside cyclotomic fields") {
  auto r5 = Scalar::sqrt_rational(Rat(5), 5);
  REQUIRE(r5.has_value());
  CHECK(*r5 * *r5 == Scalar(5));

  auto r2 = Scalar::sqrt_rational(Rat(2), 8);
  REQUIRE(r2.has_value());
  CHECK(*r2 * *r2 == Scalar(2));

  auto r3 = Scalar::sqrt_rational(Rat(3), 12);
  REQUIRE(r3.has_value());
  CHECK(*r3 * *r3 == Scalar(3));

  auto rm1 = Scalar::sqrt_rational(Rat(-1), 4);
  REQUIRE(rm1.has_value());
  CHECK(*rm1 * *rm1 == Scalar(-1));

  auto r94 = Scalar::sqrt_rational(Rat(9, 4), 1);
  REQUIRE(r94.has_value());
  CHECK(*r94 == Scalar(3, 2));

  CHECK_FALSE(Scalar::sqrt_rational(Rat(5), 4).has_value());
  CHECK_FALSE(Scalar::sqrt_rational(Rat(2), 4).has_value());
}

TEST_CASE("shrink finds the minimal conductor") {
  Scalar m1 = Scalar::root_of_unity(12, 6);  // = -1
  CHECK(m1.shrink().conductor() == 1);
  Scalar z3 = Scalar::root_of_unity(12, 4);  // = zeta_3
  CHECK(z3.shrink().conductor() == 3);
  CHECK(z3.shrink() == z3);
}

TEST_CASE("is_rational and rational_value") {
  Scalar s = Scalar::root_of_unity(5, 1) + Scalar::root_of_unity(5, 2) +
             Scalar::root_of_unity(5, 3) + Scalar::root_of_unity(5, 4);
  CHECK(s == Scalar(-1));
  CHECK(s.rational_value() == Rat(-1));
}
