#include <doctest.h>

#include <random>

#include "klnet/qpoly.hpp"

using namespace klnet;

namespace {

QPoly poly(std::initializer_list<int> coeffs) {
  std::vector<Int> c;
  for (int x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}

QPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-max_abs, max_abs);
  std::vector<Int> c(deg(rng) + 1);
  for (Int& x : c) x = coeff(rng);
  return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("qpoly basics") {
  CHECK(QPoly{}.is_zero());
  CHECK(QPoly{}.degree() == -1);
  CHECK(poly({1, 0, 0}).degree() == 0);  // trailing zeros stripped
  CHECK(poly({0, 0}).is_zero());
  CHECK((poly({1, 1}) * poly({1, 1})) == poly({1, 2, 1}));
  CHECK((poly({3, 1}) + QPoly{}) == poly({3, 1}));
  CHECK(poly({1, 2, 1}).eval_at_one() == 4);
  CHECK(poly({1, 0, 1}).str() == "1 + q^2");
  CHECK(poly({1, 2, 1}).str() == "1 + 2q + q^2");
  CHECK(poly({0, 1}).str() == "q");
  CHECK(poly({1, -1}).str() == "1 - q");
  CHECK(QPoly{}.str() == "0");
  CHECK(poly({2}).shifted(3) == poly({0, 0, 0, 2}));
}

TEST_CASE("q-integers and q-factorials") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == QPoly::one());
  CHECK(q_int(2) == poly({1, 1}));
  CHECK(q_factorial(0) == QPoly::one());
  CHECK(q_factorial(1) == QPoly::one());
  CHECK(q_factorial(2) == poly({1, 1}));
  CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
  // [2]_q * [2]_q, the divisor for a pair of merged double edges
  CHECK((q_int(2) * q_int(2)) == poly({1, 2, 1}));

  Int factorial = 1;
  for (int p = 1; p <= 8; ++p) {
    factorial *= p;
    CHECK(q_factorial(p).eval_at_one() == factorial);
  }
}

TEST_CASE("exact division") {
  CHECK(*div_exact(poly({1, 2, 1}), poly({1, 1})) == poly({1, 1}));
  CHECK(*div_exact(poly({5}), QPoly::one()) == poly({5}));

  QPoly rem;
  CHECK(!div_exact(poly({1, 0, 1}), poly({1, 1}), &rem).has_value());
  CHECK(rem == poly({2}));  // 1+q^2 = (q-1)(q+1) + 2

  // Integer-level failure: leading coefficient does not divide.
  CHECK(!div_exact(poly({0, 1}), poly({2}), nullptr).has_value());
  CHECK_THROWS_AS(div_exact(QPoly::one(), QPoly{}), std::invalid_argument);
}

TEST_CASE("ring axioms and division round-trip on random polynomials") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 300; ++iter) {
    QPoly a = random_poly(rng, 5, 6), b = random_poly(rng, 5, 6), c = random_poly(rng, 5, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) {
      auto quotient = div_exact(a * b, b);
      REQUIRE(quotient.has_value());
      CHECK(*quotient == a);
    }
  }
}
