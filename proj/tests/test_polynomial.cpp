#include <doctest.h>

#include <random>

#include "krstrata/polynomial.hpp"

using krstrata::BigInt;
using krstrata::IntPolynomial;

TEST_SUITE("polynomial") {

TEST_CASE("normal form") {
  CHECK(IntPolynomial().is_zero());
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial(std::vector<BigInt>{1, 2, 0, 0}).degree() == 1);
  CHECK(IntPolynomial(0).is_zero());
  CHECK(IntPolynomial::q_minus_one() == IntPolynomial(std::vector<BigInt>{-1, 1}));
  CHECK(IntPolynomial::monomial(3, 2).coefficient(3) == 2);
  CHECK(IntPolynomial::monomial(3).coefficient(7) == 0);
  CHECK(IntPolynomial::monomial(2).is_monic());
  CHECK_FALSE(IntPolynomial(std::vector<BigInt>{1, 2}).is_monic());
}

TEST_CASE("printing") {
  CHECK(IntPolynomial(std::vector<BigInt>{1, 2}).to_string() == "2q + 1");
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial(std::vector<BigInt>{1, 3, 5, 4}).to_string() == "4q^3 + 5q^2 + 3q + 1");
  CHECK(IntPolynomial::q_minus_one().to_string() == "q - 1");
  CHECK((-IntPolynomial::monomial(2)).to_string() == "-q^2");
}

TEST_CASE("ring operations agree with evaluation") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-20, 20);
  auto random_poly = [&] {
    std::vector<BigInt> c(1 + rng() % 6);
    for (auto& x : c) x = coef(rng);
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly();
    const auto b = random_poly();
    for (int x : {-3, 0, 2, 7}) {
      CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
      CHECK((a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x));
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    }
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("exact big coefficients") {
  auto p = IntPolynomial::q_minus_one();
  IntPolynomial power(1);
  for (int k = 0; k < 80; ++k) power *= p;
  BigInt expected = 1;
  for (int k = 0; k < 80; ++k) expected *= 1000;  // (1001 - 1)^80
  CHECK(power.evaluate(1001) == expected);
  CHECK(power.coefficient(40) != 0);
}

}  // TEST_SUITE
