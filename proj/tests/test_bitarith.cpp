#include "doctest.h"

#include "dforge/bitarith.hpp"
#include "dforge/errors.hpp"
#include "oracles.hpp"

using namespace dforge;
using namespace dforge::bitarith;

TEST_CASE("sigma examples") {
  CHECK(sigma(0).value == 0);
  CHECK(sigma(7).value == 3);
  CHECK(sigma(12).value == 2);
  CHECK_THROWS_AS(sigma(-1), DomainError);
}

TEST_CASE("tau examples") {
  CHECK(tau(5, 0).value == 0);
  CHECK(tau(3, 1).value == 2);
  CHECK(tau(5, 2).value == 0);
  CHECK_THROWS_AS(tau(-1, 2), DomainError);
}

TEST_CASE("central binomial valuation examples") {
  CHECK(central_binom_val2(0).value == 0);
  CHECK(central_binom_val2(3).value == 2);
  CHECK(central_binom_val2(8).value == 1);
  CHECK(central_binom_divisible_by_pow2(3, 2));
  CHECK_FALSE(central_binom_divisible_by_pow2(3, 3));
}

TEST_CASE("sigma of 2^k - 1 is k") {
  for (unsigned k = 0; k <= 64; ++k) CHECK(sigma(pow2(k) - 1).value == k);
}

TEST_CASE("complementary digit sums") {
  for (unsigned k = 0; k <= 12; ++k) {
    BigInt top = pow2(k) - 1;
    for (long a = 0; a < (1L << k); ++a) CHECK(sigma(a).value + sigma(top - a).value == k);
  }
}

TEST_CASE("digit sum splits across a power of two") {
  for (unsigned k = 0; k <= 10; ++k) {
    BigInt N = pow2(k);
    for (long a = 0; a < (1L << k); a += 3) {
      for (long b = 0; b < 200; b += 7) CHECK(sigma(a + b * N).value == sigma(a).value + sigma(b).value);
    }
  }
}

TEST_CASE("tau counts carries of schoolbook addition") {
  for (long a = 0; a < 300; ++a) {
    for (long b = 0; b < 300; b += 5) CHECK(tau(a, b).value == oracle::carries(a, b));
  }
}

TEST_CASE("carry-free addition splits at a power of two") {
  for (unsigned k = 0; k <= 3; ++k) {
    long top = 1L << k;
    for (long a = 0; a < top; ++a)
      for (long b = 0; b < top; ++b)
        for (long c = 0; c < 32; c += 3)
          for (long d = 0; d < 32; d += 5) {
            bool lhs = tau(a, b).value == 0 && tau(c, d).value == 0;
            bool rhs = tau(a + c * top, b + d * top).value == 0;
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("tau(N-1, a) = 0 iff N divides a") {
  for (long N = 1; N <= 64; N *= 2) {
    for (long a = 0; a <= 1024; ++a) CHECK((tau(N - 1, a).value == 0) == (a % N == 0));
  }
}

TEST_CASE("central binomial valuation against direct binomials") {
  for (std::uint64_t x = 0; x <= 300; ++x) {
    CHECK(central_binom_val2(x).value == oracle::val2(oracle::binom(2 * x, x)));
    CHECK(central_binom_val2(x).value == oracle::legendre2(2 * x) - 2 * oracle::legendre2(x));
  }
}
