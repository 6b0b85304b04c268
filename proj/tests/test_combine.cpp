#include "doctest.h"

#include <random>

#include "dforge/combine.hpp"
#include "dforge/errors.hpp"
#include "dforge/sqrt_ring.hpp"

using namespace dforge;
using namespace dforge::combine;

namespace {

// Product over sign patterns using integer square roots; A_j must be squares.
BigInt product_with_roots(const std::vector<BigInt>& A, const BigInt& S, const BigInt& T, const BigInt& R,
                          const BigInt& n) {
  BigInt X = 1;
  for (const auto& a : A) X += a * a;
  BigInt out = 1;
  std::size_t q = A.size();
  for (std::size_t eps = 0; eps < (std::size_t{1} << q); ++eps) {
    BigInt inner = T * T;
    BigInt xp = 1;
    for (std::size_t j = 0; j < q; ++j) xp *= X;
    inner += xp;
    xp = 1;
    for (std::size_t j = 0; j < q; ++j) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), A[j].get_mpz_t());
      inner += ((eps >> j) & 1U ? -r : r) * xp;
      xp *= X;
    }
    out *= S * S * n + T * T - S * S * (2 * R - 1) * inner;
  }
  return out;
}

}  // namespace

TEST_CASE("m_q_eval examples") {
  CHECK(m_q_eval(1, {4}, 1, 0, 1, 15) == 0);
  CHECK(m_q_eval(1, {4}, 1, 0, 1, 0) == 285);
  for (long n = -5; n < 20; ++n) CHECK(m_q_eval(1, {0}, 1, 0, 1, n) == (n - 1) * (n - 1));
  CHECK_THROWS_AS(m_q_eval(4, {1, 1, 1, 1}, 1, 0, 1, 0), DomainError);
  CHECK_THROWS_AS(m_q_eval(2, {1}, 1, 0, 1, 0), DomainError);
}

TEST_CASE("m_q_solve examples") {
  CHECK(m_q_solve(1, {4}, 1, 0, 1) == BigInt(15));
  CHECK_FALSE(m_q_solve(1, {3}, 1, 0, 1).has_value());
  for (long n = 0; n <= 10000; ++n) REQUIRE(m_q_eval(1, {3}, 1, 0, 1, n) != 0);
  CHECK_FALSE(m_q_solve(1, {4}, 2, 1, 1).has_value());
  CHECK_THROWS_AS(m_q_solve(1, {4}, 0, 1, 1), DomainError);
}

TEST_CASE("extension ring agrees with integer roots on squares") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::size_t q = 1 + rng() % 3;
    std::vector<BigInt> A;
    for (std::size_t j = 0; j < q; ++j) {
      long r = static_cast<long>(rng() % 30);
      A.push_back(r * r);
    }
    BigInt S = static_cast<long>(rng() % 9) - 4;
    BigInt T = static_cast<long>(rng() % 17) - 8;
    BigInt R = static_cast<long>(rng() % 7) - 3;
    BigInt n = static_cast<long>(rng() % 1000);
    CHECK(m_q_eval(q, A, S, T, R, n) == product_with_roots(A, S, T, R, n));
  }
}

TEST_CASE("solver returns roots") {
  for (long a = 0; a <= 16; ++a)
    for (long S = -3; S <= 3; ++S) {
      if (S == 0) continue;
      for (long T = -4; T <= 4; ++T)
        for (long R = -1; R <= 2; ++R) {
          auto n = m_q_solve(1, {a}, S, T, R);
          bool expect = T % S == 0 && R > 0 && is_square(a);
          CHECK(n.has_value() == expect);
          if (n) CHECK(m_q_eval(1, {a}, S, T, R, *n) == 0);
        }
    }
}

TEST_CASE("expansion agrees with evaluation") {
  std::mt19937_64 rng(9);
  MultiPoly p1 = m_q_expand(1, 100000);
  MultiPoly p2 = m_q_expand(2, 1000000);
  for (int i = 0; i < 100; ++i) {
    auto r = [&](long lo, long hi) { return BigInt(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1))); };
    Point pt{{"A1", r(-20, 20)}, {"A2", r(-20, 20)}, {"S", r(-9, 9)}, {"T", r(-9, 9)}, {"R", r(-9, 9)}, {"n", r(0, 500)}};
    CHECK(evaluate(p1, pt) == m_q_eval(1, {pt["A1"]}, pt["S"], pt["T"], pt["R"], pt["n"]));
    CHECK(evaluate(p2, pt) == m_q_eval(2, {pt["A1"], pt["A2"]}, pt["S"], pt["T"], pt["R"], pt["n"]));
  }
  Point at{{"A1", 4}, {"S", 1}, {"T", 0}, {"R", 1}};
  MultiPoly n = MultiPoly::variable("n");
  MultiPoly sub = substitute(p1, {{"A1", MultiPoly(4)}, {"S", MultiPoly(1)}, {"T", MultiPoly(0)}, {"R", MultiPoly(1)}});
  CHECK(sub == (n - 19) * (n - 15));
  CHECK(total_degree(sub) == 2);
  CHECK_THROWS_AS(m_q_expand(2, 10), ResourceError);
}

TEST_CASE("degree rule matches expansion") {
  MultiPoly p1 = m_q_expand(1, 100000);
  MultiPoly p2 = m_q_expand(2, 1000000);
  Degree one = BigInt(1);
  CHECK(m_q_degree({one}, one, one, one, one) == BigInt(total_degree(p1)));
  CHECK(m_q_degree({one, one}, one, one, one, one) == BigInt(total_degree(p2)));
}

TEST_CASE("sqrt ring purity of conjugate products") {
  SqrtRing<BigInt> ring({2, 3});
  SqrtRingElem<BigInt> x = ring.scalar(5);
  x[1] = 1;
  x[3] = 2;
  SqrtRingElem<BigInt> y = ring.scalar(5);
  y[1] = -1;
  y[3] = -2;
  SqrtRingElem<BigInt> p = ring.mul(x, y);
  CHECK(p[0] == 25 - 2 - 4 * 6);
  CHECK(p.is_pure() == (p[2] == 0));
}

TEST_CASE("norm tower equals the product over all sign changes") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-50, 50);
  for (std::size_t q = 1; q <= 3; ++q) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<BigInt> A;
      for (std::size_t j = 0; j < q; ++j) A.push_back(d(rng));
      SqrtRing<BigInt> ring(A);
      SqrtRingElem<BigInt> x(q);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = d(rng);
      std::vector<SqrtRingElem<BigInt>> conj;
      for (std::size_t eps = 0; eps < x.size(); ++eps) {
        SqrtRingElem<BigInt> c = x;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (__builtin_popcountll(k & eps) % 2 == 1) c[k] = -c[k];
        }
        conj.push_back(std::move(c));
      }
      SqrtRingElem<BigInt> p = ring.product(conj);
      REQUIRE(p.is_pure());
      CHECK(ring.norm(x) == p[0]);
    }
  }
}

TEST_CASE("ring squaring matches multiplication") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int trial = 0; trial < 100; ++trial) {
    SqrtRing<BigInt> ring({d(rng), d(rng), d(rng)});
    SqrtRingElem<BigInt> x(3);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = d(rng);
    SqrtRingElem<BigInt> s = ring.square(x), m = ring.mul(x, x);
    for (std::size_t k = 0; k < x.size(); ++k) CHECK(s[k] == m[k]);
  }
}
