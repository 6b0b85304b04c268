#include <cmath>
#include <random>
#include <set>
#include <string>

#include "dforge/combine.hpp"
#include "dforge/verify.hpp"

namespace dforge::verify {

using namespace dforge::combine;

namespace {

struct Tuple {
  std::vector<BigInt> A;
  BigInt S, T, R;

  std::string show() const {
    std::string out = "A = (";
    for (std::size_t j = 0; j < A.size(); ++j) out += (j ? ", " : "") + to_decimal(A[j]);
    return out + "), S = " + to_decimal(S) + ", T = " + to_decimal(T) + ", R = " + to_decimal(R);
  }
};

// Whole range scanned when the largest factor root is at most this.
constexpr long kFullScan = 64;
// Always scanned from 0, whatever the factor roots.
constexpr long kHeadScan = 32;
constexpr long kWindow = 2;

// Real roots of the 2^q linear factors S^2 n + c_eps, in floating point. Only used to place the scan.
std::vector<long double> factor_roots(const Tuple& t) {
  const std::size_t q = t.A.size();
  long double X = 1;
  for (const auto& a : t.A) X += a.get_d() * a.get_d();
  long double S2 = t.S.get_d() * t.S.get_d(), T2 = t.T.get_d() * t.T.get_d();
  long double scale = S2 * (2 * t.R.get_d() - 1);
  std::vector<long double> out;
  for (std::size_t eps = 0; eps < (std::size_t{1} << q); ++eps) {
    long double inner = T2 + std::pow(X, static_cast<long double>(q));
    long double xp = 1;
    for (std::size_t j = 0; j < q; ++j) {
      long double r = std::sqrt(t.A[j].get_d());
      inner += (((eps >> j) & 1U) != 0 ? -r : r) * xp;
      xp *= X;
    }
    out.push_back((scale * inner - T2) / S2);
  }
  return out;
}

// Checks one tuple against the lemma and a brute-force scan over n. Every
// evaluation also forms the full conjugate product and asserts its purity.
void check_tuple(CaseContext& c, const Tuple& t) {
  const std::size_t q = t.A.size();
  auto sol = m_q_solve(q, t.A, t.S, t.T, t.R);
  bool squares = true;
  for (const auto& a : t.A) squares = squares && is_square(a);
  bool expect = divides(t.S, t.T) && t.R > 0 && squares;
  c.check_lazy(sol.has_value() == expect, [&] { return "solver existence at " + t.show(); });

  auto roots = factor_roots(t);
  long top = 0;
  for (long double r : roots) {
    if (r >= 0) top = std::max(top, static_cast<long>(std::floor(r)) + 1);
  }
  std::set<long> scan;
  if (top <= kFullScan) {
    for (long n = 0; n <= top; ++n) scan.insert(n);
  } else {
    for (long n = 0; n <= kHeadScan; ++n) scan.insert(n);
    for (long double r : roots) {
      long base = static_cast<long>(std::floor(r));
      for (long n = base - kWindow; n <= base + kWindow; ++n) {
        if (n >= 0 && n <= top) scan.insert(n);
      }
    }
  }
  std::optional<long> first_root;
  for (long n : scan) {
    BigInt value = m_q_eval(q, t.A, t.S, t.T, t.R, n);
    SqrtRingElem<BigInt> prod = m_q_conjugate_product(q, t.A, t.S, t.T, t.R, n);
    c.check_lazy(prod.is_pure() && prod[0] == value, [&] { return "purity at n = " + std::to_string(n) + ", " + t.show(); });
    if (value == 0 && !first_root) first_root = n;
  }
  c.check_lazy(first_root.has_value() == sol.has_value(), [&] { return "scan disagrees with solver at " + t.show(); });
  if (first_root && sol) c.check_lazy(*sol == *first_root, [&] { return "smallest root differs at " + t.show(); });
}

void grid(CaseContext& c, std::size_t q) {
  std::vector<long> a(q, 0);
  while (true) {
    for (long S = -4; S <= 4; ++S) {
      if (S == 0) continue;
      for (long T = -8; T <= 8; ++T) {
        for (long R = -2; R <= 3; ++R) {
          Tuple t{std::vector<BigInt>(a.begin(), a.end()), S, T, R};
          check_tuple(c, t);
        }
      }
    }
    std::size_t k = 0;
    while (k < q && ++a[k] == 17) a[k++] = 0;
    if (k == q) break;
  }
}

BigInt product_with_roots(const std::vector<BigInt>& A, const BigInt& S, const BigInt& T, const BigInt& R,
                          const BigInt& n) {
  BigInt X = 1;
  for (const auto& a : A) X += a * a;
  BigInt out = 1;
  const std::size_t q = A.size();
  for (std::size_t eps = 0; eps < (std::size_t{1} << q); ++eps) {
    BigInt inner = T * T + pow(X, q);
    BigInt xp = 1;
    for (std::size_t j = 0; j < q; ++j) {
      BigInt r = isqrt(A[j]);
      inner += (((eps >> j) & 1U) != 0 ? -r : r) * xp;
      xp *= X;
    }
    out *= S * S * n + T * T - S * S * (2 * R - 1) * inner;
  }
  return out;
}

}  // namespace

std::vector<CaseSpec> combine_cases() {
  std::vector<CaseSpec> out;

  out.push_back({"examples", "worked values of M_1 and its least root", [](CaseContext& c) {
                   c.check(m_q_eval(1, {4}, 1, 0, 1, 15) == 0, "M_1 at n = 15");
                   c.check(m_q_eval(1, {4}, 1, 0, 1, 0) == 285, "M_1 at n = 0");
                   c.check(m_q_solve(1, {4}, 1, 0, 1) == BigInt(15), "least root 15");
                   c.check(!m_q_solve(1, {3}, 1, 0, 1).has_value(), "3 is not a square");
                 }});

  out.push_back({"oracle-q1", "q = 1: exhaustive grid A in [0, 16], S in [-4, 4] \\ {0}, T in [-8, 8], R in [-2, 3]",
                 [](CaseContext& c) { grid(c, 1); }});
  out.push_back({"oracle-q2", "q = 2: exhaustive grid as for q = 1", [](CaseContext& c) { grid(c, 2); }});

  out.push_back({"oracle-q3", "q = 3: max (10^4) random tuples from the same ranges", [](CaseContext& c) {
                   std::mt19937_64 rng(c.seed());
                   auto pick = [&](long lo, long hi) { return BigInt(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1))); };
                   const std::uint64_t samples = c.max_or(10000);
                   for (std::uint64_t i = 0; i < samples; ++i) {
                     Tuple t;
                     // Half the samples draw squares so that roots actually occur.
                     bool squares = rng() % 2 == 0;
                     for (int j = 0; j < 3; ++j) {
                       BigInt v = pick(0, 16);
                       t.A.push_back(squares ? BigInt(isqrt(v) * isqrt(v)) : v);
                     }
                     do {
                       t.S = pick(-4, 4);
                     } while (t.S == 0);
                     t.T = pick(-8, 8);
                     t.R = pick(-2, 3);
                     check_tuple(c, t);
                   }
                 }});

  out.push_back({"integer-roots", "with square A_j, m_q_eval equals the product over signs with integer roots", [](CaseContext& c) {
                   std::mt19937_64 rng(c.seed());
                   for (int i = 0; i < 2000; ++i) {
                     std::size_t q = 1 + rng() % 3;
                     std::vector<BigInt> A;
                     for (std::size_t j = 0; j < q; ++j) {
                       long r = static_cast<long>(rng() % 30);
                       A.emplace_back(r * r);
                     }
                     BigInt S = static_cast<long>(rng() % 9) - 4, T = static_cast<long>(rng() % 17) - 8;
                     BigInt R = static_cast<long>(rng() % 7) - 3, n = static_cast<long>(rng() % 1000);
                     c.check_lazy(m_q_eval(q, A, S, T, R, n) == product_with_roots(A, S, T, R, n),
                                  [&] { return Tuple{A, S, T, R}.show() + ", n = " + to_decimal(n); });
                   }
                 }});

  out.push_back({"expansion", "the expanded M_1, M_2 agree with evaluation", [](CaseContext& c) {
                   std::mt19937_64 rng(c.seed());
                   MultiPoly p1 = m_q_expand(1, 100000), p2 = m_q_expand(2, 1000000);
                   Degree one = BigInt(1);
                   c.check(m_q_degree({one}, one, one, one, one) == BigInt(total_degree(p1)), "degree rule, q = 1");
                   c.check(m_q_degree({one, one}, one, one, one, one) == BigInt(total_degree(p2)), "degree rule, q = 2");
                   auto r = [&](long lo, long hi) { return BigInt(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1))); };
                   for (int i = 0; i < 100; ++i) {
                     Point pt{{"A1", r(-20, 20)}, {"A2", r(-20, 20)}, {"S", r(-9, 9)}, {"T", r(-9, 9)}, {"R", r(-9, 9)}, {"n", r(0, 500)}};
                     c.check(evaluate(p1, pt) == m_q_eval(1, {pt["A1"]}, pt["S"], pt["T"], pt["R"], pt["n"]), "M_1 expansion");
                     c.check(evaluate(p2, pt) == m_q_eval(2, {pt["A1"], pt["A2"]}, pt["S"], pt["T"], pt["R"], pt["n"]), "M_2 expansion");
                   }
                 }});

  return out;
}

}  // namespace dforge::verify
