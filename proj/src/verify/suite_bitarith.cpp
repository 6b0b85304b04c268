#include <random>
#include <string>

#include "dforge/bitarith.hpp"
#include "dforge/verify.hpp"
#include "oracles.hpp"

namespace dforge::verify {

using namespace dforge::bitarith;

namespace {

std::string s(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::vector<CaseSpec> bitarith_cases() {
  std::vector<CaseSpec> out;

  out.push_back({"sigma-mersenne", "sigma(2^k - 1) = k for k <= 64", [](CaseContext& c) {
                   for (unsigned k = 0; k <= 64; ++k) c.check(sigma(pow2(k) - 1).value == k, "k = " + s(k));
                 }});

  out.push_back({"sigma-complement", "sigma(a) + sigma(2^k - 1 - a) = k for a < 2^k, k <= 16", [](CaseContext& c) {
                   for (unsigned k = 0; k <= 16; ++k) {
                     BigInt top = pow2(k) - 1;
                     for (unsigned long a = 0; a < (1UL << k); ++a) {
                       c.check_lazy(sigma(a).value + sigma(top - a).value == k, [&] { return "k = " + s(k) + ", a = " + s(a); });
                     }
                   }
                 }});

  out.push_back({"sigma-split", "sigma(a + bN) = sigma(a) + sigma(b) for N a power of two, a < N", [](CaseContext& c) {
                   std::mt19937_64 rng(c.seed());
                   for (unsigned k = 0; k <= 12; ++k) {
                     BigInt N = pow2(k);
                     for (int t = 0; t < 2000; ++t) {
                       unsigned long a = rng() % (1UL << k);
                       unsigned long b = rng() % 100000;
                       c.check_lazy(sigma(a + b * N).value == sigma(a).value + sigma(b).value,
                                    [&] { return "k = " + s(k) + ", a = " + s(a) + ", b = " + s(b); });
                     }
                   }
                 }});

  out.push_back({"tau-carries", "tau equals the carry count of schoolbook addition", [](CaseContext& c) {
                   for (unsigned long a = 0; a < 512; ++a) {
                     for (unsigned long b = 0; b < 512; b += 3) {
                       c.check_lazy(tau(a, b).value == oracle::carries(a, b), [&] { return "a = " + s(a) + ", b = " + s(b); });
                     }
                   }
                 }});

  out.push_back({"tau-split", "carry-free addition splits at 2^k, k <= 5, c, d < 32", [](CaseContext& c) {
                   for (unsigned k = 0; k <= 5; ++k) {
                     unsigned long top = 1UL << k;
                     for (unsigned long a = 0; a < top; ++a)
                       for (unsigned long b = 0; b < top; ++b)
                         for (unsigned long x = 0; x < 32; ++x)
                           for (unsigned long y = 0; y < 32; ++y) {
                             bool lhs = oracle::carries(a, b) == 0 && oracle::carries(x, y) == 0;
                             bool rhs = tau(a + x * top, b + y * top).value == 0;
                             c.check_lazy(lhs == rhs, [&] { return "k = " + s(k) + ", a = " + s(a) + ", b = " + s(b); });
                           }
                   }
                 }});

  out.push_back({"tau-divisibility", "tau(N - 1, a) = 0 iff N | a, N <= 256, a <= 4096", [](CaseContext& c) {
                   for (unsigned long N = 1; N <= 256; N *= 2) {
                     for (unsigned long a = 0; a <= 4096; ++a) {
                       c.check_lazy((tau(N - 1, a).value == 0) == (a % N == 0), [&] { return "N = " + s(N) + ", a = " + s(a); });
                     }
                   }
                 }});

  out.push_back({"central-binom", "val2(binom(2X, X)) = sigma(X) by direct binomials, X <= max (4096)", [](CaseContext& c) {
                   const std::uint64_t top = c.max_or(4096);
                   for (std::uint64_t x = 0; x <= top; ++x) {
                     BigInt direct;
                     mpz_bin_uiui(direct.get_mpz_t(), 2 * x, x);
                     std::uint64_t v = oracle::val2(direct);
                     c.check_lazy(central_binom_val2(x).value == v, [&] { return "X = " + s(x); });
                     c.check_lazy(v == oracle::legendre2(2 * x) - 2 * oracle::legendre2(x), [&] { return "Legendre, X = " + s(x); });
                   }
                 }});

  out.push_back({"tau-binom", "tau(S, T) = 0 iff N^2 | binom(2(N-1)R, (N-1)R), N in {2, 4, 8, 16}", [](CaseContext& c) {
                   for (unsigned long N : {2UL, 4UL, 8UL, 16UL}) {
                     std::uint64_t k = 0;
                     while ((1UL << k) < N) ++k;
                     for (unsigned long S = 0; S < N; ++S) {
                       for (unsigned long T = 0; T < N; ++T) {
                         unsigned long R = (S + T + 1) * N + T + 1;
                         unsigned long m = (N - 1) * R;
                         bool carry_free = tau(S, T).value == 0;
                         bool sigma_path = central_binom_divisible_by_pow2(m, 2 * k);
                         c.check_lazy(carry_free == sigma_path, [&] { return "N = " + s(N) + ", S = " + s(S) + ", T = " + s(T); });
                         if (N <= 8) {
                           BigInt direct = oracle::binom(2 * m, m);
                           bool divisible = direct % BigInt(N * N) == 0;
                           c.check_lazy(divisible == carry_free,
                                        [&] { return "direct, N = " + s(N) + ", S = " + s(S) + ", T = " + s(T); });
                         }
                       }
                     }
                   }
                 }});

  return out;
}

}  // namespace dforge::verify
