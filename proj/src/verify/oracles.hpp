#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// None of these call into the library code they are used to check.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

// Carries produced by schoolbook binary addition.
inline std::uint64_t carries(mpz_class a, mpz_class b) {
  std::uint64_t count = 0;
  int carry = 0;
  while (a != 0 || b != 0 || carry != 0) {
    int s = static_cast<int>(mpz_tstbit(a.get_mpz_t(), 0)) + static_cast<int>(mpz_tstbit(b.get_mpz_t(), 0)) + carry;
    carry = s >= 2 ? 1 : 0;
    count += static_cast<std::uint64_t>(carry);
    a >>= 1;
    b >>= 1;
  }
  return count;
}

inline std::uint64_t ones(mpz_class a) {
  std::uint64_t count = 0;
  while (a != 0) {
    if (mpz_odd_p(a.get_mpz_t()) != 0) ++count;
    a >>= 1;
  }
  return count;
}

// Exponent of 2 in n! via Legendre's sum.
inline std::uint64_t legendre2(std::uint64_t n) {
  std::uint64_t v = 0;
  for (std::uint64_t p = 2; p <= n; p *= 2) v += n / p;
  return v;
}

// binom(n, k) by the multiplicative formula.
inline mpz_class binom(std::uint64_t n, std::uint64_t k) {
  mpz_class out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= static_cast<unsigned long>(n - k + i);
    out /= static_cast<unsigned long>(i);
  }
  return out;
}

inline std::uint64_t val2(const mpz_class& x) { return mpz_scan1(x.get_mpz_t(), 0); }

// Linear recurrence x_{n+1} = A x_n - x_{n-1}, n >= 0.
inline std::vector<mpz_class> lucas_run(const mpz_class& A, const mpz_class& x0, const mpz_class& x1, std::size_t n) {
  std::vector<mpz_class> out{x0, x1};
  while (out.size() <= n) out.push_back(A * out[out.size() - 1] - out[out.size() - 2]);
  out.resize(n + 1);
  return out;
}

}  // namespace oracle
