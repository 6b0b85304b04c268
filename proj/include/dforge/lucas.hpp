#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dforge/bigint.hpp"

namespace dforge::lucas {

struct LucasPair {
  BigInt A;
  std::int64_t n = 0;
  BigInt psi;
  BigInt chi;
};

// psi_0 = 0, psi_1 = 1, chi_0 = 2, chi_1 = A, x_{n+1} = A x_n - x_{n-1}.
BigInt psi(const BigInt& A, std::int64_t n);
BigInt chi(const BigInt& A, std::int64_t n);
LucasPair pair(const BigInt& A, std::int64_t n);

// Index given as a BigInt; throws ResourceError when it does not fit in 64 bits
// or the estimated result exceeds max_bits.
BigInt psi(const BigInt& A, const BigInt& n, std::uint64_t max_bits);

// psi_n(A) mod m in [0, m). Requires m >= 2 and n >= 0.
BigInt psi_mod(const BigInt& A, const BigInt& n, const BigInt& m);

// All solutions of X^2 - (A^2 - 4) Y^2 = 4 in naturals with X, Y <= bound, in increasing n.
std::vector<LucasPair> pell_enumerate(const BigInt& A, const BigInt& bound);

// Least n in [1, search_cap] with N | psi_n(A).
std::optional<std::uint64_t> apparition_rank(const BigInt& A, const BigInt& N, std::uint64_t search_cap);

// 3 W psi_B(A) == 2 (W^2 - 1) (mod 2A - 5), modulus taken in absolute value.
bool congruence_46_check(const BigInt& A, std::uint64_t B, const BigInt& W);

}  // namespace dforge::lucas
