#pragma once

#include <compare>
#include <cstdint>

#include "dforge/bigint.hpp"

namespace dforge::bitarith {

// A count of binary digits or carries.
struct BitCount {
  std::uint64_t value = 0;

  friend auto operator<=>(const BitCount&, const BitCount&) = default;
};

/// Number of 1-bits of a >= 0.
BitCount sigma(const BigInt& a);

/// Carries produced when adding a and b in base 2, via sigma(a)+sigma(b)-sigma(a+b).
BitCount tau(const BigInt& a, const BigInt& b);

/// Exponent of 2 in binom(2X, X). Equal to sigma(X); no binomial is formed.
BitCount central_binom_val2(const BigInt& x);

/// Whether 2^k divides binom(2X, X), decided through sigma(X) >= k.
bool central_binom_divisible_by_pow2(const BigInt& x, std::uint64_t k);

}  // namespace dforge::bitarith
