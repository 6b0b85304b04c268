#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dforge {

using BigInt = mpz_class;

BigInt from_decimal(std::string_view text);
inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt pow2(std::uint64_t exponent);

// Number of binary digits of |x|; 0 for x = 0.
std::uint64_t bit_length(const BigInt& x);

bool is_power_of_two(const BigInt& x);
// Exponent k with x = 2^k; x must be a power of two.
std::uint64_t log2_exact(const BigInt& x);

bool is_square(const BigInt& x);
BigInt isqrt(const BigInt& x);

// n | m with the |n|-convention: 0 divides only 0.
bool divides(const BigInt& n, const BigInt& m);

// Floor-mod into [0, |m|).
BigInt mod_floor(const BigInt& x, const BigInt& m);

bool fits_u64(const BigInt& x);
std::uint64_t to_u64(const BigInt& x);
std::int64_t to_i64(const BigInt& x);

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace dforge
