#include "dforge/bigint.hpp"

#include <limits>

#include "dforge/errors.hpp"

namespace dforge {

BigInt from_decimal(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw DomainError("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned long>::max()) {
    throw ResourceError("exponent too large");
  }
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

BigInt pow2(std::uint64_t exponent) {
  BigInt out;
  mpz_setbit(out.get_mpz_t(), exponent);
  return out;
}

std::uint64_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

bool is_power_of_two(const BigInt& x) {
  return x > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

std::uint64_t log2_exact(const BigInt& x) {
  if (!is_power_of_two(x)) throw DomainError("not a power of two: " + to_decimal(x));
  return mpz_scan1(x.get_mpz_t(), 0);
}

bool is_square(const BigInt& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw DomainError("isqrt of negative number");
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
  return out;
}

bool divides(const BigInt& n, const BigInt& m) {
  if (n == 0) return m == 0;
  return mpz_divisible_p(m.get_mpz_t(), n.get_mpz_t()) != 0;
}

BigInt mod_floor(const BigInt& x, const BigInt& m) {
  if (m == 0) throw DomainError("modulus zero");
  BigInt out;
  BigInt am = abs(m);
  mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), am.get_mpz_t());
  return out;
}

bool fits_u64(const BigInt& x) {
  return x >= 0 && bit_length(x) <= 64;
}

std::uint64_t to_u64(const BigInt& x) {
  if (!fits_u64(x)) throw ResourceError("value does not fit in 64 bits: " + to_decimal(x));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

std::int64_t to_i64(const BigInt& x) {
  if (bit_length(x) > 63) throw ResourceError("value does not fit in 63 bits: " + to_decimal(x));
  std::int64_t mag = static_cast<std::int64_t>(to_u64(abs(x)));
  return x < 0 ? -mag : mag;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace dforge
