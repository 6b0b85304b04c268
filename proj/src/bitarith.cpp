#include "dforge/bitarith.hpp"

#include "dforge/errors.hpp"

namespace dforge::bitarith {

BitCount sigma(const BigInt& a) {
  if (a < 0) throw DomainError("sigma: negative argument " + to_decimal(a));
  return BitCount{mpz_popcount(a.get_mpz_t())};
}

BitCount tau(const BigInt& a, const BigInt& b) {
  if (a < 0 || b < 0) throw DomainError("tau: negative argument");
  BigInt sum = a + b;
  return BitCount{sigma(a).value + sigma(b).value - sigma(sum).value};
}

BitCount central_binom_val2(const BigInt& x) {
  if (x < 0) throw DomainError("central_binom_val2: negative argument");
  return sigma(x);
}

bool central_binom_divisible_by_pow2(const BigInt& x, std::uint64_t k) {
  return central_binom_val2(x).value >= k;
}

}  // namespace dforge::bitarith
