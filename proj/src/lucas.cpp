#include "dforge/lucas.hpp"

#include <string>

#include "dforge/errors.hpp"

namespace dforge::lucas {

namespace {

// (psi_n, psi_{n+1}) for n >= 0 by index doubling:
// psi_{2k} = psi_k (2 psi_{k+1} - A psi_k), psi_{2k+1} = psi_{k+1}^2 - psi_k^2.
template <class Reduce>
std::pair<BigInt, BigInt> psi_step(const BigInt& A, const BigInt& n, Reduce reduce) {
  BigInt lo = 0;
  BigInt hi = 1;
  for (std::uint64_t bit = bit_length(n); bit-- > 0;) {
    BigInt even = reduce(lo * (2 * hi - A * lo));
    BigInt odd = reduce(hi * hi - lo * lo);
    if (mpz_tstbit(n.get_mpz_t(), bit) != 0) {
      lo = std::move(odd);
      hi = reduce(A * lo - even);
    } else {
      lo = std::move(even);
      hi = std::move(odd);
    }
  }
  return {lo, hi};
}

std::pair<BigInt, BigInt> psi_pair(const BigInt& A, std::uint64_t n) {
  return psi_step(A, BigInt(std::to_string(n)), [](BigInt x) { return x; });
}

std::uint64_t magnitude(std::int64_t n) {
  return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

}  // namespace

BigInt psi(const BigInt& A, std::int64_t n) {
  BigInt v = psi_pair(A, magnitude(n)).first;
  return n < 0 ? BigInt(-v) : v;
}

BigInt chi(const BigInt& A, std::int64_t n) {
  auto [p, q] = psi_pair(A, magnitude(n));
  return 2 * q - A * p;
}

LucasPair pair(const BigInt& A, std::int64_t n) {
  auto [p, q] = psi_pair(A, magnitude(n));
  LucasPair out{A, n, p, 2 * q - A * p};
  if (n < 0) out.psi = -out.psi;
  return out;
}

BigInt psi(const BigInt& A, const BigInt& n, std::uint64_t max_bits) {
  BigInt mag = abs(n);
  if (!fits_u64(mag)) throw ResourceError("Lucas index " + to_decimal(n) + " is too large");
  std::uint64_t k = to_u64(mag);
  // |psi_k(A)| <= (|A| + 1)^k.
  if (k > 0 && bit_length(abs(A) + 1) > 0 && BigInt(std::to_string(k)) * bit_length(abs(A) + 1) > max_bits) {
    throw ResourceError("psi_" + to_decimal(n) + " exceeds the size guard");
  }
  BigInt v = psi_pair(A, k).first;
  return n < 0 ? BigInt(-v) : v;
}

BigInt psi_mod(const BigInt& A, const BigInt& n, const BigInt& m) {
  if (m < 2) throw DomainError("psi_mod needs a modulus of at least 2");
  if (n < 0) throw DomainError("psi_mod needs a nonnegative index");
  BigInt a = mod_floor(A, m);
  return psi_step(a, n, [&](const BigInt& x) { return mod_floor(x, m); }).first;
}

std::vector<LucasPair> pell_enumerate(const BigInt& A, const BigInt& bound) {
  if (A <= 2) throw DomainError("Pell enumeration needs A >= 3");
  std::vector<LucasPair> out;
  BigInt p0 = 0, p1 = 1, c0 = 2, c1 = A;
  for (std::int64_t n = 0; c0 <= bound && p0 <= bound; ++n) {
    out.push_back({A, n, p0, c0});
    BigInt p2 = A * p1 - p0;
    BigInt c2 = A * c1 - c0;
    p0 = std::move(p1);
    p1 = std::move(p2);
    c0 = std::move(c1);
    c1 = std::move(c2);
  }
  return out;
}

std::optional<std::uint64_t> apparition_rank(const BigInt& A, const BigInt& N, std::uint64_t search_cap) {
  if (N < 1) throw DomainError("apparition rank needs N >= 1");
  if (N == 1) return search_cap >= 1 ? std::optional<std::uint64_t>(1) : std::nullopt;
  BigInt a = mod_floor(A, N);
  BigInt prev = 0, cur = 1;
  for (std::uint64_t n = 1; n <= search_cap; ++n) {
    if (cur == 0) return n;
    BigInt next = mod_floor(a * cur - prev, N);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return std::nullopt;
}

bool congruence_46_check(const BigInt& A, std::uint64_t B, const BigInt& W) {
  BigInt m = abs(2 * A - 5);
  if (m == 0) throw DomainError("2A - 5 must be nonzero");
  if (m == 1) return true;
  BigInt lhs = 3 * W * psi_mod(A, BigInt(std::to_string(B)), m);
  return mod_floor(lhs - 2 * (W * W - 1), m) == 0;
}

}  // namespace dforge::lucas
