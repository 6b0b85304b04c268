#include <cmath>
#include <set>
#include <string>

#include "dforge/lucas.hpp"
#include "dforge/verify.hpp"
#include "oracles.hpp"

namespace dforge::verify {

using namespace dforge::lucas;

namespace {

BigInt P(long A, long n) { return psi(BigInt(A), n); }
BigInt Ch(long A, long n) { return chi(BigInt(A), n); }

std::string an(long A, long n) { return "A = " + std::to_string(A) + ", n = " + std::to_string(n); }

}  // namespace

std::vector<CaseSpec> lucas_cases() {
  std::vector<CaseSpec> out;

  out.push_back({"recurrence", "fast psi and chi agree with the recurrence and the Pell identity", [](CaseContext& c) {
                   for (long A = -9; A <= 9; ++A) {
                     auto ps = oracle::lucas_run(A, 0, 1, 80);
                     auto cs = oracle::lucas_run(A, 2, A, 80);
                     for (long n = 0; n <= 80; ++n) {
                       LucasPair lp = pair(BigInt(A), n);
                       c.check_lazy(lp.psi == ps[static_cast<std::size_t>(n)] && lp.chi == cs[static_cast<std::size_t>(n)],
                                    [&] { return an(A, n); });
                       c.check_lazy(lp.chi * lp.chi - (BigInt(A) * A - 4) * lp.psi * lp.psi == 4, [&] { return an(A, n); });
                     }
                   }
                 }});

  out.push_back({"elementary", "monotonicity, growth, symmetries, coprimality, parity, bounds and shift identities",
                 [](CaseContext& c) {
                   for (long A = 2; A <= 10; ++A) {
                     for (long n = 0; n <= 15; ++n) {
                       c.check_lazy(P(A, n + 1) > P(A, n), [&] { return "monotone " + an(A, n); });
                       c.check_lazy(gcd(P(A, n), P(A, n + 1)) == 1, [&] { return "coprime " + an(A, n); });
                     }
                   }
                   for (long A = 2; A <= 8; ++A) {
                     for (long n = 2; n <= 12; ++n) {
                       c.check_lazy(pow(BigInt(A - 1), static_cast<std::uint64_t>(n)) < P(A, n + 1) &&
                                        P(A, n + 1) < pow(BigInt(A), static_cast<std::uint64_t>(n)),
                                    [&] { return "growth " + an(A, n); });
                     }
                   }
                   for (long A = -8; A <= 8; ++A) {
                     for (long n = -12; n <= 12; ++n) {
                       long sgn_psi = (n + 1) % 2 == 0 ? 1 : -1;
                       long sgn_chi = n % 2 == 0 ? 1 : -1;
                       c.check_lazy(P(-A, n) == sgn_psi * P(A, n) && Ch(-A, n) == sgn_chi * Ch(A, n),
                                    [&] { return "sign symmetry " + an(A, n); });
                       c.check_lazy(P(A, -n) == -P(A, n) && Ch(A, -n) == Ch(A, n), [&] { return "index symmetry " + an(A, n); });
                     }
                   }
                   for (long A = 2; A <= 10; A += 2) {
                     for (long n = 0; n <= 15; ++n) {
                       c.check_lazy(mod_floor(P(A, n) - n, 2) == 0 && mod_floor(Ch(A, n), 2) == 0,
                                    [&] { return "parity " + an(A, n); });
                     }
                   }
                   for (long A = 3; A <= 10; ++A) {
                     for (long n = 0; n <= 20; ++n) {
                       BigInt p = P(A, n), ch = Ch(A, n);
                       c.check_lazy(2 * P(A, n + 1) > 5 * p, [&] { return "ratio bound " + an(A, n); });
                       c.check_lazy(ch > 0 && ch * ch > 5 * p * p, [&] { return "chi bound " + an(A, n); });
                     }
                   }
                   for (long A = 2; A <= 8; ++A) {
                     for (long n = -10; n <= 10; ++n) {
                       c.check_lazy(2 * P(A, n) == A * P(A, n + 1) - Ch(A, n + 1), [&] { return "doubling " + an(A, n); });
                       for (long r = -10; r <= 10; ++r) {
                         c.check_lazy(P(A, n + r) == P(A, r) * Ch(A, n) + P(A, n - r), [&] { return "shift " + an(A, n); });
                       }
                     }
                   }
                 }});

  out.push_back({"linear-expansion", "psi_(nk+r) as a binomial sum, A in [2, 6], n, k, r <= 5", [](CaseContext& c) {
                   for (long A = 2; A <= 6; ++A)
                     for (long n = 0; n <= 5; ++n)
                       for (long k = 0; k <= 5; ++k)
                         for (long r = 0; r <= 5; ++r) {
                           BigInt base = P(A, k + 1) - A * P(A, k);
                           BigInt sum = 0;
                           for (long i = 0; i <= n; ++i) {
                             sum += oracle::binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)) *
                                    pow(base, static_cast<std::uint64_t>(n - i)) * pow(P(A, k), static_cast<std::uint64_t>(i)) *
                                    P(A, r + i);
                           }
                           c.check_lazy(P(A, n * k + r) == sum, [&] { return an(A, n) + ", k = " + std::to_string(k); });
                         }
                 }});

  out.push_back({"square-divisibility", "psi_k^2 | psi_m implies psi_k | m, |A| in [2, 6], k <= 5, m <= 40", [](CaseContext& c) {
                   for (long A : {-6L, -5L, -4L, -3L, -2L, 2L, 3L, 4L, 5L, 6L}) {
                     for (long k = 1; k <= 5; ++k) {
                       BigInt pk = P(A, k);
                       for (long m = 0; m <= 40; ++m) {
                         bool premise = divides(pk * pk, P(A, m));
                         c.check_lazy(!premise || divides(pk, BigInt(m)), [&] { return an(A, m) + ", k = " + std::to_string(k); });
                       }
                     }
                   }
                 }});

  auto residue_cases = [](CaseContext& c, bool injectivity) {
    std::uint64_t used = 0;
    for (long A = 3; A <= 6; ++A) {
      for (long n = 4; n <= 8; ++n) {
        BigInt ch = Ch(A, n);
        if (mod_floor(ch, 2) != 0) continue;
        BigInt k = ch / 2;
        ++used;
        if (injectivity) {
          std::set<BigInt> seen;
          for (long i = -n; i <= n; ++i) seen.insert(mod_floor(P(A, i), k));
          c.check_lazy(seen.size() == static_cast<std::size_t>(2 * n + 1), [&] { return an(A, n); });
          continue;
        }
        for (long s = 0; s <= 6 * n; ++s) {
          for (long t = 0; t <= 6 * n; ++t) {
            if (mod_floor(P(A, s) - P(A, t), k) != 0) continue;
            c.check_lazy(mod_floor(BigInt(s - t), 2 * n) == 0 || mod_floor(BigInt(s + t), 2 * n) == 0,
                         [&] { return an(A, n) + ", s = " + std::to_string(s) + ", t = " + std::to_string(t); });
          }
        }
      }
    }
    c.check(used > 0, "no (A, n) with even chi_n(A)");
  };
  out.push_back({"residue-injectivity", "psi_i mod k pairwise distinct for |i| <= n when chi_n(A) = 2k",
                 [residue_cases](CaseContext& c) { residue_cases(c, true); }});
  out.push_back({"index-recovery", "psi_s = psi_t mod k implies s = +-t mod 2n, s, t <= 6n",
                 [residue_cases](CaseContext& c) { residue_cases(c, false); }});

  out.push_back({"uv-congruence", "(UV)^(B-1) psi_B(A) = sum U^(2r) V^(2(B-1-r)) mod U^2 - AUV + V^2", [](CaseContext& c) {
                   for (long A = -5; A <= 5; ++A)
                     for (long U = -5; U <= 5; ++U)
                       for (long V = -5; V <= 5; ++V) {
                         BigInt m(U * U - A * U * V + V * V);
                         if (m == 0) continue;
                         for (long B = 1; B <= 8; ++B) {
                           BigInt rhs = 0;
                           for (long r = 0; r < B; ++r) {
                             rhs += pow(BigInt(U), static_cast<std::uint64_t>(2 * r)) *
                                    pow(BigInt(V), static_cast<std::uint64_t>(2 * (B - 1 - r)));
                           }
                           BigInt lhs = pow(BigInt(U * V), static_cast<std::uint64_t>(B - 1)) * P(A, B);
                           c.check_lazy(mod_floor(lhs - rhs, abs(m)) == 0,
                                        [&] { return an(A, B) + ", U = " + std::to_string(U) + ", V = " + std::to_string(V); });
                         }
                       }
                 }});

  out.push_back({"congruence-forward", "3 W psi_B(A) = 2(W^2 - 1) mod 2A - 5 at W = 2^B, B <= 10", [](CaseContext& c) {
                   for (long A = -20; A <= 20; ++A) {
                     for (std::uint64_t B = 1; B <= 10; ++B) {
                       BigInt W = pow2(B);
                       BigInt m = abs(BigInt(2 * A - 5));
                       bool direct = mod_floor(3 * W * P(A, static_cast<long>(B)) - 2 * (W * W - 1), m) == 0;
                       c.check_lazy(direct, [&] { return an(A, static_cast<long>(B)); });
                       c.check_lazy(congruence_46_check(A, B, W), [&] { return "checker, " + an(A, static_cast<long>(B)); });
                     }
                   }
                 }});

  out.push_back({"congruence-converse", "for |A| >= max(W^4, 2^(4B)) the congruence forces W = 2^B, B <= 4", [](CaseContext& c) {
                   std::uint64_t held = 0;
                   for (std::uint64_t B = 1; B <= 4; ++B) {
                     for (long W = -20; W <= 20; ++W) {
                       BigInt floor_a = pow(BigInt(W), 4);
                       if (floor_a < pow2(4 * B)) floor_a = pow2(4 * B);
                       for (long off = 0; off < 40; ++off) {
                         for (int sign : {1, -1}) {
                           BigInt A = sign * (floor_a + off);
                           BigInt m = abs(2 * A - 5);
                           bool holds = mod_floor(3 * W * psi(A, static_cast<std::int64_t>(B)) - 2 * (BigInt(W) * W - 1), m) == 0;
                           c.check_lazy(holds == congruence_46_check(A, B, W), [&] { return "checker mismatch A = " + to_decimal(A); });
                           if (!holds) continue;
                           ++held;
                           c.check_lazy(BigInt(W) == pow2(B), [&] {
                             return "B = " + std::to_string(B) + ", W = " + std::to_string(W) + ", A = " + to_decimal(A);
                           });
                         }
                       }
                     }
                   }
                   c.check(held > 0, "the congruence never held in the scan window");
                 }});

  out.push_back({"pell-completeness", "pell_enumerate equals brute-force solutions with X, Y <= max (10^6), A in [3, 8]",
                 [](CaseContext& c) {
                   const std::uint64_t bound = c.max_or(1000000);
                   for (long A = 3; A <= 8; ++A) {
                     auto d = static_cast<std::uint64_t>(A * A - 4);
                     std::vector<std::pair<std::uint64_t, std::uint64_t>> brute;
                     for (std::uint64_t Y = 0; Y <= bound; ++Y) {
                       unsigned __int128 v = static_cast<unsigned __int128>(d) * Y * Y + 4;
                       if (v > static_cast<unsigned __int128>(bound) * bound) break;
                       auto X = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
                       while (static_cast<unsigned __int128>(X) * X > v) --X;
                       while (static_cast<unsigned __int128>(X + 1) * (X + 1) <= v) ++X;
                       if (static_cast<unsigned __int128>(X) * X == v) brute.emplace_back(X, Y);
                     }
                     auto listed = pell_enumerate(A, BigInt(std::to_string(bound)));
                     bool same = listed.size() == brute.size();
                     for (std::size_t i = 0; same && i < brute.size(); ++i) {
                       same = to_u64(listed[i].chi) == brute[i].first && to_u64(listed[i].psi) == brute[i].second;
                     }
                     c.check(same, "A = " + std::to_string(A) + ": " + std::to_string(listed.size()) + " listed, " +
                                       std::to_string(brute.size()) + " by brute force");
                   }
                 }});

  out.push_back({"pell-corollary", "(A^2 - 1) X^2 + 1 is a square iff X = psi_m(2A), A in [1, 5], |X| <= 10^4",
                 [](CaseContext& c) {
                   for (long A = 1; A <= 5; ++A) {
                     std::set<long> values;
                     long reach = A == 1 ? 10000 : 20;
                     for (long m = -reach; m <= reach; ++m) {
                       BigInt v = P(2 * A, m);
                       if (abs(v) <= 10000) values.insert(to_i64(v));
                     }
                     for (long X = -10000; X <= 10000; ++X) {
                       bool sq = is_square(BigInt(A * A - 1) * X * X + 1);
                       c.check_lazy(sq == (values.count(X) == 1), [&] { return "A = " + std::to_string(A) + ", X = " + std::to_string(X); });
                     }
                   }
                 }});

  out.push_back({"apparition", "apparition_rank is the least n with N | psi_n(A)", [](CaseContext& c) {
                   for (long A = -6; A <= 6; ++A) {
                     for (long N = 1; N <= 30; ++N) {
                       auto r = apparition_rank(A, N, 10000);
                       if (!c.check_lazy(r.has_value(), [&] { return an(A, N) + ": no rank"; })) continue;
                       bool ok = divides(BigInt(N), P(A, static_cast<long>(*r)));
                       for (long n = 1; ok && n < static_cast<long>(*r); ++n) ok = !divides(BigInt(N), P(A, n));
                       c.check_lazy(ok, [&] { return an(A, N); });
                     }
                   }
                 }});

  return out;
}

}  // namespace dforge::verify
