#include <random>
#include <set>
#include <string>

#include "dforge/bitarith.hpp"
#include "dforge/coding.hpp"
#include "dforge/verify.hpp"
#include "oracles.hpp"

namespace dforge::verify {

using namespace dforge::coding;

namespace {

std::string s(const BigInt& v) { return to_decimal(v); }

MultiPoly simple_p() { return MultiPoly::variable("a") + MultiPoly(1) - MultiPoly::variable("z1"); }

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

std::vector<CaseSpec> coding_cases() {
  std::vector<CaseSpec> out;

  out.push_back({"masking", "tau(g, mask) = 0 iff g is a code with digits below b; B in {4, 8}, b in {2, 4}, nu <= 2",
                 [](CaseContext& c) {
                   const std::vector<std::vector<BigInt>> positions = {ints({0}), ints({1}), ints({2}),
                                                                       ints({1, 2}), ints({0, 2}), ints({2, 4})};
                   for (long B : {4L, 8L}) {
                     for (long b : {2L, 4L}) {
                       if (b >= B) continue;
                       for (const auto& n : positions) {
                         BigInt M = mask(b, B, n);
                         std::uint64_t limit = to_u64(pow(BigInt(B), to_u64(n.back()) + 1));
                         std::set<std::uint64_t> codes;
                         std::vector<long> z(n.size(), 0);
                         while (true) {
                           std::uint64_t g = 0;
                           for (std::size_t i = 0; i < n.size(); ++i) {
                             g += static_cast<std::uint64_t>(z[i]) * to_u64(pow(BigInt(B), to_u64(n[i])));
                           }
                           codes.insert(g);
                           std::size_t k = 0;
                           while (k < z.size() && ++z[k] == b) z[k++] = 0;
                           if (k == z.size()) break;
                         }
                         for (std::uint64_t g = 0; g < limit; ++g) {
                           BigInt G(std::to_string(g));
                           bool carry_free = oracle::carries(G, M) == 0;
                           auto dec = decode_code(G, b, B, n);
                           auto where = [&] { return "B = " + std::to_string(B) + ", b = " + std::to_string(b) + ", g = " + s(G); };
                           c.check_lazy(carry_free == (codes.count(g) == 1), where);
                           c.check_lazy(dec.has_value() == carry_free, where);
                           if (dec) c.check_lazy(code(*dec, B, n) == G, where);
                         }
                       }
                     }
                   }
                 }});

  out.push_back({"poly-zero-tau-zero", "P(z) = 0 iff tau(K, (B/2 - 1) B^(n_(nu+1))) = 0 for P = a + 1 - z1", [](CaseContext& c) {
                   MultiPoly p = simple_p();
                   for (long z0 = 0; z0 < 8; ++z0) {
                     for (long z1 = 0; z1 < 8; ++z1) {
                       BigInt B = 2;
                       while (B <= 2 * (1 + z0 + z1)) B *= 2;
                       for (int extra = 0; extra < 3; ++extra, B *= 2) {
                         BigInt x = 1 + z0 * B + z1 * B * B;
                         BigInt K = value_at(p, x, B);
                         BigInt probe = (B / 2 - 1) * pow(B, 4);
                         bool zero = z0 + 1 - z1 == 0;
                         c.check_lazy(zero == (oracle::carries(K, probe) == 0),
                                      [&] { return "z = (" + std::to_string(z0) + ", " + std::to_string(z1) + "), B = " + s(B); });
                       }
                     }
                   }
                 }});

  out.push_back({"bound-lemmas", "lower and upper bound lemmas on 1000 random (a, f, g)", [](CaseContext& c) {
                   std::mt19937_64 rng(c.seed());
                   MultiPoly a = MultiPoly::variable("a"), z1 = MultiPoly::variable("z1");
                   std::vector<MultiPoly> polys = {simple_p(), make_suitable(simple_p()), a * z1 + 2 - z1 * z1};
                   gmp_randclass r(gmp_randinit_default);
                   r.seed(static_cast<unsigned long>(c.seed()));
                   for (int trial = 0; trial < 1000; ++trial) {
                     const MultiPoly& p = polys[static_cast<std::size_t>(trial) % polys.size()];
                     CodingContext ctx = coding_constants(p);
                     BigInt av(static_cast<long>(rng() % 20));
                     BigInt f(static_cast<long>(rng() % 20 + 1));
                     BigInt b = 1 + 3 * (2 * av + 1) * f;
                     BigInt B = ctx.beta * pow(b, ctx.delta);
                     BigInt cap = 2 * b * pow(B, to_u64(pow(BigInt(static_cast<long>(ctx.delta + 1)), ctx.nu)));
                     BigInt g = rng() % 2 == 0 ? BigInt(static_cast<long>(rng() % 1000)) : BigInt(r.get_z_range(cap));
                     CodingFamily F = family_eval(p, ctx, av, f, g);
                     auto where = [&] { return "a = " + s(av) + ", f = " + s(f) + ", g = " + s(g); };
                     c.check_lazy(F.violations.empty(), where);
                     c.check_lazy(F.M < F.N0, where);
                     c.check_lazy(F.S_code < F.N && F.T_code < F.N, where);
                     c.check_lazy(F.X >= 3 * F.b, where);
                   }
                 }});

  out.push_back({"find-f", "find_f gives the least f >= Z with 1 + 3(2a+1)f a power of 4", [](CaseContext& c) {
                   for (long a = 0; a < 12; ++a) {
                     for (long Z : {1L, 2L, 3L, 10L, 100L}) {
                       BigInt f = find_f(a, Z);
                       BigInt b = 1 + 3 * (2 * BigInt(a) + 1) * f;
                       auto where = [&] { return "a = " + std::to_string(a) + ", Z = " + std::to_string(Z); };
                       c.check_lazy(f >= Z && is_square(b) && is_power_of_two(b), where);
                       bool earlier = false;
                       for (BigInt h = Z; h < f && !earlier; ++h) {
                         BigInt v = 1 + 3 * (2 * BigInt(a) + 1) * h;
                         earlier = is_power_of_two(v) && is_square(v);
                       }
                       c.check_lazy(!earlier, where);
                     }
                   }
                 }});

  out.push_back({"theorem-forward", "P = a + 1 - z1, a = 0, f = 1: the witness g = code(1) satisfies every relation",
                 [](CaseContext& c) {
                   TheoremOptions opt;
                   opt.f = BigInt(1);
                   opt.z = ints({1});
                   TheoremReport rep = coding_theorem_check(simple_p(), 0, Mode::forward, opt);
                   c.check(rep.pass, "forward report fails: " + rep.to_json().dump());
                   c.check(rep.witnesses.size() == 1 && rep.witnesses[0].g == 65536, "witness is not g = 65536");
                   CodingFamily F = family_eval(simple_p(), 0, 1, 65536);
                   // Y | binom(2X, X) with Y = 2^164, via the digit sum of X counted by the oracle.
                   c.check(is_power_of_two(F.Y) && log2_exact(F.Y) == 164, "Y is not 2^164");
                   c.check(oracle::ones(F.X) >= 164, "sigma(X) < log2(Y)");
                   c.check(F.violations.empty(), "bound violations at the witness");
                 }});

  out.push_back({"theorem-reverse", "P = a + 1 - z1, a = 0, f = 1: the g in [0, 524288) passing the relations are exactly the codes of solutions",
                 [](CaseContext& c) {
                   TheoremOptions opt;
                   opt.f = BigInt(1);
                   opt.reverse_cap = c.max_or(std::uint64_t{1} << 20);
                   TheoremReport rep = coding_theorem_check(simple_p(), 0, Mode::reverse, opt);
                   c.check(rep.upper == 524288, "range end " + s(rep.upper));
                   c.check(rep.pass, "reverse report fails");
                   std::vector<BigInt> found;
                   for (const auto& w : rep.witnesses) {
                     found.push_back(w.g);
                     bool solves = w.decoded && w.decoded->size() == 1 && 0 + 1 - (*w.decoded)[0] == 0;
                     c.check(solves, "g = " + s(w.g) + " does not decode to a solution");
                   }
                   // Solutions of 1 - z1 = 0 with z1 < b = 4: only z1 = 1, code 1 * 256^2.
                   c.check(found == ints({65536}), "passing set differs from {65536}");
                   c.check(rep.expected == ints({65536}), "expected codes differ from {65536}");
                 }});

  return out;
}

}  // namespace dforge::verify
