#include <random>
#include <string>

#include "dforge/bridge.hpp"
#include "dforge/coding.hpp"
#include "dforge/lucas.hpp"
#include "dforge/verify.hpp"

namespace dforge::verify {

using namespace dforge::bridge;

namespace {

BridgeInputs inputs(long X, long Y, long b, long g, long h, long k, long l, long w, long x, long y) {
  return {X, Y, b, g, h, k, l, w, x, y};
}

std::string show(const BridgeInputs& in) {
  std::string out = "(";
  for (const BigInt* v : {&in.X, &in.Y, &in.b, &in.g, &in.h, &in.k, &in.l, &in.w, &in.x, &in.y}) {
    if (out.size() > 1) out += ", ";
    out += to_decimal(*v);
  }
  return out + ")";
}

}  // namespace

std::vector<CaseSpec> bridge_cases() {
  std::vector<CaseSpec> out;

  out.push_back({"worked-example", "defined variables at X = Y = l = 1, all else 0", [](CaseContext& c) {
                   BridgeInputs in = inputs(1, 1, 0, 0, 0, 0, 1, 0, 0, 0);
                   BridgeVars v = bridge_vars(in);
                   BigInt got[] = {v.U, v.V, v.A, v.B, v.C, v.D, v.E, v.F, v.G, v.H, v.I, v.J};
                   long want[] = {2, 0, 2, 3, 3, 4, 0, 1, 13, 3, 1513, 2};
                   for (std::size_t i = 0; i < 12; ++i) {
                     c.check(got[i] == want[i], std::string(kBridgeNames[i]) + " = " + to_decimal(got[i]));
                   }
                   c.check(divisibility_modulus(v) == -1 && divisibility_target(v, in) == 2, "divisibility pieces");
                 }});

  out.push_back({"ratio-bound", "cleared form of the bound on psi_(2X+1)(U(V+1)) / psi_(X+1)(U^2 V)", [](CaseContext& c) {
                   for (long V = 1; V <= 6; ++V) {
                     for (long X = 1; X <= 6; ++X) {
                       for (long U = -12; U <= 12; ++U) {
                         if (std::abs(U) < 2 * X) continue;
                         BigInt num = lucas::psi(BigInt(U * (V + 1)), 2 * X + 1);
                         BigInt den = lucas::psi(BigInt(U * U * V), X + 1);
                         BigInt vx = pow(BigInt(V), static_cast<std::uint64_t>(X));
                         BigInt v2x = pow(BigInt(V + 1), static_cast<std::uint64_t>(2 * X));
                         BigInt uv(std::abs(U) * V);
                         BigInt lhs = abs(num * vx * uv - v2x * den * uv);
                         c.check_lazy(lhs <= v2x * den * 2 * X, [&] {
                           return "U = " + std::to_string(U) + ", V = " + std::to_string(V) + ", X = " + std::to_string(X);
                         });
                       }
                     }
                   }
                 }});

  out.push_back({"bw-nonzero", "divisibility with |Y| >= 2 forces bw != 0", [](CaseContext& c) {
                   std::uint64_t hits = 0;
                   for (long Y : {-3L, -2L, 2L, 3L})
                     for (long X = -2; X <= 2; ++X)
                       for (long l = -2; l <= 2; ++l)
                         for (long g = -1; g <= 1; ++g)
                           for (long h = -1; h <= 1; ++h)
                             for (long b = -1; b <= 1; ++b)
                               for (long w = -1; w <= 1; ++w) {
                                 BridgeInputs in = inputs(X, Y, b, g, h, 0, l, w, 0, 0);
                                 BridgeVars v = bridge_vars(in);
                                 if (divides(divisibility_modulus(v), divisibility_target(v, in))) {
                                   ++hits;
                                   c.check_lazy(b * w != 0, [&] { return show(in); });
                                 }
                                 if (b * w == 0) c.check_lazy(v.A != 2 && v.A != 3, [&] { return show(in); });
                               }
                   c.check(hits > 0, "divisibility never held");
                 }});

  out.push_back({"inequality-implication", "16 g^2 (C - lJY)^2 < J^2 implies 4 (C - lJY)^2 < J^2 on random inputs",
                 [](CaseContext& c) {
                   std::mt19937_64 rng(c.seed());
                   const std::uint64_t samples = c.max_or(1000);
                   std::uint64_t compared = 0;
                   for (std::uint64_t t = 0; compared < samples && t < 100 * samples; ++t) {
                     auto pick = [&](long lo, long hi) {
                       return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
                     };
                     BridgeInputs in = inputs(pick(-3, 3), pick(-3, 3), pick(-3, 3), pick(-3, 3), pick(-3, 3), pick(-3, 3),
                                              pick(-3, 3), pick(-3, 3), pick(-2, 2), pick(-2, 2));
                     if (in.g == 0) continue;
                     BridgeVars v = bridge_vars(in);
                     if (v.J == 0) continue;
                     RelationReport r = relations_check(v, in);
                     c.check_lazy(!*r.ineq_g || *r.ineq_weak, [&] { return show(in); });
                     ++compared;
                   }
                   c.check(compared == samples, "too few admissible samples");
                 }});

  out.push_back({"partial-witness", "forward w, l, h, k at X = 6, Y = binom(12, 6) satisfy the relations they determine",
                 [](CaseContext& c) {
                   for (long b : {1L, 4L}) {
                     for (long g : {1L, 3L}) {
                       PartialWitness pw = partial_witness(b, 6, 924, g);
                       std::string where = "b = " + std::to_string(b) + ", g = " + std::to_string(g);
                       if (!c.check(pw.l && pw.h && pw.k, where + ": incomplete witness")) continue;
                       BridgeInputs in{6, 924, b, g, *pw.h, *pw.k, *pw.l, pw.w, 0, 0};
                       BridgeVars v = bridge_vars(in);
                       c.check(v.C == lucas::psi(v.A, 13), where + ": C != psi_B(A)");
                       c.check(v.J == lucas::psi(v.U * v.U * v.V, 7), where + ": J != psi_(X+1)(U^2 V)");
                       RelationReport r = relations_check(v, in);
                       c.check(r.uvk_square && r.divisibility && *r.ineq_g && *r.ineq_weak, where + ": " + r.to_json().dump());
                     }
                   }
                 }});

  out.push_back({"symbolic-degrees", "expr_degree of U..J matches the closed forms in deg X and deg Y", [](CaseContext& c) {
                   MultiPoly a = MultiPoly::variable("a"), z1 = MultiPoly::variable("z1"), z2 = MultiPoly::variable("z2");
                   for (const MultiPoly& p : {a + 1, a + 1 - z1, a * z1 - z2 + 1}) {
                     auto src = std::make_shared<const coding::CodingSource>(p, true);
                     ExprBuilder x;
                     coding::FamilyNodes fam = coding::build_family(x, src);
                     BridgeNodes n = build_bridge(x, fam.X, fam.Y, fam.g);
                     PolyExpr e = x.build(n.I);
                     BigInt dX = expr_degree(e.at("coding.X"));
                     BigInt dY = expr_degree(e.at("coding.Y"));
                     BigInt closed[] = {1 + dX + dY,       2 + dY,            3 + dX + 2 * dY,     dX,
                                        4 + dX + 2 * dY,   14 + 4 * dX + 8 * dY, 23 + 6 * dX + 12 * dY, 52 + 14 * dX + 28 * dY,
                                        70 + 19 * dX + 38 * dY, 57 + 15 * dX + 30 * dY, 254 + 68 * dX + 136 * dY, 5 + 2 * dX + 3 * dY};
                     for (std::size_t i = 0; i < 12; ++i) {
                       BigInt got = expr_degree(e.at(std::string("bridge.") + kBridgeNames[i]));
                       c.check(got == closed[i], to_string(p) + ": deg " + kBridgeNames[i] + " = " + to_decimal(got));
                     }
                   }
                 }});

  out.push_back({"symbolic-values", "the symbolic U..J evaluate like the numeric ones", [](CaseContext& c) {
                   ExprBuilder x;
                   BridgeNodes n = build_bridge(x, x.variable("X"), x.variable("Y"), x.variable("g"));
                   PolyExpr e = x.build(n.I);
                   std::vector<std::string> names;
                   for (const char* s : kBridgeNames) names.push_back(std::string("bridge.") + s);
                   std::mt19937_64 rng(c.seed());
                   for (int t = 0; t < 200; ++t) {
                     auto pick = [&]() { return BigInt(static_cast<long>(rng() % 21) - 10); };
                     BridgeInputs in{pick(), pick(), pick(), pick(), pick(), pick(), pick(), pick(), pick(), pick()};
                     Point pt{{"X", in.X}, {"Y", in.Y}, {"g", in.g}, {"h", in.h}, {"k", in.k},
                              {"l", in.l}, {"w", in.w}, {"x", in.x}, {"y", in.y}};
                     auto vals = expr_evaluate_named(e, names, pt);
                     BridgeVars v = bridge_vars(in);
                     BigInt expect[] = {v.U, v.V, v.A, v.B, v.C, v.D, v.E, v.F, v.G, v.H, v.I, v.J};
                     for (std::size_t i = 0; i < 12; ++i) c.check_lazy(vals[names[i]] == expect[i], [&] { return names[i] + " at " + show(in); });
                   }
                 }});

  return out;
}

}  // namespace dforge::verify
