#include "doctest.h"

#include <random>

#include "dforge/bitarith.hpp"
#include "dforge/bridge.hpp"
#include "dforge/coding.hpp"
#include "dforge/errors.hpp"
#include "dforge/lucas.hpp"

using namespace dforge;
using namespace dforge::bridge;

namespace {

BridgeInputs inputs(long X, long Y, long b, long g, long h, long k, long l, long w, long x, long y) {
  return {X, Y, b, g, h, k, l, w, x, y};
}

}  // namespace

TEST_CASE("defined variables at the worked example") {
  BridgeInputs in = inputs(1, 1, 0, 0, 0, 0, 1, 0, 0, 0);
  BridgeVars v = bridge_vars(in);
  CHECK(v.U == 2);
  CHECK(v.V == 0);
  CHECK(v.A == 2);
  CHECK(v.B == 3);
  CHECK(v.C == 3);
  CHECK(v.D == 4);
  CHECK(v.E == 0);
  CHECK(v.F == 1);
  CHECK(v.G == 13);
  CHECK(v.H == 3);
  CHECK(v.I == 1513);
  CHECK(v.J == 2);

  CHECK(divisibility_modulus(v) == -1);
  CHECK(divisibility_target(v, in) == 2);
  RelationReport r = relations_check(v, in, {false, true});
  CHECK(r.divisibility);
  CHECK(v.D * v.F * v.I == 6052);
  CHECK_FALSE(r.dfi_square);
  CHECK_FALSE(r.ineq_g);
  nlohmann::json j = r.to_json();
  CHECK(j["dfi"] == false);
  CHECK(j["div"] == true);
  CHECK(j["g"].is_null());
  CHECK(j.contains("uvk"));
  CHECK(j.contains("weak"));

  CHECK_THROWS_AS(relations_check(v, in), DomainError);  // g = 0
}

TEST_CASE("all-zero inputs") {
  BridgeVars v = bridge_vars(inputs(0, 0, 0, 0, 0, 0, 0, 0, 0, 0));
  CHECK(v.U == 0);
  CHECK(v.V == 0);
  CHECK(v.A == 0);
  CHECK(v.B == 1);
  CHECK(v.C == 1);
  CHECK(v.D == 0);
  CHECK(v.E == 0);
  CHECK(v.F == 1);
  // G = 1 + 0 - 2*2*4*0
  CHECK(v.G == 1);
  // H = C + B F + (2y-1) C F = 1 + 1 - 1
  CHECK(v.H == 1);
  CHECK(v.I == 1);
  CHECK(v.J == 1);
}

TEST_CASE("relations in integer form") {
  // C = lJY makes the gap zero.
  BridgeInputs in = inputs(0, 1, 0, 1, 0, 0, 1, 0, 0, 0);
  BridgeVars v = bridge_vars(in);
  // U = 0, V = 0, A = 0, B = 1, C = 1 - 2h = 1, J = 1 + k(-2) = 1, lJY = 1.
  CHECK(v.C == v.J * in.l * in.Y);
  RelationReport r = relations_check(v, in);
  CHECK(*r.ineq_weak);
  CHECK(*r.ineq_g);

  BridgeInputs zj = inputs(1, 1, 0, 1, 0, 1, 0, 0, 0, 0);  // U = 0 so J = X + 1 - 2k = 0
  BridgeVars vz = bridge_vars(zj);
  CHECK(vz.J == 0);
  CHECK_THROWS_AS(relations_check(vz, zj), DomainError);
  CHECK_NOTHROW(relations_check(vz, zj, {false, false}));

  // Modulus zero divides only zero: 2A - 5 is odd, so it never vanishes; check the convention directly.
  CHECK(divides(BigInt(0), BigInt(0)));
  CHECK_FALSE(divides(BigInt(0), BigInt(3)));
  CHECK(divides(BigInt(-3), BigInt(6)));

  std::mt19937_64 rng(11);
  int compared = 0;
  for (int t = 0; t < 3000; ++t) {
    auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    BridgeInputs s = inputs(pick(-3, 3), pick(-3, 3), pick(-3, 3), pick(-3, 3), pick(-3, 3), pick(-3, 3), pick(-3, 3),
                            pick(-3, 3), pick(-2, 2), pick(-2, 2));
    if (s.g == 0) continue;
    BridgeVars sv = bridge_vars(s);
    if (sv.J == 0) continue;
    RelationReport sr = relations_check(sv, s);
    if (*sr.ineq_g) CHECK(*sr.ineq_weak);
    ++compared;
  }
  CHECK(compared > 1000);
}

TEST_CASE("ratio bound for Lucas quotients") {
  int cases = 0;
  for (long V = 1; V <= 6; ++V) {
    for (long X = 1; X <= 6; ++X) {
      for (long U = -12; U <= 12; ++U) {
        if (std::abs(U) < 2 * X) continue;
        BigInt num = lucas::psi(BigInt(U * (V + 1)), 2 * X + 1);
        BigInt den = lucas::psi(BigInt(U * U * V), X + 1);
        BigInt vx = pow(BigInt(V), X);
        BigInt v2x = pow(BigInt(V + 1), 2 * X);
        BigInt uv = BigInt(std::abs(U) * V);
        BigInt lhs = abs(num * vx * uv - v2x * den * uv);
        BigInt rhs = v2x * den * 2 * X;
        CHECK(lhs <= rhs);
        ++cases;
      }
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("divisibility forces bw != 0 once |Y| >= 2") {
  int hits = 0;
  for (long Y : {-3L, -2L, 2L, 3L}) {
    for (long X = -2; X <= 2; ++X) {
      for (long l = -2; l <= 2; ++l) {
        for (long g = -1; g <= 1; ++g) {
          for (long h = -1; h <= 1; ++h) {
            for (long b = -1; b <= 1; ++b) {
              for (long w = -1; w <= 1; ++w) {
                BridgeInputs in = inputs(X, Y, b, g, h, 0, l, w, 0, 0);
                BridgeVars v = bridge_vars(in);
                if (divides(divisibility_modulus(v), divisibility_target(v, in))) {
                  ++hits;
                  CHECK(b * w != 0);
                }
                if (b * w == 0) {
                  // Then the relation reads (2A - 5) | 2, forcing A in {2, 3}.
                  CHECK(v.A != 2);
                  CHECK(v.A != 3);
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("partial witness components") {
  // floor(rho) with V = 2, X = 1.
  CHECK((pow(BigInt(3), 2) / BigInt(2)) == 4);
  // h with A = 4, B = 3.
  BigInt c = lucas::psi(BigInt(4), 3);
  CHECK(c == 15);
  CHECK((c - 3) / 2 == 6);
  // k with U^2 V = 4, X = 1.
  BigInt j = lucas::psi(BigInt(4), 2);
  CHECK(j == 4);
  CHECK((j - 2) / (4 - 2) == 1);

  CHECK_THROWS_AS(partial_witness(3, 300, 256, 1), PreconditionError);
  CHECK_THROWS_AS(partial_witness(4, 3, 256, 1), PreconditionError);
  CHECK_THROWS_AS(partial_witness(1, 300, 100, 1), PreconditionError);
  CHECK_THROWS_AS(partial_witness(1, 255, 256, 0), PreconditionError);
  // sigma(256) = 1, so 2^8 does not divide binom(512, 256).
  CHECK_THROWS_AS(partial_witness(1, 256, 256, 1), PreconditionError);
  WitnessLimits tiny;
  tiny.max_bits = 1000;
  CHECK_THROWS_AS(partial_witness(1, 255, 256, 1, tiny), ResourceError);
}

TEST_CASE("partial witness satisfies the relations it determines") {
  // Y = binom(12, 6) = 924 >= 256.
  BigInt X = 6, Y = 924, b = 1, g = 1;
  PartialWitness pw = partial_witness(b, X, Y, g);
  CHECK(pw.w == pow2(13));
  REQUIRE(pw.l);
  REQUIRE(pw.h);
  REQUIRE(pw.k);
  CHECK(*pw.l >= pw.w);
  CHECK(*pw.h >= pw.w);
  CHECK(*pw.k >= b);
  BridgeInputs in{X, Y, b, g, *pw.h, *pw.k, *pw.l, pw.w, 0, 0};
  BridgeVars v = bridge_vars(in);
  RelationReport r = relations_check(v, in);
  CHECK(r.uvk_square);
  CHECK(r.divisibility);
  CHECK(*r.ineq_g);
  CHECK(*r.ineq_weak);

  // Without the divisibility hypothesis the same construction is rejected.
  CHECK_THROWS_AS(partial_witness(b, 7, Y, g), PreconditionError);
  CHECK_THROWS_AS(partial_witness(b, 254, 256, g), PreconditionError);

  // Larger b and g, with h and k recomputed from the Lucas values.
  PartialWitness p2 = partial_witness(4, 6, 924, 3);
  REQUIRE(p2.h);
  BridgeInputs in2{6, 924, 4, 3, *p2.h, *p2.k, *p2.l, p2.w, 0, 0};
  BridgeVars v2 = bridge_vars(in2);
  CHECK(v2.C == lucas::psi(v2.A, 13));
  CHECK(v2.J == lucas::psi(v2.U * v2.U * v2.V, 7));
  RelationReport r2 = relations_check(v2, in2);
  CHECK(r2.uvk_square);
  CHECK(r2.divisibility);
  CHECK(*r2.ineq_g);
}

TEST_CASE("symbolic variables evaluate like the numeric ones") {
  ExprBuilder x;
  BridgeNodes n = build_bridge(x, x.variable("X"), x.variable("Y"), x.variable("g"));
  PolyExpr e = x.build(n.I);
  std::vector<std::string> names;
  for (const char* s : kBridgeNames) names.push_back(std::string("bridge.") + s);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto pick = [&]() { return BigInt(static_cast<long>(rng() % 7) - 3); };
    BridgeInputs in{pick(), pick(), pick(), pick(), pick(), pick(), pick(), pick(), pick(), pick()};
    Point pt{{"X", in.X}, {"Y", in.Y}, {"g", in.g}, {"h", in.h}, {"k", in.k},
             {"l", in.l}, {"w", in.w}, {"x", in.x}, {"y", in.y}};
    auto vals = expr_evaluate_named(e, names, pt);
    BridgeVars v = bridge_vars(in);
    BigInt expect[] = {v.U, v.V, v.A, v.B, v.C, v.D, v.E, v.F, v.G, v.H, v.I, v.J};
    for (std::size_t i = 0; i < 12; ++i) CHECK(vals[names[i]] == expect[i]);
  }
}

TEST_CASE("symbolic degrees match the closed forms") {
  using coding::CodingSource;
  MultiPoly a = MultiPoly::variable("a");
  MultiPoly z1 = MultiPoly::variable("z1");
  MultiPoly z2 = MultiPoly::variable("z2");
  struct Case {
    MultiPoly p;
    long d, v;
  };
  std::vector<Case> cases = {{a + 1, 2, 1}, {a + 1 - z1, 2, 2}, {a * z1 - z2 + 1, 4, 3}};
  for (const auto& c : cases) {
    auto src = std::make_shared<CodingSource>(c.p, true);
    REQUIRE(src->delta() == static_cast<std::uint64_t>(c.d));
    REQUIRE(src->nu() == static_cast<std::size_t>(c.v));
    ExprBuilder x;
    coding::FamilyNodes fam = coding::build_family(x, src);
    BridgeNodes n = build_bridge(x, fam.X, fam.Y, fam.g);
    PolyExpr e = x.build(n.I);
    BigInt dX = expr_degree(e.at("coding.X"));
    BigInt dY = expr_degree(e.at("coding.Y"));
    auto deg = [&](const char* s) { return expr_degree(e.at(std::string("bridge.") + s)); };
    CHECK(deg("U") == 1 + dX + dY);
    CHECK(deg("V") == 2 + dY);
    CHECK(deg("A") == 3 + dX + 2 * dY);
    CHECK(deg("B") == dX);
    CHECK(deg("C") == 4 + dX + 2 * dY);
    CHECK(deg("D") == 14 + 4 * dX + 8 * dY);
    CHECK(deg("E") == 23 + 6 * dX + 12 * dY);
    CHECK(deg("F") == 52 + 14 * dX + 28 * dY);
    CHECK(deg("G") == 70 + 19 * dX + 38 * dY);
    CHECK(deg("H") == 57 + 15 * dX + 30 * dY);
    CHECK(deg("I") == 254 + 68 * dX + 136 * dY);
    CHECK(deg("J") == 5 + 2 * dX + 3 * dY);
  }
}
