#include "dforge/bridge.hpp"

#include <string>

#include "dforge/bitarith.hpp"
#include "dforge/errors.hpp"
#include "dforge/lucas.hpp"

namespace dforge::bridge {

BridgeVars bridge_vars(const BridgeInputs& in) {
  BridgeVars v;
  v.U = 2 * in.l * in.X * in.Y;
  v.V = 4 * in.g * in.w * in.Y;
  v.A = v.U * (v.V + 1);
  v.B = 2 * in.X + 1;
  v.C = v.B + (v.A - 2) * in.h;
  BigInt d = v.A * v.A - 4;
  v.D = d * v.C * v.C + 4;
  v.E = v.C * v.C * v.D * in.x;
  v.F = 4 * d * v.E * v.E + 1;
  v.G = 1 + v.C * v.D * v.F - 2 * (v.A + 2) * (v.A - 2) * (v.A - 2) * v.E * v.E;
  v.H = v.C + v.B * v.F + (2 * in.y - 1) * v.C * v.F;
  v.I = (v.G * v.G - 1) * v.H * v.H + 1;
  v.J = in.X + 1 + in.k * (v.U * v.U * v.V - 2);
  return v;
}

BigInt divisibility_modulus(const BridgeVars& v) { return 2 * v.A - 5; }

BigInt divisibility_target(const BridgeVars& v, const BridgeInputs& in) {
  BigInt bw = in.b * in.w;
  return 3 * bw * v.C - 2 * (bw * bw - 1);
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json out = {{"dfi", dfi_square}, {"uvk", uvk_square}, {"div", divisibility}};
  out["g"] = ineq_g ? nlohmann::json(*ineq_g) : nlohmann::json(nullptr);
  out["weak"] = ineq_weak ? nlohmann::json(*ineq_weak) : nlohmann::json(nullptr);
  return out;
}

RelationReport relations_check(const BridgeVars& v, const BridgeInputs& in, const RelationRequest& req) {
  if ((req.ineq_g || req.ineq_weak) && v.J == 0) {
    throw DomainError(std::string("relation ") + (req.ineq_g ? "g" : "weak") + " needs J != 0");
  }
  if (req.ineq_g && in.g == 0) throw DomainError("relation g needs g != 0");
  RelationReport r;
  r.dfi_square = is_square(v.D * v.F * v.I);
  BigInt uv = v.U * v.U * v.V;
  r.uvk_square = is_square((uv * uv - 4) * v.J * v.J + 4);
  r.divisibility = divides(divisibility_modulus(v), divisibility_target(v, in));
  BigInt gap = v.C - in.l * v.J * in.Y;
  BigInt gap2 = gap * gap;
  BigInt j2 = v.J * v.J;
  if (req.ineq_g) r.ineq_g = 16 * in.g * in.g * gap2 < j2;
  if (req.ineq_weak) r.ineq_weak = 4 * gap2 < j2;
  return r;
}

RelationReport relations_check(const BridgeInputs& in, const RelationRequest& req) {
  return relations_check(bridge_vars(in), in, req);
}

PartialWitness partial_witness(const BigInt& b, const BigInt& X, const BigInt& Y, const BigInt& g,
                               const WitnessLimits& limits) {
  if (b < 1 || !is_power_of_two(b)) throw PreconditionError("b must be a power of two");
  if (X < b) throw PreconditionError("X must be at least b");
  if (Y < b || Y < 256) throw PreconditionError("Y must be at least max(b, 256)");
  if (g < 1) throw PreconditionError("g must be positive");
  if (!fits_u64(X) || to_u64(X) > limits.max_bits) throw ResourceError("X exceeds the size guard");
  const std::uint64_t x = to_u64(X);
  if (is_power_of_two(Y)) {
    if (!bitarith::central_binom_divisible_by_pow2(X, log2_exact(Y))) {
      throw PreconditionError("Y does not divide binom(2X, X)");
    }
  } else {
    if (x > limits.max_binomial_x) throw ResourceError("binom(2X, X) is too large to test divisibility by Y");
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * x, x);
    if (!divides(Y, c)) throw PreconditionError("Y does not divide binom(2X, X)");
  }

  PartialWitness pw;
  pw.w = pow2(2 * x + 1) / b;
  BigInt V = 4 * g * pw.w * Y;
  // floor_rho has about X log2(V) bits.
  if (BigInt(std::to_string(x)) * bit_length(V) > limits.max_bits) throw ResourceError("floor(rho) exceeds the size guard");
  pw.floor_rho = pow(V + 1, 2 * x) / pow(V, x);
  if (!divides(Y, pw.floor_rho)) return pw;
  pw.l = pw.floor_rho / Y;

  BigInt U = 2 * *pw.l * X * Y;
  BigInt A = U * (V + 1);
  BigInt B = 2 * X + 1;
  try {
    BigInt c = lucas::psi(A, B, limits.max_bits);
    pw.h = (c - B) / (A - 2);
    if ((*pw.h) * (A - 2) != c - B) throw InvariantViolation("psi_B(A) is not congruent to B mod A - 2");
    BigInt u2v = U * U * V;
    BigInt j = lucas::psi(u2v, X + 1, limits.max_bits);
    pw.k = (j - X - 1) / (u2v - 2);
    if ((*pw.k) * (u2v - 2) != j - X - 1) throw InvariantViolation("psi_{X+1}(U^2 V) is not congruent to X + 1");
  } catch (const ResourceError&) {
    // h and k stay absent past the guard.
  }
  return pw;
}

BridgeNodes build_bridge(ExprBuilder& x, NodeId X, NodeId Y, NodeId g, const std::string& prefix) {
  BridgeNodes n{};
  auto name = [&](const char* s, NodeId id) { return x.named(prefix + s, id); };
  NodeId h = x.variable("h"), k = x.variable("k"), l = x.variable("l"), w = x.variable("w");
  NodeId xv = x.variable("x"), y = x.variable("y");
  NodeId one = x.constant(1);
  NodeId two = x.constant(2);
  NodeId four = x.constant(4);
  n.U = name("U", x.product({two, l, X, Y}));
  n.V = name("V", x.product({four, g, w, Y}));
  n.A = name("A", x.product({n.U, x.sum({n.V, one})}));
  n.B = name("B", x.sum({x.scale(2, X), one}));
  NodeId am2 = x.sum({n.A, x.constant(-2)});
  n.C = name("C", x.sum({n.B, x.product({am2, h})}));
  NodeId d = x.sum({x.power(n.A, 2), x.constant(-4)});
  NodeId c2 = x.power(n.C, 2);
  n.D = name("D", x.sum({x.product({d, c2}), four}));
  n.E = name("E", x.product({c2, n.D, xv}));
  NodeId e2 = x.power(n.E, 2);
  n.F = name("F", x.sum({x.product({four, d, e2}), one}));
  NodeId ap2 = x.sum({n.A, two});
  n.G = name("G", x.sum({one, x.product({n.C, n.D, n.F}), x.product({x.constant(-2), ap2, x.power(am2, 2), e2})}));
  NodeId twoy = x.sum({x.scale(2, y), x.constant(-1)});
  n.H = name("H", x.sum({n.C, x.product({n.B, n.F}), x.product({twoy, n.C, n.F})}));
  n.I = name("I", x.sum({x.product({x.sum({x.power(n.G, 2), x.constant(-1)}), x.power(n.H, 2)}), one}));
  NodeId u2v = x.product({x.power(n.U, 2), n.V});
  n.J = name("J", x.sum({X, one, x.product({k, x.sum({u2v, x.constant(-2)})})}));
  return n;
}

}  // namespace dforge::bridge
