#include "dforge/construct.hpp"

#include <functional>

#include "dforge/combine.hpp"
#include "dforge/errors.hpp"

namespace dforge::construct {

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

}  // namespace

ConstructNodes build_construction(ExprBuilder& x, const MultiPoly& p) {
  auto src = std::make_shared<const coding::CodingSource>(p, true);
  ConstructNodes c{};
  c.family = coding::build_family(x, src);
  const auto& fam = c.family;
  c.bridge = bridge::build_bridge(x, fam.X, fam.Y, fam.g);
  const auto& br = c.bridge;

  NodeId four = x.constant(4);
  NodeId w = x.variable("w"), l = x.variable("l"), xv = x.variable("x");

  c.A1 = x.named("construct.A1", fam.b);
  c.A2 = x.named("construct.A2", x.product({br.D, br.F, br.I}));
  NodeId uv = x.product({x.power(br.U, 4), x.power(br.V, 2)});
  c.A3 = x.named("construct.A3",
                 x.sum({x.product({x.sum({uv, x.constant(-4)}), x.power(br.J, 2)}), four}));
  c.S_div = x.named("construct.S", x.sum({x.scale(2, br.A), x.constant(-5)}));
  NodeId bw = x.product({fam.b, w});
  c.T_div = x.named("construct.T", x.sum({x.product({x.constant(3), bw, br.C}),
                                          x.scale(-2, x.sum({x.power(bw, 2), x.constant(-1)}))}));

  const BigInt d = big(src->delta());
  const BigInt alpha = d * pow(d + 1, src->nu()) + 1;
  c.mu = x.named("construct.mu", x.product({fam.gamma, x.power(fam.b, alpha)}));

  NodeId mu3 = x.power(c.mu, 3);
  NodeId j2 = x.power(br.J, 2);
  NodeId gap = x.sub(br.C, x.product({l, br.J, fam.Y}));
  NodeId inner = x.sum({x.product({x.constant(32), x.power(gap, 2), mu3}), x.product({x.power(fam.g, 2), j2})});
  NodeId bracket = x.sub(x.product({x.constant(8), mu3, fam.g, j2}), x.product({x.power(fam.g, 2), inner}));
  c.R_pos = x.named("construct.R", x.product({x.power(fam.f, 2), x.power(l, 2), x.power(xv, 2), bracket}));

  c.n = x.variable("n");
  NodeId z9 = x.variable("z9"), z10 = x.variable("z10"), z11 = x.variable("z11");
  c.n_tilde = x.named("construct.n_tilde", x.sum({x.power(z9, 2), x.power(z10, 2), x.power(z11, 2), z11}));

  auto rule = combine::m_q_rule(3);
  c.Q = x.named("Q", x.custom(rule, {c.A1, c.A2, c.A3, c.S_div, c.T_div, c.R_pos, c.n}));
  c.Q_tilde = x.named("Q_tilde", x.custom(rule, {c.A1, c.A2, c.A3, c.S_div, c.T_div, c.R_pos, c.n_tilde}));
  return c;
}

PolyExpr build_Q(const MultiPoly& p) {
  ExprBuilder x;
  auto c = build_construction(x, p);
  return x.build(c.Q);
}

PolyExpr build_Q_tilde(const MultiPoly& p) {
  ExprBuilder x;
  auto c = build_construction(x, p);
  return x.build(c.Q_tilde);
}

const std::vector<std::string>& q_unknowns() {
  static const std::vector<std::string> v = {"f", "g", "h", "k", "l", "w", "x", "y", "n"};
  return v;
}

const std::vector<std::string>& q_tilde_unknowns() {
  static const std::vector<std::string> v = {"f", "g", "h", "k", "l", "w", "x", "y", "z9", "z10", "z11"};
  return v;
}

BigInt eta(std::uint64_t nu, std::uint64_t delta) {
  if (nu < 1 || delta < 1) throw DomainError("eta needs nu >= 1 and delta >= 1");
  const BigInt d = big(delta);
  const BigInt t = pow(2 * d + 1, nu + 1);
  return 15616 + 233856 * d + 233952 * d * t + 467712 * d * d * t;
}

std::string UniversalPair::to_string() const {
  return "(" + std::to_string(unknowns) + ", " + to_decimal(degree) + ")";
}

UniversalPair universal_pair(std::uint64_t nu, std::uint64_t delta) { return UniversalPair{11, eta(nu, delta)}; }

ThreeSquares three_squares(const BigInt& n) {
  if (n < 0) throw DomainError("three_squares needs n >= 0");
  for (BigInt z = 0;; ++z) {
    BigInt m = n - z * z - z;
    if (m < 0) break;
    for (BigInt y = 0; y * y <= m; ++y) {
      BigInt r = m - y * y;
      if (is_square(r)) return ThreeSquares{isqrt(r), y, z};
    }
  }
  throw InvariantViolation("no three-square representation found");
}

nlohmann::json degree_report(const MultiPoly& p) {
  ExprBuilder x;
  auto c = build_construction(x, p);
  coding::CodingSource src(p, true);
  const BigInt D = big(src.delta());
  const std::uint64_t V = src.nu();
  const BigInt pv = pow(D + 1, V);
  const BigInt p1 = pow(D + 1, V + 1);
  const BigInt dX = (1 + p1) * 12 * D;
  const BigInt dY = (1 + p1) * 8 * D;
  const BigInt alpha = D * pv + 1;

  const BigInt dS = 3 + dX + 2 * dY;
  const BigInt dR = 20 + 6 * alpha + 4 * dX + 8 * dY;
  const BigInt dA2 = 320 + 86 * dX + 172 * dY;
  const BigInt dQ = 8 * (2 * dS + dR + 6 * dA2);

  struct Row {
    std::string node;
    BigInt closed;
    bool upper_bound = false;
  };
  const std::vector<Row> rows = {
      {"coding.b", 2},
      {"coding.B", 2 * D},
      {"coding.M", (1 + pv) * 2 * D, true},
      {"coding.N0", (1 + pv) * 2 * D},
      {"coding.N1", ((2 * D + 1) * pv + 1) * 2 * D},
      {"coding.N", (1 + p1) * 4 * D},
      {"coding.c", 1 + 2 * D},
      {"coding.coeffs", p1 * 2 * D},
      {"coding.K", (1 + (2 * D + 1) * pv) * 2 * D},
      {"coding.S", (1 + p1) * 4 * D},
      {"coding.T", (2 + (D + 2) * pv) * 2 * D},
      {"coding.R", (1 + p1) * 8 * D},
      {"coding.X", dX},
      {"coding.Y", dY},
      {"bridge.U", 1 + dX + dY},
      {"bridge.V", 2 + dY},
      {"bridge.A", 3 + dX + 2 * dY},
      {"bridge.B", dX},
      {"bridge.C", 4 + dX + 2 * dY},
      {"bridge.D", 14 + 4 * dX + 8 * dY},
      {"bridge.E", 23 + 6 * dX + 12 * dY},
      {"bridge.F", 52 + 14 * dX + 28 * dY},
      {"bridge.G", 70 + 19 * dX + 38 * dY},
      {"bridge.H", 57 + 15 * dX + 30 * dY},
      {"bridge.I", 254 + 68 * dX + 136 * dY},
      {"bridge.J", 5 + 2 * dX + 3 * dY},
      {"construct.A1", 2},
      {"construct.A2", dA2},
      {"construct.A3", 18 + 8 * dX + 12 * dY},
      {"construct.S", dS},
      {"construct.T", 7 + dX + 2 * dY},
      {"construct.mu", 2 * alpha},
      {"construct.R", dR},
      {"construct.n_tilde", 2},
      {"Q", dQ},
      {"Q_tilde", dQ},
  };

  PolyExpr root = x.build(c.Q_tilde);
  nlohmann::json out;
  out["delta"] = src.delta();
  out["nu"] = V;
  out["unknowns"] = 11;
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& r : rows) {
    BigInt tracked = expr_degree(root.at(r.node));
    bool match = r.upper_bound ? tracked <= r.closed : tracked == r.closed;
    all = all && match;
    nlohmann::json row = {{"node", r.node},
                          {"tracker", to_decimal(tracked)},
                          {"closed_form", to_decimal(r.closed)},
                          {"match", match}};
    if (r.upper_bound) row["relation"] = "<=";
    list.push_back(std::move(row));
  }
  out["rows"] = std::move(list);
  out["all_match"] = all;
  return out;
}

MultiPoly dense_polynomial(std::size_t nu, std::uint64_t delta) {
  std::vector<VarId> vars;
  vars.push_back(intern_var("a"));
  for (std::size_t i = 1; i <= nu; ++i) vars.push_back(intern_var("z" + std::to_string(i)));
  MultiPoly out;
  const BigInt one = 1;
  std::vector<std::uint64_t> exps(vars.size(), 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i == vars.size()) {
      MultiIndex m;
      for (std::size_t j = 0; j < vars.size(); ++j) {
        if (exps[j] > 0) m = m * MultiIndex::of(vars[j], exps[j]);
      }
      out.add_term(m, one);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      exps[i] = e;
      rec(i + 1, left - e);
    }
    exps[i] = 0;
  };
  rec(0, delta);
  return out;
}

void register_rules(CustomRegistry& registry) {
  coding::register_rules(registry);
  combine::register_rules(registry);
}

}  // namespace dforge::construct
