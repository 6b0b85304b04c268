#include "doctest.h"

#include <chrono>
#include <random>

#include "dforge/bridge.hpp"
#include "dforge/coding.hpp"
#include "dforge/combine.hpp"
#include "dforge/construct.hpp"
#include "dforge/errors.hpp"

using namespace dforge;
using namespace dforge::construct;

namespace {

MultiPoly linear_example() {
  return MultiPoly::variable("a") + MultiPoly(1) - MultiPoly::variable("z1");
}

const std::vector<std::string> kHeadArgs = {"construct.A1", "construct.A2", "construct.A3", "construct.S",
                                            "construct.T",  "construct.R"};

Point sample_point(std::mt19937_64& rng, long small_range, long range) {
  std::uniform_int_distribution<long> s(-small_range, small_range), r(-range, range);
  std::uniform_int_distribution<long> a(0, 3);
  Point pt;
  pt["a"] = a(rng);
  pt["f"] = s(rng);
  pt["g"] = s(rng);
  for (const char* v : {"h", "k", "l", "w", "x", "y", "n", "z9", "z10", "z11"}) pt[v] = r(rng);
  return pt;
}

}  // namespace

TEST_CASE("eta closed form") {
  CHECK(eta(1, 1) == 6564448);
  CHECK(to_decimal(eta(58, 4)) == "1681043235226619916301182624511918527834137733707408448335539840");
  CHECK(to_decimal(eta(32, 12)) == "950817549694171759711025515571236610412597656252821888");
  CHECK_THROWS_AS(eta(0, 4), DomainError);
  CHECK_THROWS_AS(eta(4, 0), DomainError);
  CHECK(universal_pair(1, 1).to_string() == "(11, 6564448)");
  CHECK(universal_pair(58, 4).unknowns == 11);
}

TEST_CASE("eta is increasing in both arguments") {
  for (std::uint64_t nu = 1; nu <= 8; ++nu) {
    for (std::uint64_t d = 1; d <= 8; ++d) {
      CHECK(eta(nu + 1, d) > eta(nu, d));
      CHECK(eta(nu, d + 1) > eta(nu, d));
    }
  }
}

TEST_CASE("three squares examples") {
  auto t = three_squares(7);
  CHECK(t.x == 2);
  CHECK(t.y == 1);
  CHECK(t.z == 1);
  t = three_squares(2);
  CHECK(t.x == 1);
  CHECK(t.y == 1);
  CHECK(t.z == 0);
  t = three_squares(0);
  CHECK(t.x == 0);
  CHECK(t.y == 0);
  CHECK(t.z == 0);
  CHECK_THROWS_AS(three_squares(-1), DomainError);
}

TEST_CASE("three squares covers every n up to 10^4 with the minimal choice") {
  for (long n = 0; n <= 10000; ++n) {
    auto t = three_squares(n);
    REQUIRE(t.x >= 0);
    REQUIRE(t.y >= 0);
    REQUIRE(t.z >= 0);
    REQUIRE(t.x * t.x + t.y * t.y + t.z * t.z + t.z == n);
    if (n > 2000) continue;
    // No representation with a smaller z, none with the same z and a smaller y.
    for (long z = 0; z <= t.z.get_si(); ++z) {
      long m = n - z * z - z;
      long ylim = z == t.z.get_si() ? t.y.get_si() : m;
      for (long y = 0; y * y <= m && y < ylim; ++y) {
        CHECK_FALSE(is_square(BigInt(m - y * y)));
      }
    }
  }
}

TEST_CASE("degree report at the linear example") {
  auto rep = degree_report(linear_example());
  CHECK(rep["delta"] == 2);
  CHECK(rep["nu"] == 2);
  CHECK(rep["all_match"] == true);
  bool saw_q = false;
  for (const auto& row : rep["rows"]) {
    CHECK_MESSAGE(row["match"] == true, row.dump());
    if (row["node"] == "Q_tilde") {
      CHECK(row["tracker"] == "6564448");
      saw_q = true;
    }
    if (row["node"] == "coding.X") CHECK(row["tracker"] == "672");
    if (row["node"] == "coding.Y") CHECK(row["tracker"] == "448");
  }
  CHECK(saw_q);
}

TEST_CASE("degree of Q and Q tilde equals eta for dense polynomials") {
  for (std::size_t nu = 1; nu <= 4; ++nu) {
    for (std::uint64_t d = 1; d <= 4; ++d) {
      MultiPoly p = dense_polynomial(nu, d);
      CHECK(expr_degree(build_Q_tilde(p)) == eta(nu, d));
      CHECK(expr_degree(build_Q(p)) == eta(nu, d));
    }
  }
  auto rep = degree_report(dense_polynomial(3, 2));
  CHECK(rep["all_match"] == true);
}

TEST_CASE("dense polynomial shape") {
  MultiPoly p = dense_polynomial(2, 3);
  CHECK(p.size() == 20);
  CHECK(total_degree(p) == 3);
  CHECK(p.constant_term() == 1);
  CHECK(p.variables() == std::vector<std::string>{"a", "z1", "z2"});
}

TEST_CASE("Q variables") {
  PolyExpr q = build_Q(linear_example());
  auto vars = q.variables();
  std::vector<std::string> expected = {"a"};
  for (const auto& v : q_unknowns()) expected.push_back(v);
  std::sort(expected.begin(), expected.end(), [](const auto& l, const auto& r) { return natural_less(l, r); });
  CHECK(vars == expected);
  CHECK(build_Q_tilde(linear_example()).variables().size() == 12);
  CHECK(q_tilde_unknowns().size() == 11);
}

TEST_CASE("Q head agrees with m_q_eval on its arguments") {
  PolyExpr q = build_Q(linear_example());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3; ++i) {
    Point pt = sample_point(rng, 2, 20);
    pt.erase("z9");
    pt.erase("z10");
    pt.erase("z11");
    auto names = kHeadArgs;
    names.push_back("Q");
    auto vals = expr_evaluate_named(q, names, pt);
    BigInt expected = combine::m_q_eval(3, {vals["construct.A1"], vals["construct.A2"], vals["construct.A3"]},
                                        vals["construct.S"], vals["construct.T"], vals["construct.R"], pt["n"]);
    CHECK(vals["Q"] == expected);
  }
}

TEST_CASE("symbolic arguments agree with the numeric coding and bridge modules") {
  MultiPoly p = linear_example();
  MultiPoly pbar = coding::make_suitable(p);
  PolyExpr q = build_Q(p);
  Point pt = {{"a", 1}, {"f", 5}, {"g", 3}, {"h", 2}, {"k", -1}, {"l", 3}, {"w", 2}, {"x", -2}, {"y", 4}, {"n", 5}};
  auto fam = coding::family_eval(pbar, pt["a"], pt["f"], pt["g"]);
  bridge::BridgeInputs in{fam.X, fam.Y, fam.b, pt["g"], pt["h"], pt["k"], pt["l"], pt["w"], pt["x"], pt["y"]};
  auto v = bridge::bridge_vars(in);
  auto ctx = coding::coding_constants(pbar);
  BigInt mu = ctx.gamma * pow(fam.b, to_u64(ctx.alpha));
  BigInt gap = v.C - in.l * v.J * in.Y;
  BigInt R = in.g * in.g;
  R = pt["f"] * pt["f"] * in.l * in.l * in.x * in.x *
      (8 * mu * mu * mu * in.g * v.J * v.J - R * (32 * gap * gap * mu * mu * mu + R * v.J * v.J));
  BigInt uv = v.U * v.U * v.U * v.U * v.V * v.V;

  auto names = kHeadArgs;
  names.push_back("construct.mu");
  auto vals = expr_evaluate_named(q, names, pt);
  CHECK(vals["construct.A1"] == fam.b);
  CHECK(vals["construct.A2"] == v.D * v.F * v.I);
  CHECK(vals["construct.A3"] == (uv - 4) * v.J * v.J + 4);
  CHECK(vals["construct.S"] == bridge::divisibility_modulus(v));
  CHECK(vals["construct.T"] == bridge::divisibility_target(v, in));
  CHECK(vals["construct.mu"] == mu);
  CHECK(vals["construct.R"] == R);
}

TEST_CASE("Q tilde is Q with n replaced by a sum of three squares") {
  MultiPoly p = linear_example();
  ExprBuilder x;
  auto c = build_construction(x, p);
  PolyExpr q = x.build(c.Q), qt = x.build(c.Q_tilde);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2; ++i) {
    Point pt = sample_point(rng, 2, 30);
    Point qpt = pt;
    qpt["n"] = pt["z9"] * pt["z9"] + pt["z10"] * pt["z10"] + pt["z11"] * pt["z11"] + pt["z11"];
    CHECK(expr_evaluate(qt, pt) == expr_evaluate(q, qpt));
  }
}

TEST_CASE("construction round-trips through JSON") {
  PolyExpr q = build_Q_tilde(linear_example());
  CustomRegistry reg;
  register_rules(reg);
  PolyExpr back = polyexpr_from_json(to_json(q), reg);
  CHECK(expr_degree(back) == 6564448);
  Point pt = {{"a", 0}, {"f", 0}, {"g", 1}, {"h", 1}, {"k", 1}, {"l", 1}, {"w", 1}, {"x", 1}, {"y", 1},
              {"z9", 1}, {"z10", 0}, {"z11", 2}};
  CHECK(expr_evaluate(back, pt) == expr_evaluate(q, pt));
}
