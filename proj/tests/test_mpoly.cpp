#include "doctest.h"

#include <random>

#include "dforge/errors.hpp"
#include "dforge/mpoly.hpp"
#include "dforge/polyexpr.hpp"

using namespace dforge;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> ex(0, max_exp);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiIndex m;
    for (const auto& v : vars) m = m * MultiIndex::of(v, static_cast<std::uint64_t>(ex(rng)));
    p.add_term(m, coef(rng));
  }
  return p;
}

Point random_point(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<long> d(-20, 20);
  Point pt;
  for (const auto& v : vars) pt[v] = d(rng);
  return pt;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  MultiPoly x = var("x");
  MultiPoly y = var("y");
  CHECK((x + 1) * (x - 1) == pow(x, 2) - 1);
  CHECK(pow(x + y, 0) == MultiPoly(1));
  MultiPoly t = 2 * pow(var("a"), 2) * var("z");
  CHECK((t + (-t)).is_zero());
  CHECK((t + (-t)).size() == 0);
}

TEST_CASE("substitution examples") {
  CHECK(substitute(var("z") + 1, {{"z", pow(var("y"), 2)}}) == pow(var("y"), 2) + 1);
  MultiPoly sq = pow(var("z9"), 2) + pow(var("z10"), 2) + pow(var("z11"), 2) + var("z11");
  CHECK(substitute(var("n"), {{"n", sq}}) == sq);
  CHECK(substitute(pow(var("x"), 2), {{"x", var("x") + 1}}) == pow(var("x"), 2) + 2 * var("x") + 1);
  // Simultaneous, not sequential.
  CHECK(substitute(var("x") + 2 * var("y"), {{"x", var("y")}, {"y", var("x")}}) == var("y") + 2 * var("x"));
}

TEST_CASE("evaluation examples") {
  CHECK(evaluate(var("a") + 1 - var("z"), {{"a", 2}, {"z", 3}}) == 0);
  CHECK(evaluate(pow(var("x"), 2) - 1, {{"x", 0}}) == -1);
  MultiPoly p = pow(var("a") - var("z1"), 2) + pow(var("z2") - 1, 2);
  CHECK(evaluate(p, {{"a", 5}, {"z1", 5}, {"z2", 1}}) == 0);
  try {
    evaluate(p, {{"a", 5}, {"z1", 5}});
    FAIL("expected UnboundVariable");
  } catch (const UnboundVariable& e) {
    CHECK(e.name() == "z2");
  }
}

TEST_CASE("total degree examples") {
  MultiPoly a = var("a");
  MultiPoly z = var("z");
  CHECK(total_degree(3 * pow(a, 2) * z - 2 * pow(z, 3)) == 3);
  CHECK(total_degree(MultiPoly(5)) == 0);
  CHECK(total_degree(pow(a + 1 - var("z1"), 2) + pow(var("z2") - 1, 2)) == 2);
  CHECK_THROWS_AS(total_degree(MultiPoly()), DomainError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  std::vector<std::string> vars{"a", "z1", "z2"};
  for (int i = 0; i < 40; ++i) {
    MultiPoly p = random_poly(rng, vars, 4, 2);
    MultiPoly q = random_poly(rng, vars, 4, 2);
    MultiPoly r = random_poly(rng, vars, 3, 2);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
    MultiPoly pq = p * q;
    for (const auto& [m, c] : pq.terms()) CHECK(c != 0);
  }
}

TEST_CASE("evaluate after substitute equals composed evaluation") {
  std::mt19937_64 rng(11);
  std::vector<std::string> vars{"x", "y"};
  for (int i = 0; i < 40; ++i) {
    MultiPoly p = random_poly(rng, vars, 4, 3);
    MultiPoly sx = random_poly(rng, {"u", "v"}, 3, 2);
    MultiPoly sy = random_poly(rng, {"u", "v"}, 3, 2);
    Point pt = random_point(rng, {"u", "v"});
    Point inner{{"x", evaluate(sx, pt)}, {"y", evaluate(sy, pt)}};
    CHECK(evaluate(substitute(p, {{"x", sx}, {"y", sy}}), pt) == evaluate(p, inner));
  }
}

TEST_CASE("natural variable ordering and printing") {
  CHECK(natural_less("z2", "z10"));
  CHECK_FALSE(natural_less("z10", "z2"));
  CHECK(natural_less("a", "z1"));
  MultiPoly p = 3 * pow(var("a"), 2) * var("z1") - 2 * pow(var("z1"), 3);
  CHECK(to_string(p) == "3*a^2*z1 - 2*z1^3");
  CHECK(to_string(MultiPoly()) == "0");
  CHECK(to_string(var("a") + 1 - var("z1")) == "a - z1 + 1");
  CHECK(p.variables() == std::vector<std::string>{"a", "z1"});
}

TEST_CASE("json round trip") {
  MultiPoly p = pow(var("a") - var("z10"), 3) + from_decimal("123456789012345678901234567890") * var("z2");
  nlohmann::json doc = to_json(p);
  CHECK(doc["terms"][0]["coef"].is_string());
  CHECK(multipoly_from_json(doc) == p);
  CHECK(multipoly_from_json(nlohmann::json::parse(doc.dump())) == p);
  CHECK_THROWS_AS(multipoly_from_json(nlohmann::json{{"terms", 3}}), DomainError);
}

TEST_CASE("term budget") {
  MultiPoly s = var("x") + var("y") + var("z") + 1;
  {
    TermBudgetGuard guard(10);
    CHECK_THROWS_AS(pow(s, 4), ResourceError);
  }
  CHECK(pow(s, 4).size() == 35);
  {
    TermBudgetGuard outer(100);
    TermBudgetGuard inner(1000);
    CHECK(TermBudgetGuard::active() == std::size_t{100});
  }
  CHECK_FALSE(TermBudgetGuard::active().has_value());
}

TEST_CASE("expression DAG evaluation") {
  ExprBuilder b;
  NodeId x = b.variable("x");
  NodeId x1 = b.add(x, b.constant(1));
  NodeId sq = b.mul(x1, b.add(x, b.constant(1)));
  CHECK(x1 == b.add(x, b.constant(1)));  // shared
  PolyExpr e = b.build(sq);
  CHECK(expr_evaluate(e, {{"x", 2}}) == 9);
  CHECK_THROWS_AS(expr_evaluate(e, {}), UnboundVariable);

  ExprBuilder c;
  NodeId a = c.variable("a");
  NodeId f = c.variable("f");
  NodeId bb = c.named("b", c.add(c.constant(1), c.product({c.constant(3), c.add(c.scale(2, a), c.constant(1)), f})));
  PolyExpr be = c.build(bb);
  CHECK(expr_evaluate(be, {{"a", 0}, {"f", 1}}) == 4);
  CHECK(expr_degree(be) == 2);
  CHECK_THROWS_AS(c.named("b", a), DomainError);
}

TEST_CASE("expression DAG degree and expansion") {
  ExprBuilder b;
  NodeId x = b.variable("x");
  PolyExpr e = b.build(b.power(b.add(x, b.constant(1)), 2));
  CHECK(expr_expand(e, 10) == pow(var("x"), 2) + 2 * var("x") + 1);
  CHECK(expr_degree(e) == 2);
  CHECK_THROWS_AS(expr_degree(b.build(b.constant(0))), DomainError);
  CHECK(expr_degree(b.build(b.constant(5))) == 0);
  // Cancellation: the tracker is an upper bound.
  PolyExpr c = b.build(b.sub(b.power(x, 3), b.power(x, 3)));
  CHECK(expr_degree(c) == 3);
  CHECK(expr_expand(c, 10).is_zero());
  PolyExpr big = b.build(b.power(b.sum({x, b.variable("y"), b.variable("z"), b.constant(1)}), 20));
  CHECK_THROWS_AS(expr_expand(big, 100), ResourceError);
}

TEST_CASE("random DAGs evaluate like their expansion") {
  std::mt19937_64 rng(3);
  std::vector<std::string> vars{"a", "z1", "z2"};
  for (int i = 0; i < 30; ++i) {
    ExprBuilder b;
    std::vector<NodeId> pool;
    for (const auto& v : vars) pool.push_back(b.variable(v));
    pool.push_back(b.constant(static_cast<long>(rng() % 7) - 3));
    for (int k = 0; k < 8; ++k) {
      NodeId l = pool[rng() % pool.size()];
      NodeId r = pool[rng() % pool.size()];
      switch (rng() % 3) {
        case 0: pool.push_back(b.add(l, r)); break;
        case 1: pool.push_back(b.mul(l, r)); break;
        default: pool.push_back(b.power(l, static_cast<long>(rng() % 3))); break;
      }
    }
    PolyExpr e = b.build(pool.back());
    MultiPoly p = expr_expand(e, 100000);
    Point pt = random_point(rng, vars);
    CHECK(expr_evaluate(e, pt) == evaluate(p, pt));
    if (!p.is_zero()) CHECK(expr_degree(e) >= total_degree(p));
  }
}

TEST_CASE("expression json round trip") {
  ExprBuilder b;
  NodeId x = b.variable("x");
  NodeId n = b.named("sq", b.power(b.sub(x, b.constant(from_decimal("99999999999999999999"))), 2));
  PolyExpr e = b.build(b.mul(n, b.variable("y")));
  PolyExpr back = polyexpr_from_json(nlohmann::json::parse(to_json(e).dump()));
  Point pt{{"x", 3}, {"y", -4}};
  CHECK(expr_evaluate(back, pt) == expr_evaluate(e, pt));
  CHECK(back.find("sq").has_value());
  CHECK(back.variables() == std::vector<std::string>{"x", "y"});
}
