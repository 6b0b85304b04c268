#include <random>
#include <string>

#include "dforge/coding.hpp"
#include "dforge/combine.hpp"
#include "dforge/construct.hpp"
#include "dforge/verify.hpp"

namespace dforge::verify {

using namespace dforge::construct;

namespace {

const char* const kEta58 = "1681043235226619916301182624511918527834137733707408448335539840";
const char* const kEta32 = "950817549694171759711025515571236610412597656252821888";

MultiPoly linear_example() { return MultiPoly::variable("a") + MultiPoly(1) - MultiPoly::variable("z1"); }

}  // namespace

std::vector<CaseSpec> construct_cases() {
  std::vector<CaseSpec> out;

  out.push_back({"eta-pairs", "eta(58, 4) and eta(32, 12) as exact decimals", [](CaseContext& c) {
                   c.check(to_decimal(eta(58, 4)) == kEta58, "eta(58, 4) = " + to_decimal(eta(58, 4)));
                   c.check(to_decimal(eta(32, 12)) == kEta32, "eta(32, 12) = " + to_decimal(eta(32, 12)));
                   c.check(eta(1, 1) == 6564448, "eta(1, 1)");
                   c.check(universal_pair(58, 4).to_string() == std::string("(11, ") + kEta58 + ")", "pair (58, 4)");
                   c.check(universal_pair(32, 12).to_string() == std::string("(11, ") + kEta32 + ")", "pair (32, 12)");
                 }});

  out.push_back({"degree-sweep", "expr_degree(Q tilde) = eta(nu, delta) for dense P, (nu, delta) in [1, 10]^2", [](CaseContext& c) {
                   for (std::size_t nu = 1; nu <= 10; ++nu) {
                     for (std::uint64_t d = 1; d <= 10; ++d) {
                       BigInt got = expr_degree(build_Q_tilde(dense_polynomial(nu, d)));
                       c.check_lazy(got == eta(nu, d), [&] {
                         return "(nu, delta) = (" + std::to_string(nu) + ", " + std::to_string(d) + "): " + to_decimal(got);
                       });
                     }
                   }
                 }});

  out.push_back({"appendix-expansion", "expanded coding family of (a + 1 - z1)^2 has the closed-form degrees at (delta', nu') = (2, 1)",
                 [](CaseContext& c) {
                   MultiPoly l = linear_example();
                   auto src = std::make_shared<const coding::CodingSource>(l * l, false);
                   c.check(src->delta() == 2 && src->nu() == 1, "source is not at (2, 1)");
                   const BigInt D = 2, p = 3, p1 = 9;
                   struct Row {
                     const char* name;
                     BigInt closed;
                     bool upper = false;
                   };
                   const std::vector<Row> rows = {
                       {"b", 2},
                       {"B", 2 * D},
                       {"M", (1 + p) * 2 * D, true},
                       {"N0", (1 + p) * 2 * D},
                       {"N1", ((2 * D + 1) * p + 1) * 2 * D},
                       {"N", (1 + p1) * 4 * D},
                       {"c", 1 + 2 * D},
                       {"coeffs", p1 * 2 * D},
                       {"K", (1 + (2 * D + 1) * p) * 2 * D},
                       {"S", (1 + p1) * 4 * D},
                       {"T", (2 + (D + 2) * p) * 2 * D},
                       {"R", (1 + p1) * 8 * D},
                       {"X", (1 + p1) * 12 * D},
                       {"Y", (1 + p1) * 8 * D},
                   };
                   ExprBuilder x;
                   auto fam = coding::build_family(x, src);
                   PolyExpr e = x.build(fam.X);
                   std::vector<std::string> names;
                   for (const auto& r : rows) names.push_back(std::string("coding.") + r.name);
                   auto expanded = expr_expand_named(e, names, 50000000);
                   for (std::size_t i = 0; i < rows.size(); ++i) {
                     BigInt total(std::to_string(total_degree(expanded.at(names[i]))));
                     BigInt tracked = expr_degree(e.at(names[i]));
                     bool ok = rows[i].upper ? total <= rows[i].closed : total == rows[i].closed;
                     c.check(ok, names[i] + ": expanded degree " + to_decimal(total) + ", closed form " + to_decimal(rows[i].closed));
                     c.check(tracked >= total, names[i] + ": tracker below the expanded degree");
                   }
                   c.check(total_degree(expanded.at("coding.X")) == 240, "deg X != 240");
                   c.check(total_degree(expanded.at("coding.Y")) == 160, "deg Y != 160");
                   c.check(total_degree(expanded.at("coding.T")) == 56, "deg T != 56");
                   c.check(total_degree(expanded.at("coding.R")) == 160, "deg R != 160");
                 }});

  out.push_back({"three-squares", "n = x^2 + y^2 + z^2 + z with x, y, z >= 0 for every n <= 10^4", [](CaseContext& c) {
                   for (long n = 0; n <= 10000; ++n) {
                     ThreeSquares t = three_squares(n);
                     c.check_lazy(t.x >= 0 && t.y >= 0 && t.z >= 0 && t.x * t.x + t.y * t.y + t.z * t.z + t.z == n,
                                  [&] { return "n = " + std::to_string(n); });
                   }
                   ThreeSquares seven = three_squares(7);
                   c.check(seven.x == 2 && seven.y == 1 && seven.z == 1, "n = 7 is not (2, 1, 1)");
                 }});

  out.push_back({"degree-report", "every tracked degree matches its closed form for the linear example and a dense P",
                 [](CaseContext& c) {
                   for (const MultiPoly& p : {linear_example(), dense_polynomial(3, 2)}) {
                     nlohmann::json rep = degree_report(p);
                     for (const auto& row : rep["rows"]) c.check(row["match"] == true, row.dump());
                   }
                 }});

  out.push_back({"composition", "Q against m_q_eval of its arguments, and Q tilde against Q with n substituted, at max (100) points",
                 [](CaseContext& c) {
                   ExprBuilder x;
                   ConstructNodes nodes = build_construction(x, linear_example());
                   PolyExpr q = x.build(nodes.Q), qt = x.build(nodes.Q_tilde);
                   const std::vector<std::string> args = {"construct.A1", "construct.A2", "construct.A3",
                                                          "construct.S",  "construct.T",  "construct.R"};
                   std::mt19937_64 rng(c.seed());
                   std::uniform_int_distribution<long> coord(-1000, 1000);
                   const std::uint64_t points = c.max_or(100);
                   for (std::uint64_t i = 0; i < points; ++i) {
                     Point pt;
                     for (const char* v : {"a", "f", "g", "h", "k", "l", "w", "x", "y", "z9", "z10", "z11"}) pt[v] = coord(rng);
                     Point qpt = pt;
                     qpt.erase("z9");
                     qpt.erase("z10");
                     qpt.erase("z11");
                     qpt["n"] = pt["z9"] * pt["z9"] + pt["z10"] * pt["z10"] + pt["z11"] * pt["z11"] + pt["z11"];
                     BigInt q_value = expr_evaluate(q, qpt);
                     auto v = expr_evaluate_named(q, args, qpt);
                     BigInt independent = combine::m_q_eval(3, {v["construct.A1"], v["construct.A2"], v["construct.A3"]},
                                                            v["construct.S"], v["construct.T"], v["construct.R"], qpt["n"]);
                     c.check(q_value == independent, "Q != M_3(A1, A2, A3, S, T, R, n) at point " + std::to_string(i));
                     c.check(expr_evaluate(qt, pt) == q_value, "Q tilde != Q(n = z9^2 + z10^2 + z11^2 + z11) at point " + std::to_string(i));
                   }
                 }});

  return out;
}

}  // namespace dforge::verify
