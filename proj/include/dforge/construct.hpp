#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dforge/bigint.hpp"
#include "dforge/bridge.hpp"
#include "dforge/coding.hpp"
#include "dforge/mpoly.hpp"
#include "dforge/polyexpr.hpp"

namespace dforge::construct {

struct ConstructNodes {
  coding::FamilyNodes family;
  bridge::BridgeNodes bridge;
  NodeId A1, A2, A3, S_div, T_div, R_pos, mu;
  NodeId n;        // the variable n
  NodeId n_tilde;  // z9^2 + z10^2 + z11^2 + z11
  NodeId Q;        // M_3(A1, A2, A3, S, T, R, n), alias "Q"
  NodeId Q_tilde;  // same head over n_tilde, alias "Q_tilde"
};

// Builds both heads over one shared graph. P is made suitable for coding first.
ConstructNodes build_construction(ExprBuilder& builder, const MultiPoly& p);

// Variables a, f, g, h, k, l, w, x, y, n.
PolyExpr build_Q(const MultiPoly& p);
// Variables a, f, g, h, k, l, w, x, y, z9, z10, z11.
PolyExpr build_Q_tilde(const MultiPoly& p);

// Unknowns in construction order.
const std::vector<std::string>& q_unknowns();
const std::vector<std::string>& q_tilde_unknowns();

// 15616 + 233856 d + 233952 d (2d+1)^(nu+1) + 467712 d^2 (2d+1)^(nu+1). Requires nu, delta >= 1.
BigInt eta(std::uint64_t nu, std::uint64_t delta);

struct UniversalPair {
  unsigned unknowns = 11;
  BigInt degree;
  std::string to_string() const;
};

UniversalPair universal_pair(std::uint64_t nu, std::uint64_t delta);

struct ThreeSquares {
  BigInt x, y, z;
};

// n = x^2 + y^2 + z^2 + z with x, y, z >= 0; minimal z, then minimal y.
ThreeSquares three_squares(const BigInt& n);

// Degree-tracker values of every named node next to the closed forms at
// delta' = 2 delta, nu' = nu + 1.
nlohmann::json degree_report(const MultiPoly& p);

// Dense polynomial in a, z1..z_nu with every monomial of degree <= delta, all coefficients 1.
MultiPoly dense_polynomial(std::size_t nu, std::uint64_t delta);

void register_rules(CustomRegistry& registry);

}  // namespace dforge::construct
