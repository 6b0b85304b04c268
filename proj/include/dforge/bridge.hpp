#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "dforge/bigint.hpp"
#include "dforge/polyexpr.hpp"

namespace dforge::bridge {

struct BridgeInputs {
  BigInt X, Y, b, g, h, k, l, w, x, y;
};

struct BridgeVars {
  BigInt U, V, A, B, C, D, E, F, G, H, I, J;
};

BridgeVars bridge_vars(const BridgeInputs& in);

// The divisibility relation reads (2A - 5) | (3bwC - 2(b^2 w^2 - 1)).
BigInt divisibility_modulus(const BridgeVars& v);
BigInt divisibility_target(const BridgeVars& v, const BridgeInputs& in);

struct RelationReport {
  bool dfi_square = false;
  bool uvk_square = false;
  bool divisibility = false;
  std::optional<bool> ineq_g;     // 16 g^2 (C - lJY)^2 < J^2
  std::optional<bool> ineq_weak;  // 4 (C - lJY)^2 < J^2

  nlohmann::json to_json() const;
};

struct RelationRequest {
  bool ineq_g = true;
  bool ineq_weak = true;
};

// Throws DomainError naming the relation when an inequality is requested with J = 0,
// or the g inequality with g = 0.
RelationReport relations_check(const BridgeVars& v, const BridgeInputs& in, const RelationRequest& req = {});
RelationReport relations_check(const BridgeInputs& in, const RelationRequest& req = {});

struct PartialWitness {
  BigInt w;
  BigInt floor_rho;
  std::optional<BigInt> l;
  std::optional<BigInt> h;
  std::optional<BigInt> k;
};

struct WitnessLimits {
  // Largest bit length allowed for floor_rho and for the Lucas values behind h and k.
  std::uint64_t max_bits = std::uint64_t{1} << 27;
  // Largest X for which Y | binom(2X, X) is checked through the binomial itself when Y is not a power of two.
  std::uint64_t max_binomial_x = 100000;
};

// Forward construction of w, l, h, k. x and y are not produced.
// Throws PreconditionError on hypothesis violations and ResourceError past the limits.
PartialWitness partial_witness(const BigInt& b, const BigInt& X, const BigInt& Y, const BigInt& g,
                               const WitnessLimits& limits = {});

struct BridgeNodes {
  NodeId U, V, A, B, C, D, E, F, G, H, I, J;
};

// Symbolic U..J over the given X, Y, g nodes and fresh variables h, k, l, w, x, y.
// Aliases are "<prefix>U" ... "<prefix>J".
BridgeNodes build_bridge(ExprBuilder& x, NodeId X, NodeId Y, NodeId g, const std::string& prefix = "bridge.");

inline const char* const kBridgeNames[] = {"U", "V", "A", "B", "C", "D", "E", "F", "G", "H", "I", "J"};

}  // namespace dforge::bridge
