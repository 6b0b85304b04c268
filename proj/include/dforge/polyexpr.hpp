#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "dforge/bigint.hpp"
#include "dforge/mpoly.hpp"

namespace dforge {

using NodeId = std::uint32_t;

enum class NodeKind { constant, variable, sum, product, power, named, custom };

const char* node_kind_name(NodeKind kind);

// A degree of std::nullopt stands for the zero polynomial (degree -infinity).
using Degree = std::optional<BigInt>;

// Node with its own evaluation, degree and expansion rules. Used for
// quantities that cannot be spelled out with the basic node kinds at
// realistic sizes (sums with astronomically many terms, lazily computed
// constants, the relation-combining product).
class CustomRule {
 public:
  virtual ~CustomRule() = default;
  virtual std::string kind() const = 0;
  virtual BigInt evaluate(const std::vector<BigInt>& args) const = 0;
  virtual Degree degree(const std::vector<Degree>& args) const = 0;
  virtual MultiPoly expand(const std::vector<MultiPoly>& args) const = 0;
  virtual nlohmann::json params() const = 0;
};

struct ExprNode {
  NodeKind kind = NodeKind::constant;
  std::vector<NodeId> args;
  BigInt value;      // constant value, or exponent of a power node
  std::string name;  // variable name, or alias of a named node
  std::shared_ptr<const CustomRule> rule;
};

// Immutable view of a shared composition DAG, rooted at one node.
class PolyExpr {
 public:
  PolyExpr() = default;

  NodeId root() const { return root_; }
  const ExprNode& node(NodeId id) const { return graph_->nodes.at(id); }
  std::size_t graph_size() const { return graph_ ? graph_->nodes.size() : 0; }

  // Same graph re-rooted at the named alias.
  std::optional<PolyExpr> find(const std::string& name) const;
  PolyExpr at(const std::string& name) const;
  PolyExpr with_root(NodeId id) const;
  // Aliases reachable from the root, in node order.
  std::vector<std::string> names() const;

  // Variables reachable from the root, natural order.
  std::vector<std::string> variables() const;

 private:
  friend class ExprBuilder;
  struct Graph {
    std::vector<ExprNode> nodes;
    std::map<std::string, NodeId> aliases;
  };
  PolyExpr(std::shared_ptr<const Graph> graph, NodeId root) : graph_(std::move(graph)), root_(root) {}

  std::shared_ptr<const Graph> graph_;
  NodeId root_ = 0;
};

// Appends nodes to a growing graph. Structurally identical nodes are shared.
class ExprBuilder {
 public:
  ExprBuilder();

  NodeId constant(const BigInt& c);
  NodeId variable(const std::string& name);
  NodeId sum(std::vector<NodeId> args);
  NodeId product(std::vector<NodeId> args);
  NodeId power(NodeId base, const BigInt& exponent);
  // Throws DomainError if the alias already exists.
  NodeId named(const std::string& name, NodeId child);
  NodeId custom(std::shared_ptr<const CustomRule> rule, std::vector<NodeId> args);

  NodeId add(NodeId lhs, NodeId rhs) { return sum({lhs, rhs}); }
  NodeId sub(NodeId lhs, NodeId rhs);
  NodeId mul(NodeId lhs, NodeId rhs) { return product({lhs, rhs}); }
  NodeId neg(NodeId x);
  NodeId scale(const BigInt& c, NodeId x) { return product({constant(c), x}); }

  // Copies the subgraph of `e` into this builder; returns the new root.
  NodeId import(const PolyExpr& e);
  // Copies a MultiPoly as a sum of monomial products.
  NodeId import(const MultiPoly& p);

  std::optional<NodeId> lookup(const std::string& alias) const;

  PolyExpr build(NodeId root) const;

 private:
  NodeId intern(ExprNode node);

  std::shared_ptr<PolyExpr::Graph> graph_;
  std::unordered_map<std::string, NodeId> dedup_;
};

struct EvalLimits {
  // Largest bit length a power node may produce.
  std::uint64_t max_bits = std::uint64_t{1} << 32;
};

// Exact bottom-up evaluation; memoization is local to the call.
BigInt expr_evaluate(const PolyExpr& e, const Point& point, const EvalLimits& limits = {});

// Values of several aliases from one shared evaluation pass.
std::map<std::string, BigInt> expr_evaluate_named(const PolyExpr& e, const std::vector<std::string>& aliases,
                                                  const Point& point, const EvalLimits& limits = {});

// Compositional degree bound. Throws DomainError if e is the zero constant.
BigInt expr_degree(const PolyExpr& e);
Degree expr_degree_or_zero(const PolyExpr& e);

// Full expansion; throws ResourceError once any intermediate exceeds term_budget terms.
MultiPoly expr_expand(const PolyExpr& e, std::size_t term_budget);

// Expansions of several aliases from one shared pass.
std::map<std::string, MultiPoly> expr_expand_named(const PolyExpr& e, const std::vector<std::string>& aliases,
                                                   std::size_t term_budget);

using CustomFactory = std::function<std::shared_ptr<const CustomRule>(const nlohmann::json& params)>;
using CustomRegistry = std::map<std::string, CustomFactory>;

nlohmann::json to_json(const PolyExpr& e);
PolyExpr polyexpr_from_json(const nlohmann::json& doc, const CustomRegistry& registry = {});

}  // namespace dforge
