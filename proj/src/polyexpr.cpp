#include "dforge/polyexpr.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dforge/errors.hpp"

namespace dforge {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::constant: return "const";
    case NodeKind::variable: return "var";
    case NodeKind::sum: return "add";
    case NodeKind::product: return "mul";
    case NodeKind::power: return "pow";
    case NodeKind::named: return "named";
    case NodeKind::custom: return "custom";
  }
  return "?";
}

namespace {

std::optional<NodeKind> kind_from_name(const std::string& s) {
  for (NodeKind k : {NodeKind::constant, NodeKind::variable, NodeKind::sum, NodeKind::product, NodeKind::power,
                     NodeKind::named, NodeKind::custom}) {
    if (s == node_kind_name(k)) return k;
  }
  return std::nullopt;
}

// Post-order list of nodes reachable from any of the roots.
std::vector<NodeId> reachable_from(const PolyExpr& e, const std::vector<NodeId>& roots) {
  std::vector<NodeId> order;
  if (e.graph_size() == 0) return order;
  std::vector<char> state(e.graph_size(), 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  for (NodeId r : roots) {
    if (state[r] != 0) continue;
    state[r] = 1;
    stack.emplace_back(r, 0);
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      const ExprNode& n = e.node(id);
      if (next < n.args.size()) {
        NodeId child = n.args[next++];
        if (state[child] == 0) {
          state[child] = 1;
          stack.emplace_back(child, 0);
        }
        continue;
      }
      order.push_back(id);
      stack.pop_back();
    }
  }
  return order;
}

std::vector<NodeId> reachable(const PolyExpr& e) { return reachable_from(e, {e.root()}); }

}  // namespace

std::optional<PolyExpr> PolyExpr::find(const std::string& name) const {
  if (!graph_) return std::nullopt;
  auto it = graph_->aliases.find(name);
  if (it == graph_->aliases.end()) return std::nullopt;
  return PolyExpr(graph_, it->second);
}

PolyExpr PolyExpr::at(const std::string& name) const {
  auto found = find(name);
  if (!found) throw DomainError("no node named '" + name + "'");
  return *found;
}

PolyExpr PolyExpr::with_root(NodeId id) const {
  if (!graph_ || id >= graph_->nodes.size()) throw DomainError("node id out of range");
  return PolyExpr(graph_, id);
}

std::vector<std::string> PolyExpr::names() const {
  std::vector<NodeId> order = reachable(*this);
  std::sort(order.begin(), order.end());
  std::vector<std::string> out;
  for (NodeId id : order) {
    if (node(id).kind == NodeKind::named) out.push_back(node(id).name);
  }
  return out;
}

std::vector<std::string> PolyExpr::variables() const {
  std::vector<std::string> out;
  for (NodeId id : reachable(*this)) {
    if (node(id).kind == NodeKind::variable) out.push_back(node(id).name);
  }
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  return out;
}

ExprBuilder::ExprBuilder() : graph_(std::make_shared<PolyExpr::Graph>()) {}

NodeId ExprBuilder::intern(ExprNode node) {
  std::string key = node_kind_name(node.kind);
  key += '|';
  for (NodeId a : node.args) key += std::to_string(a) + ",";
  key += '|' + to_decimal(node.value) + '|' + node.name;
  if (node.rule) key += '|' + std::to_string(reinterpret_cast<std::uintptr_t>(node.rule.get()));
  auto it = dedup_.find(key);
  if (it != dedup_.end()) return it->second;
  auto id = static_cast<NodeId>(graph_->nodes.size());
  graph_->nodes.push_back(std::move(node));
  dedup_.emplace(std::move(key), id);
  return id;
}

NodeId ExprBuilder::constant(const BigInt& c) {
  ExprNode n;
  n.kind = NodeKind::constant;
  n.value = c;
  return intern(std::move(n));
}

NodeId ExprBuilder::variable(const std::string& name) {
  if (name.empty()) throw DomainError("empty variable name");
  ExprNode n;
  n.kind = NodeKind::variable;
  n.name = name;
  return intern(std::move(n));
}

NodeId ExprBuilder::sum(std::vector<NodeId> args) {
  if (args.empty()) return constant(0);
  if (args.size() == 1) return args.front();
  ExprNode n;
  n.kind = NodeKind::sum;
  n.args = std::move(args);
  return intern(std::move(n));
}

NodeId ExprBuilder::product(std::vector<NodeId> args) {
  if (args.empty()) return constant(1);
  if (args.size() == 1) return args.front();
  ExprNode n;
  n.kind = NodeKind::product;
  n.args = std::move(args);
  return intern(std::move(n));
}

NodeId ExprBuilder::power(NodeId base, const BigInt& exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  if (exponent == 1) return base;
  ExprNode n;
  n.kind = NodeKind::power;
  n.args = {base};
  n.value = exponent;
  return intern(std::move(n));
}

NodeId ExprBuilder::named(const std::string& name, NodeId child) {
  if (graph_->aliases.count(name) != 0) throw DomainError("duplicate node name '" + name + "'");
  ExprNode n;
  n.kind = NodeKind::named;
  n.args = {child};
  n.name = name;
  NodeId id = intern(std::move(n));
  graph_->aliases.emplace(name, id);
  return id;
}

NodeId ExprBuilder::custom(std::shared_ptr<const CustomRule> rule, std::vector<NodeId> args) {
  if (!rule) throw DomainError("null custom rule");
  ExprNode n;
  n.kind = NodeKind::custom;
  n.args = std::move(args);
  n.rule = std::move(rule);
  return intern(std::move(n));
}

NodeId ExprBuilder::sub(NodeId lhs, NodeId rhs) { return sum({lhs, neg(rhs)}); }

NodeId ExprBuilder::neg(NodeId x) {
  const ExprNode& n = graph_->nodes.at(x);
  if (n.kind == NodeKind::constant) return constant(-n.value);
  return product({constant(-1), x});
}

NodeId ExprBuilder::import(const PolyExpr& e) {
  std::map<NodeId, NodeId> mapped;
  for (NodeId id : reachable(e)) {
    const ExprNode& src = e.node(id);
    ExprNode copy = src;
    for (NodeId& a : copy.args) a = mapped.at(a);
    if (src.kind == NodeKind::named) {
      auto existing = lookup(src.name);
      if (existing) {
        mapped[id] = *existing;
        continue;
      }
      mapped[id] = named(src.name, copy.args.front());
      continue;
    }
    mapped[id] = intern(std::move(copy));
  }
  return mapped.at(e.root());
}

NodeId ExprBuilder::import(const MultiPoly& p) {
  std::vector<NodeId> terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<NodeId> factors;
    if (c != 1 || m.is_constant()) factors.push_back(constant(c));
    for (const auto& [v, e] : m.entries()) factors.push_back(power(variable(var_name(v)), BigInt(std::to_string(e))));
    terms.push_back(product(std::move(factors)));
  }
  return sum(std::move(terms));
}

std::optional<NodeId> ExprBuilder::lookup(const std::string& alias) const {
  auto it = graph_->aliases.find(alias);
  if (it == graph_->aliases.end()) return std::nullopt;
  return it->second;
}

PolyExpr ExprBuilder::build(NodeId root) const {
  if (root >= graph_->nodes.size()) throw DomainError("node id out of range");
  // Snapshot so later builder edits never alter an issued expression.
  auto snapshot = std::make_shared<PolyExpr::Graph>(*graph_);
  return PolyExpr(std::move(snapshot), root);
}

namespace {

std::vector<BigInt> evaluate_all(const PolyExpr& e, const std::vector<NodeId>& roots, const Point& point,
                                 const EvalLimits& limits) {
  std::vector<BigInt> memo(e.graph_size());
  for (NodeId id : reachable_from(e, roots)) {
    const ExprNode& n = e.node(id);
    BigInt out;
    switch (n.kind) {
      case NodeKind::constant:
        out = n.value;
        break;
      case NodeKind::variable: {
        auto it = point.find(n.name);
        if (it == point.end()) throw UnboundVariable(n.name);
        out = it->second;
        break;
      }
      case NodeKind::sum:
        out = 0;
        for (NodeId a : n.args) out += memo[a];
        break;
      case NodeKind::product:
        out = 1;
        for (NodeId a : n.args) {
          out *= memo[a];
          if (out == 0) break;
        }
        break;
      case NodeKind::power: {
        const BigInt& base = memo[n.args.front()];
        if (base == 0) {
          out = n.value == 0 ? 1 : 0;
        } else if (abs(base) == 1) {
          out = (base < 0 && mpz_odd_p(n.value.get_mpz_t()) != 0) ? -1 : 1;
        } else {
          BigInt bits = BigInt(std::to_string(bit_length(base) - 1)) * n.value;
          if (bits > BigInt(std::to_string(limits.max_bits))) {
            throw ResourceError("power node would exceed " + std::to_string(limits.max_bits) + " bits");
          }
          out = pow(base, to_u64(n.value));
        }
        break;
      }
      case NodeKind::named:
        out = memo[n.args.front()];
        break;
      case NodeKind::custom: {
        std::vector<BigInt> args;
        args.reserve(n.args.size());
        for (NodeId a : n.args) args.push_back(memo[a]);
        out = n.rule->evaluate(args);
        break;
      }
    }
    memo[id] = std::move(out);
  }
  return memo;
}

}  // namespace

BigInt expr_evaluate(const PolyExpr& e, const Point& point, const EvalLimits& limits) {
  return evaluate_all(e, {e.root()}, point, limits).at(e.root());
}

std::map<std::string, BigInt> expr_evaluate_named(const PolyExpr& e, const std::vector<std::string>& aliases,
                                                  const Point& point, const EvalLimits& limits) {
  std::map<std::string, BigInt> out;
  std::vector<NodeId> roots;
  for (const auto& name : aliases) roots.push_back(e.at(name).root());
  std::vector<BigInt> memo = evaluate_all(e, roots, point, limits);
  for (std::size_t i = 0; i < aliases.size(); ++i) out[aliases[i]] = memo[roots[i]];
  return out;
}

Degree expr_degree_or_zero(const PolyExpr& e) {
  std::vector<Degree> memo(e.graph_size());
  for (NodeId id : reachable(e)) {
    const ExprNode& n = e.node(id);
    Degree out;
    switch (n.kind) {
      case NodeKind::constant:
        if (n.value != 0) out = BigInt(0);
        break;
      case NodeKind::variable:
        out = BigInt(1);
        break;
      case NodeKind::sum:
        for (NodeId a : n.args) {
          if (memo[a] && (!out || *memo[a] > *out)) out = memo[a];
        }
        break;
      case NodeKind::product:
        out = BigInt(0);
        for (NodeId a : n.args) {
          if (!memo[a]) {
            out.reset();
            break;
          }
          *out += *memo[a];
        }
        break;
      case NodeKind::power:
        if (n.value == 0) {
          out = BigInt(0);
        } else if (memo[n.args.front()]) {
          out = *memo[n.args.front()] * n.value;
        }
        break;
      case NodeKind::named:
        out = memo[n.args.front()];
        break;
      case NodeKind::custom: {
        std::vector<Degree> args;
        for (NodeId a : n.args) args.push_back(memo[a]);
        out = n.rule->degree(args);
        break;
      }
    }
    memo[id] = std::move(out);
  }
  return memo.at(e.root());
}

BigInt expr_degree(const PolyExpr& e) {
  Degree d = expr_degree_or_zero(e);
  if (!d) throw DomainError("degree of the zero polynomial is undefined");
  return *d;
}

namespace {

std::vector<MultiPoly> expand_all(const PolyExpr& e, std::size_t term_budget) {
  TermBudgetGuard guard(term_budget);
  std::vector<MultiPoly> memo(e.graph_size());
  for (NodeId id : reachable(e)) {
    const ExprNode& n = e.node(id);
    MultiPoly out;
    switch (n.kind) {
      case NodeKind::constant:
        out = MultiPoly(n.value);
        break;
      case NodeKind::variable:
        out = MultiPoly::variable(n.name);
        break;
      case NodeKind::sum:
        for (NodeId a : n.args) out += memo[a];
        break;
      case NodeKind::product:
        out = MultiPoly(1);
        for (NodeId a : n.args) out *= memo[a];
        break;
      case NodeKind::power:
        if (!fits_u64(n.value)) throw ResourceError("exponent too large to expand");
        out = pow(memo[n.args.front()], to_u64(n.value));
        break;
      case NodeKind::named:
        out = memo[n.args.front()];
        break;
      case NodeKind::custom: {
        std::vector<MultiPoly> args;
        for (NodeId a : n.args) args.push_back(memo[a]);
        out = n.rule->expand(args);
        break;
      }
    }
    TermBudgetGuard::check(out.size());
    memo[id] = std::move(out);
  }
  return memo;
}

}  // namespace

MultiPoly expr_expand(const PolyExpr& e, std::size_t term_budget) {
  return std::move(expand_all(e, term_budget).at(e.root()));
}

std::map<std::string, MultiPoly> expr_expand_named(const PolyExpr& e, const std::vector<std::string>& aliases,
                                                   std::size_t term_budget) {
  std::vector<MultiPoly> memo = expand_all(e, term_budget);
  std::vector<char> reached(e.graph_size(), 0);
  for (NodeId id : reachable(e)) reached[id] = 1;
  std::map<std::string, MultiPoly> out;
  for (const auto& name : aliases) {
    PolyExpr sub = e.at(name);
    out[name] = reached[sub.root()] != 0 ? memo[sub.root()] : expr_expand(sub, term_budget);
  }
  return out;
}

nlohmann::json to_json(const PolyExpr& e) {
  std::vector<NodeId> order = reachable(e);
  std::map<NodeId, std::size_t> index;
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId id : order) {
    const ExprNode& n = e.node(id);
    nlohmann::json args = nlohmann::json::array();
    for (NodeId a : n.args) args.push_back(index.at(a));
    nlohmann::json row = {{"id", nodes.size()}, {"kind", node_kind_name(n.kind)}, {"args", args}};
    switch (n.kind) {
      case NodeKind::constant: row["value"] = to_decimal(n.value); break;
      case NodeKind::variable: row["name"] = n.name; break;
      case NodeKind::power: row["exponent"] = to_decimal(n.value); break;
      case NodeKind::named: row["name"] = n.name; break;
      case NodeKind::custom:
        row["rule"] = n.rule->kind();
        row["params"] = n.rule->params();
        break;
      default: break;
    }
    index[id] = nodes.size();
    nodes.push_back(std::move(row));
  }
  return {{"nodes", nodes}, {"root", index.at(e.root())}};
}

PolyExpr polyexpr_from_json(const nlohmann::json& doc, const CustomRegistry& registry) {
  try {
    ExprBuilder b;
    std::vector<NodeId> ids;
    for (const auto& row : doc.at("nodes")) {
      if (row.at("id").get<std::size_t>() != ids.size()) throw DomainError("node ids must be dense and ordered");
      auto kind = kind_from_name(row.at("kind").get<std::string>());
      if (!kind) throw DomainError("unknown node kind '" + row.at("kind").get<std::string>() + "'");
      std::vector<NodeId> args;
      for (const auto& a : row.at("args")) {
        auto k = a.get<std::size_t>();
        if (k >= ids.size()) throw DomainError("node refers forward; graph must be acyclic and topologically ordered");
        args.push_back(ids[k]);
      }
      NodeId id = 0;
      switch (*kind) {
        case NodeKind::constant: id = b.constant(from_decimal(row.at("value").get<std::string>())); break;
        case NodeKind::variable: id = b.variable(row.at("name").get<std::string>()); break;
        case NodeKind::sum: id = b.sum(args); break;
        case NodeKind::product: id = b.product(args); break;
        case NodeKind::power: id = b.power(args.at(0), from_decimal(row.at("exponent").get<std::string>())); break;
        case NodeKind::named: id = b.named(row.at("name").get<std::string>(), args.at(0)); break;
        case NodeKind::custom: {
          auto rule = row.at("rule").get<std::string>();
          auto it = registry.find(rule);
          if (it == registry.end()) throw DomainError("unknown custom rule '" + rule + "'");
          id = b.custom(it->second(row.at("params")), args);
          break;
        }
      }
      ids.push_back(id);
    }
    auto root = doc.at("root").get<std::size_t>();
    if (root >= ids.size()) throw DomainError("root out of range");
    return b.build(ids[root]);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed expression document: ") + e.what());
  }
}

}  // namespace dforge
