#include "dforge/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

#include "dforge/errors.hpp"

namespace dforge {

namespace {

struct Registry {
  std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

thread_local std::optional<std::size_t> t_budget;

}  // namespace

VarId intern_var(std::string_view name) {
  if (name.empty()) throw DomainError("empty variable name");
  Registry& r = registry();
  std::string key(name);
  {
    std::shared_lock lock(r.mutex);
    auto it = r.ids.find(key);
    if (it != r.ids.end()) return it->second;
  }
  std::unique_lock lock(r.mutex);
  auto it = r.ids.find(key);
  if (it != r.ids.end()) return it->second;
  auto id = static_cast<VarId>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(key, id);
  return id;
}

const std::string& var_name(VarId id) {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  if (id >= r.names.size()) throw DomainError("unknown variable id");
  return r.names[id];
}

bool natural_less(std::string_view lhs, std::string_view rhs) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    bool di = std::isdigit(static_cast<unsigned char>(lhs[i])) != 0;
    bool dj = std::isdigit(static_cast<unsigned char>(rhs[j])) != 0;
    if (di && dj) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[ei]))) ++ei;
      while (ej < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[ej]))) ++ej;
      std::string_view a = lhs.substr(i, ei - i);
      std::string_view b = rhs.substr(j, ej - j);
      while (a.size() > 1 && a[0] == '0') a.remove_prefix(1);
      while (b.size() > 1 && b[0] == '0') b.remove_prefix(1);
      if (a.size() != b.size()) return a.size() < b.size();
      if (a != b) return a < b;
      i = ei;
      j = ej;
      continue;
    }
    if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
    ++i;
    ++j;
  }
  return lhs.size() - i < rhs.size() - j;
}

MultiIndex MultiIndex::of(VarId var, std::uint64_t exponent) {
  MultiIndex m;
  if (exponent != 0) m.entries_.emplace_back(var, exponent);
  return m;
}

MultiIndex MultiIndex::of(std::string_view var, std::uint64_t exponent) {
  return of(intern_var(var), exponent);
}

std::uint64_t MultiIndex::exponent(VarId var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                             [](const Entry& e, VarId v) { return e.first < v; });
  return (it != entries_.end() && it->first == var) ? it->second : 0;
}

std::uint64_t MultiIndex::exponent(std::string_view var) const {
  return exponent(intern_var(var));
}

std::uint64_t MultiIndex::norm() const {
  std::uint64_t total = 0;
  for (const auto& [_, e] : entries_) total += e;
  return total;
}

MultiIndex MultiIndex::operator*(const MultiIndex& rhs) const {
  MultiIndex out;
  out.entries_.reserve(entries_.size() + rhs.entries_.size());
  auto a = entries_.begin();
  auto b = rhs.entries_.begin();
  while (a != entries_.end() || b != rhs.entries_.end()) {
    if (b == rhs.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

MultiIndex MultiIndex::pow(std::uint64_t k) const {
  MultiIndex out;
  if (k == 0) return out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.second *= k;
  return out;
}

MultiIndex MultiIndex::without(VarId var) const {
  MultiIndex out;
  for (const auto& e : entries_) {
    if (e.first != var) out.entries_.push_back(e);
  }
  return out;
}

MultiPoly::MultiPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(MultiIndex{}, c);
}

MultiPoly MultiPoly::variable(std::string_view name) {
  return monomial(MultiIndex::of(name), 1);
}

MultiPoly MultiPoly::monomial(const MultiIndex& index, const BigInt& coef) {
  MultiPoly p;
  p.add_term(index, coef);
  return p;
}

BigInt MultiPoly::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::string> MultiPoly::variables() const {
  std::set<VarId> ids;
  for (const auto& [m, _] : terms_) {
    for (const auto& [v, e] : m.entries()) ids.insert(v);
  }
  std::vector<std::string> out;
  for (VarId v : ids) out.push_back(var_name(v));
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  return out;
}

void MultiPoly::add_term(const MultiIndex& index, const BigInt& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  const MultiPoly& outer = lhs.size() <= rhs.size() ? lhs : rhs;
  const MultiPoly& inner = lhs.size() <= rhs.size() ? rhs : lhs;
  for (const auto& [ma, ca] : outer.terms_) {
    for (const auto& [mb, cb] : inner.terms_) out.add_term(ma * mb, ca * cb);
    TermBudgetGuard::check(out.size());
  }
  return out;
}

MultiPoly operator-(MultiPoly p) {
  for (auto& [_, c] : p.terms_) c = -c;
  return p;
}

TermBudgetGuard::TermBudgetGuard(std::size_t max_terms) : previous_(t_budget) {
  t_budget = t_budget ? std::min(*t_budget, max_terms) : max_terms;
}

TermBudgetGuard::~TermBudgetGuard() { t_budget = previous_; }

std::optional<std::size_t> TermBudgetGuard::active() { return t_budget; }

void TermBudgetGuard::check(std::size_t terms) {
  if (t_budget && terms > *t_budget) {
    throw ResourceError("term budget of " + std::to_string(*t_budget) + " exceeded");
  }
}

MultiPoly pow(const MultiPoly& base, std::uint64_t exponent) {
  MultiPoly result(1);
  if (exponent == 0) return result;
  if (base.size() == 1) {
    const auto& [m, c] = *base.terms().begin();
    return MultiPoly::monomial(m.pow(exponent), dforge::pow(c, exponent));
  }
  MultiPoly acc = base;
  while (true) {
    if (exponent & 1U) result *= acc;
    exponent >>= 1U;
    if (exponent == 0) break;
    acc *= acc;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  std::unordered_map<VarId, const MultiPoly*> bound;
  for (const auto& [name, value] : bindings) bound.emplace(intern_var(name), &value);
  std::map<std::pair<VarId, std::uint64_t>, MultiPoly> powers;
  auto power_of = [&](VarId v, std::uint64_t e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(*bound.at(v), e)).first;
    return it->second;
  };
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiIndex rest;
    MultiPoly factor(c);
    for (const auto& [v, e] : m.entries()) {
      if (bound.count(v) != 0) {
        factor *= power_of(v, e);
      } else {
        rest = rest * MultiIndex::of(v, e);
      }
    }
    out += factor * MultiPoly::monomial(rest, 1);
  }
  return out;
}

BigInt evaluate(const MultiPoly& p, const Point& point) {
  std::unordered_map<VarId, const BigInt*> values;
  for (const auto& [m, _] : p.terms()) {
    for (const auto& [v, e] : m.entries()) {
      if (values.count(v) != 0) continue;
      auto it = point.find(var_name(v));
      if (it == point.end()) throw UnboundVariable(var_name(v));
      values.emplace(v, &it->second);
    }
  }
  BigInt total = 0;
  for (const auto& [m, c] : p.terms()) {
    BigInt term = c;
    for (const auto& [v, e] : m.entries()) term *= dforge::pow(*values.at(v), e);
    total += term;
  }
  return total;
}

std::uint64_t total_degree(const MultiPoly& p) {
  if (p.is_zero()) throw DomainError("degree of the zero polynomial is undefined");
  std::uint64_t d = 0;
  for (const auto& [m, _] : p.terms()) d = std::max(d, m.norm());
  return d;
}

std::uint64_t degree_in(const MultiPoly& p, std::string_view var) {
  VarId v = intern_var(var);
  std::uint64_t d = 0;
  for (const auto& [m, _] : p.terms()) d = std::max(d, m.exponent(v));
  return d;
}

namespace {

std::vector<std::pair<std::string, std::uint64_t>> named_entries(const MultiIndex& m) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& [v, e] : m.entries()) out.emplace_back(var_name(v), e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
  return out;
}

// Graded order: higher degree first, then lexicographic on natural names.
bool display_before(const std::vector<std::pair<std::string, std::uint64_t>>& a, std::uint64_t na,
                    const std::vector<std::pair<std::string, std::uint64_t>>& b, std::uint64_t nb) {
  if (na != nb) return na > nb;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return natural_less(a[i].first, b[i].first);
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return a.size() > b.size();
}

}  // namespace

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  struct Row {
    std::vector<std::pair<std::string, std::uint64_t>> vars;
    std::uint64_t norm;
    BigInt coef;
  };
  std::vector<Row> rows;
  for (const auto& [m, c] : p.terms()) rows.push_back({named_entries(m), m.norm(), c});
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return display_before(a.vars, a.norm, b.vars, b.norm); });
  std::string out;
  bool first = true;
  for (const Row& r : rows) {
    BigInt mag = abs(r.coef);
    if (first) {
      if (r.coef < 0) out += "-";
    } else {
      out += r.coef < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (mag != 1 || r.vars.empty()) body = to_decimal(mag);
    for (const auto& [name, e] : r.vars) {
      if (!body.empty()) body += "*";
      body += name;
      if (e != 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

nlohmann::json to_json(const MultiPoly& p) {
  std::vector<std::string> vars = p.variables();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.entries()) exps[var_name(v)] = e;
    terms.push_back({{"exp", exps}, {"coef", to_decimal(c)}});
  }
  return {{"vars", vars}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const nlohmann::json& doc) {
  try {
    MultiPoly out;
    for (const auto& t : doc.at("terms")) {
      MultiIndex m;
      for (const auto& [name, e] : t.at("exp").items()) m = m * MultiIndex::of(name, e.get<std::uint64_t>());
      const auto& coef = t.at("coef");
      out.add_term(m, coef.is_string() ? from_decimal(coef.get<std::string>()) : BigInt(coef.get<long>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed polynomial document: ") + e.what());
  }
}

}  // namespace dforge
