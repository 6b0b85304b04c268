#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dforge/bigint.hpp"

namespace dforge {

using VarId = std::uint32_t;

// Process-wide variable name registry. Ids are stable for the process lifetime.
VarId intern_var(std::string_view name);
const std::string& var_name(VarId id);

// Orders names so that z2 < z10.
bool natural_less(std::string_view lhs, std::string_view rhs);

using Point = std::map<std::string, BigInt>;

// Exponent vector in sparse form: sorted by VarId, zero exponents never stored.
class MultiIndex {
 public:
  using Entry = std::pair<VarId, std::uint64_t>;

  MultiIndex() = default;
  static MultiIndex of(VarId var, std::uint64_t exponent = 1);
  static MultiIndex of(std::string_view var, std::uint64_t exponent = 1);

  std::uint64_t exponent(VarId var) const;
  std::uint64_t exponent(std::string_view var) const;
  // Sum of exponents.
  std::uint64_t norm() const;
  bool is_constant() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Exponent-wise sum (monomial product).
  MultiIndex operator*(const MultiIndex& rhs) const;
  MultiIndex pow(std::uint64_t k) const;
  MultiIndex without(VarId var) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Entry> entries_;
};

class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, BigInt>;

  MultiPoly() = default;
  MultiPoly(const BigInt& c);  // NOLINT: constants promote implicitly
  MultiPoly(long c) : MultiPoly(BigInt(c)) {}  // NOLINT

  static MultiPoly variable(std::string_view name);
  static MultiPoly monomial(const MultiIndex& index, const BigInt& coef);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BigInt coefficient(const MultiIndex& index) const;
  BigInt constant_term() const { return coefficient(MultiIndex{}); }

  // Sorted by natural name order.
  std::vector<std::string> variables() const;

  void add_term(const MultiIndex& index, const BigInt& coef);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator-(MultiPoly p);

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  TermMap terms_;
};

// Caps the number of terms any product (and hence any power or expansion)
// may hold while alive on the current thread. Nested guards keep the tighter cap.
class TermBudgetGuard {
 public:
  explicit TermBudgetGuard(std::size_t max_terms);
  ~TermBudgetGuard();
  TermBudgetGuard(const TermBudgetGuard&) = delete;
  TermBudgetGuard& operator=(const TermBudgetGuard&) = delete;

  static std::optional<std::size_t> active();
  // Throws ResourceError when `terms` exceeds the active budget.
  static void check(std::size_t terms);

 private:
  std::optional<std::size_t> previous_;
};

MultiPoly pow(const MultiPoly& base, std::uint64_t exponent);

// Simultaneous substitution; unbound variables pass through.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);

// Throws UnboundVariable naming the first missing variable.
BigInt evaluate(const MultiPoly& p, const Point& point);

// Max over terms of the exponent sum. Throws DomainError for the zero polynomial.
std::uint64_t total_degree(const MultiPoly& p);

// Degree in one variable (0 if absent).
std::uint64_t degree_in(const MultiPoly& p, std::string_view var);

// Human-readable form accepted by the expression parser, e.g. "3*a^2*z1 - 2*z1^3".
std::string to_string(const MultiPoly& p);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& doc);

}  // namespace dforge
