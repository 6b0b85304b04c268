#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dforge/bigint.hpp"
#include "dforge/mpoly.hpp"
#include "dforge/polyexpr.hpp"

namespace dforge::coding {

// Number of unknowns: the largest k with z_k occurring. Variables other
// than a and z1, z2, ... are rejected with DomainError.
std::size_t unknown_count(const MultiPoly& p);

// P^2 + (z_{nu+1} - 1)^2.
MultiPoly make_suitable(const MultiPoly& p);

// Positive constant coefficient and positive degree. Returns a message naming
// the first violated clause, or nullopt.
std::optional<std::string> suitability_violation(const MultiPoly& p);

struct CodingContext {
  std::size_t nu = 0;
  std::uint64_t delta = 0;
  BigInt L;
  std::uint64_t r = 0;
  BigInt beta;
  BigInt alpha;
  BigInt gamma;
  std::vector<BigInt> n;  // n_1 .. n_nu with n_j = (delta+1)^j
};

CodingContext coding_constants(const MultiPoly& p);

// sum z_i B^{n_i}
BigInt code(const std::vector<BigInt>& z, const BigInt& B, const std::vector<BigInt>& n);

// sum_{i=0}^{n_last} m_i B^i with m_i = B - b at the positions n and B - 1 elsewhere. Requires b < B.
BigInt mask(const BigInt& b, const BigInt& B, const std::vector<BigInt>& n);

// sum_{j < count} B^j
BigInt geometric_sum(const BigInt& B, const BigInt& count);

// Coefficient-encoding polynomial of p, in the variable Y. The parameter a
// plays the role of X_0 and z_s that of X_s.
MultiPoly coeffs_poly(const MultiPoly& p);
BigInt coeffs_value(const MultiPoly& p, const BigInt& B);

// x^delta coeffs(B) + sum_{j=0}^{(2 delta + 1)(delta + 1)^nu} (B/2) B^j. B must be even and positive.
BigInt value_at(const MultiPoly& p, const BigInt& x, const BigInt& B);

struct CodingFamily {
  BigInt b, B, M, N0, N1, N, c, K, S_code, T_code, R_code, X, Y;
  // Bound checks that failed; empty when every inequality held.
  std::vector<std::string> violations;
};

// Throws DomainError if p is not suitable for coding, or on a < 0, f <= 0, g < 0.
CodingFamily family_eval(const MultiPoly& p, const BigInt& a, const BigInt& f, const BigInt& g);
CodingFamily family_eval(const MultiPoly& p, const CodingContext& ctx, const BigInt& a, const BigInt& f,
                         const BigInt& g);

// Smallest f >= Z with 1 + 3(2a+1)f a power of 4.
BigInt find_f(const BigInt& a, const BigInt& Z);

// The code of z with respect to ctx.n. Requires some z_i > 0 and, when B = beta b^delta for an
// integer b, every z_i in [0, b).
BigInt encode_witness(const CodingContext& ctx, const std::vector<BigInt>& z, const BigInt& B);

// Digits z with g = code(z, B, n) and every z_i < b, decided through the mask test.
// b and B must be powers of two with b < B.
std::optional<std::vector<BigInt>> decode_code(const BigInt& g, const BigInt& b, const BigInt& B,
                                               const std::vector<BigInt>& n);

enum class Mode { forward, reverse };

struct TheoremOptions {
  std::optional<BigInt> f;               // defaults to find_f(a, 1)
  std::optional<std::vector<BigInt>> z;  // forward witness; searched in [0, b)^nu when absent
  std::uint64_t reverse_cap = std::uint64_t{1} << 20;
  std::uint64_t forward_search_cap = std::uint64_t{1} << 20;
  unsigned threads = 0;  // 0: use the configured default
};

struct TheoremReport {
  Mode mode = Mode::forward;
  BigInt a, f, b, B, lower, upper;  // g range [lower, upper)
  std::optional<std::string> precondition_failure;
  struct Witness {
    BigInt g;
    std::optional<std::vector<BigInt>> decoded;
    bool solves = false;
  };
  std::vector<Witness> witnesses;
  std::vector<BigInt> expected;  // reverse: codes of all solutions in [0, b)^nu
  bool pass = false;

  nlohmann::json to_json() const;
};

TheoremReport coding_theorem_check(const MultiPoly& p, const BigInt& a, Mode mode, const TheoremOptions& options = {});

// The polynomial behind the symbolic family, with lazily computed P-bar and constants.
// Degree information is available without expanding anything.
class CodingSource {
 public:
  // When `make_suitable_first` is set the family is built on P^2 + (z_{nu+1} - 1)^2.
  CodingSource(MultiPoly p, bool make_suitable_first);

  std::uint64_t delta() const { return delta_; }
  std::size_t nu() const { return nu_; }
  // min over terms of sum i_s (delta+1)^s; zero whenever the constant term is nonzero.
  const BigInt& min_weight() const { return min_weight_; }

  const MultiPoly& source() const { return source_; }
  bool squared() const { return squared_; }
  const MultiPoly& polynomial() const;
  const CodingContext& context() const;

  nlohmann::json to_json() const;
  static std::shared_ptr<const CodingSource> from_json(const nlohmann::json& doc);

 private:
  MultiPoly source_;
  bool squared_;
  std::uint64_t delta_;
  std::size_t nu_;
  BigInt min_weight_;
  mutable std::once_flag poly_once_;
  mutable std::once_flag ctx_once_;
  mutable MultiPoly poly_;
  mutable CodingContext ctx_;
};

struct FamilyNodes {
  NodeId a, f, g;
  NodeId b, B, M, N0, N1, N, c, coeffs, K, S_code, T_code, R_code, X, Y;
  NodeId beta, beta_half, gamma, alpha;  // constants; alpha is a plain constant node
};

// Builds the family in the variables a, f, g. Aliases are "<prefix>b", "<prefix>B", ...
FamilyNodes build_family(ExprBuilder& builder, const std::shared_ptr<const CodingSource>& src,
                         const std::string& prefix = "coding.");

inline const char* const kFamilyNames[] = {"b", "B", "M", "N0", "N1", "N", "c", "coeffs", "K", "S", "T", "R", "X", "Y"};

void register_rules(CustomRegistry& registry);

}  // namespace dforge::coding
