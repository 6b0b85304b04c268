#include "dforge/combine.hpp"

#include <algorithm>
#include <string>

#include "dforge/errors.hpp"
#include "dforge/sqrt_ring.hpp"

namespace dforge::combine {

namespace {

void check_q(std::size_t q, std::size_t given) {
  if (q < 1 || q > max_q) throw DomainError("q must be in 1.." + std::to_string(max_q));
  if (given != q) throw DomainError("expected " + std::to_string(q) + " radicands, got " + std::to_string(given));
}

// The 2^q linear factors; bit j of the index selects the sign of sqrt(A_{j+1}).
template <class Coef>
std::vector<SqrtRingElem<Coef>> factors(const std::vector<Coef>& A, const Coef& S, const Coef& T, const Coef& R,
                                        const Coef& n) {
  std::size_t q = A.size();
  Coef X(1);
  for (const Coef& a : A) X += a * a;
  std::vector<Coef> xpow{Coef(1)};
  for (std::size_t j = 1; j <= q; ++j) xpow.push_back(xpow.back() * X);
  Coef S2 = S * S;
  Coef T2 = T * T;
  Coef scale = S2 * (Coef(2) * R - Coef(1));
  Coef pure = S2 * n + T2 - scale * (T2 + xpow[q]);
  std::vector<Coef> radical;
  for (std::size_t j = 0; j < q; ++j) radical.push_back(scale * xpow[j]);
  std::vector<SqrtRingElem<Coef>> out;
  for (std::size_t eps = 0; eps < (std::size_t{1} << q); ++eps) {
    SqrtRingElem<Coef> f(q);
    f[0] = pure;
    for (std::size_t j = 0; j < q; ++j) {
      // Factor carries -eps_j * scale * X^j * sqrt(A_{j+1}).
      bool negative_sign = ((eps >> j) & 1U) != 0;
      f[std::size_t{1} << j] = negative_sign ? radical[j] : Coef(0) - radical[j];
    }
    out.push_back(std::move(f));
  }
  return out;
}

Degree dmax(const Degree& x, const Degree& y) {
  if (!x) return y;
  if (!y) return x;
  return std::max(*x, *y);
}

Degree dadd(const Degree& x, const Degree& y) {
  if (!x || !y) return std::nullopt;
  return *x + *y;
}

Degree dscale(const BigInt& k, const Degree& x) {
  if (!x) return std::nullopt;
  return k * *x;
}

class MqRule final : public CustomRule {
 public:
  explicit MqRule(std::size_t q) : q_(q) {}
  std::string kind() const override { return "relation_combining"; }

  BigInt evaluate(const std::vector<BigInt>& args) const override {
    check_arity(args.size());
    std::vector<BigInt> A(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(q_));
    return m_q_eval(q_, A, args[q_], args[q_ + 1], args[q_ + 2], args[q_ + 3]);
  }

  Degree degree(const std::vector<Degree>& args) const override {
    check_arity(args.size());
    std::vector<Degree> A(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(q_));
    return m_q_degree(A, args[q_], args[q_ + 1], args[q_ + 2], args[q_ + 3]);
  }

  MultiPoly expand(const std::vector<MultiPoly>& args) const override {
    check_arity(args.size());
    std::vector<MultiPoly> A(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(q_));
    return m_q_poly(A, args[q_], args[q_ + 1], args[q_ + 2], args[q_ + 3]);
  }

  nlohmann::json params() const override { return {{"q", q_}}; }

 private:
  void check_arity(std::size_t n) const {
    if (n != q_ + 4) throw InvariantViolation("relation_combining node has wrong arity");
  }
  std::size_t q_;
};

}  // namespace

BigInt m_q_eval(std::size_t q, const std::vector<BigInt>& A, const BigInt& S, const BigInt& T, const BigInt& R,
                const BigInt& n) {
  check_q(q, A.size());
  SqrtRing<BigInt> ring(A);
  return ring.norm(factors<BigInt>(A, S, T, R, n).front());
}

SqrtRingElem<BigInt> m_q_conjugate_product(std::size_t q, const std::vector<BigInt>& A, const BigInt& S,
                                           const BigInt& T, const BigInt& R, const BigInt& n) {
  check_q(q, A.size());
  SqrtRing<BigInt> ring(A);
  return ring.product(factors<BigInt>(A, S, T, R, n));
}

std::optional<BigInt> m_q_solve(std::size_t q, const std::vector<BigInt>& A, const BigInt& S, const BigInt& T,
                                const BigInt& R) {
  check_q(q, A.size());
  if (S == 0) throw DomainError("m_q_solve requires S != 0");
  if (!divides(S, T) || R <= 0) return std::nullopt;
  std::vector<BigInt> roots;
  for (const BigInt& a : A) {
    if (!is_square(a)) return std::nullopt;
    roots.push_back(isqrt(a));
  }
  BigInt X = 1;
  for (const BigInt& a : A) X += a * a;
  BigInt S2 = S * S;
  BigInt T2 = T * T;
  BigInt scale = S2 * (2 * R - 1);
  std::optional<BigInt> best;
  for (std::size_t eps = 0; eps < (std::size_t{1} << q); ++eps) {
    BigInt inner = T2 + pow(X, q);
    BigInt xp = 1;
    for (std::size_t j = 0; j < q; ++j) {
      inner += (((eps >> j) & 1U) != 0 ? -1 : 1) * roots[j] * xp;
      xp *= X;
    }
    BigInt rhs = scale * inner - T2;
    if (!divides(S2, rhs)) continue;
    BigInt n = rhs / S2;
    if (n < 0) continue;
    if (!best || n < *best) best = n;
  }
  return best;
}

MultiPoly m_q_poly(const std::vector<MultiPoly>& A, const MultiPoly& S, const MultiPoly& T, const MultiPoly& R,
                   const MultiPoly& n) {
  if (A.empty() || A.size() > max_q) throw DomainError("q must be in 1.." + std::to_string(max_q));
  SqrtRing<MultiPoly> ring(A);
  SqrtRingElem<MultiPoly> prod = ring.product(factors<MultiPoly>(A, S, T, R, n));
  if (!prod.is_pure()) throw InvariantViolation("relation-combining expansion left a radical component");
  return prod[0];
}

MultiPoly m_q_expand(std::size_t q, std::size_t term_budget) {
  if (q < 1 || q > max_q) throw DomainError("q must be in 1.." + std::to_string(max_q));
  TermBudgetGuard guard(term_budget);
  std::vector<MultiPoly> A;
  for (std::size_t j = 1; j <= q; ++j) A.push_back(MultiPoly::variable("A" + std::to_string(j)));
  return m_q_poly(A, MultiPoly::variable("S"), MultiPoly::variable("T"), MultiPoly::variable("R"),
                  MultiPoly::variable("n"));
}

Degree m_q_degree(const std::vector<Degree>& A, const Degree& S, const Degree& T, const Degree& R,
                  const Degree& n) {
  std::size_t q = A.size();
  Degree maxA;
  for (const Degree& a : A) maxA = dmax(maxA, a);
  // X_q = 1 + sum A_j^2 is never zero.
  BigInt degX = maxA ? BigInt(2 * *maxA) : BigInt(0);
  Degree twoR1 = R ? R : Degree(BigInt(0));  // 2R - 1 is never zero
  Degree inner = dmax(dscale(2, T), BigInt(BigInt(static_cast<long>(q)) * degX));
  for (std::size_t j = 0; j < q; ++j) {
    if (!A[j]) continue;
    BigInt root = (*A[j] + 1) / 2;
    inner = dmax(inner, BigInt(root + BigInt(static_cast<long>(j)) * degX));
  }
  Degree factor = dmax(dadd(dscale(2, S), n), dscale(2, T));
  factor = dmax(factor, dadd(dadd(dscale(2, S), twoR1), inner));
  return dscale(BigInt(static_cast<long>(std::size_t{1} << q)), factor);
}

std::shared_ptr<const CustomRule> m_q_rule(std::size_t q) {
  if (q < 1 || q > max_q) throw DomainError("q must be in 1.." + std::to_string(max_q));
  return std::make_shared<MqRule>(q);
}

void register_rules(CustomRegistry& registry) {
  registry["relation_combining"] = [](const nlohmann::json& params) {
    return m_q_rule(params.at("q").get<std::size_t>());
  };
}

}  // namespace dforge::combine
