#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "dforge/bigint.hpp"
#include "dforge/mpoly.hpp"
#include "dforge/polyexpr.hpp"
#include "dforge/sqrt_ring.hpp"

namespace dforge::combine {

inline constexpr std::size_t max_q = 3;

// Value of the relation-combining polynomial M_q at integer arguments, computed
// in the square-root extension ring as the norm of one linear factor.
BigInt m_q_eval(std::size_t q, const std::vector<BigInt>& A, const BigInt& S, const BigInt& T, const BigInt& R,
                const BigInt& n);

// The product of the 2^q conjugate linear factors taken factor by factor in the extension
// ring, with every radical component kept. m_q_eval reaches the same value through a tower of norms.
SqrtRingElem<BigInt> m_q_conjugate_product(std::size_t q, const std::vector<BigInt>& A, const BigInt& S,
                                           const BigInt& T, const BigInt& R, const BigInt& n);

// Smallest n >= 0 with M_q(...) = 0, or nullopt when S does not divide T,
// R <= 0, or some A_j is not a square. Throws DomainError for S = 0.
std::optional<BigInt> m_q_solve(std::size_t q, const std::vector<BigInt>& A, const BigInt& S, const BigInt& T,
                                const BigInt& R);

// M_q with polynomial arguments.
MultiPoly m_q_poly(const std::vector<MultiPoly>& A, const MultiPoly& S, const MultiPoly& T, const MultiPoly& R,
                   const MultiPoly& n);

// Expansion in the variables A1..Aq, S, T, R, n.
MultiPoly m_q_expand(std::size_t q, std::size_t term_budget);

// Degree bound of M_q with arguments of the given degrees.
Degree m_q_degree(const std::vector<Degree>& A, const Degree& S, const Degree& T, const Degree& R,
                  const Degree& n);

// DAG head node for M_q; its arguments are A1..Aq, S, T, R, n in that order.
std::shared_ptr<const CustomRule> m_q_rule(std::size_t q);

void register_rules(CustomRegistry& registry);

}  // namespace dforge::combine
