#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dforge/bigint.hpp"
#include "dforge/errors.hpp"
#include "dforge/mpoly.hpp"

namespace dforge {

inline bool coef_is_zero(const BigInt& c) { return c == 0; }
inline bool coef_is_zero(const MultiPoly& c) { return c.is_zero(); }

// Element of Z[s_1..s_q]/(s_j^2 - A_j). Component k holds the coefficient
// of the product of s_j over the set bits j of k, so there are 2^q of them.
template <class Coef>
class SqrtRingElem {
 public:
  SqrtRingElem() = default;
  explicit SqrtRingElem(std::size_t q) : comps_(std::size_t{1} << q) {}

  std::size_t q() const {
    std::size_t q = 0;
    while ((std::size_t{1} << q) < comps_.size()) ++q;
    return q;
  }
  std::size_t size() const { return comps_.size(); }
  Coef& operator[](std::size_t subset) { return comps_.at(subset); }
  const Coef& operator[](std::size_t subset) const { return comps_.at(subset); }

  bool is_pure() const {
    for (std::size_t k = 1; k < comps_.size(); ++k) {
      if (!coef_is_zero(comps_[k])) return false;
    }
    return true;
  }

 private:
  std::vector<Coef> comps_;
};

template <class Coef>
class SqrtRing {
 public:
  explicit SqrtRing(std::vector<Coef> radicands) : radicands_(std::move(radicands)) {
    std::size_t q = radicands_.size();
    subset_products_.resize(std::size_t{1} << q);
    subset_products_[0] = Coef(1);
    for (std::size_t k = 1; k < subset_products_.size(); ++k) {
      std::size_t low = 0;
      while (((k >> low) & 1U) == 0) ++low;
      subset_products_[k] = subset_products_[k & (k - 1)] * radicands_[low];
    }
  }

  std::size_t q() const { return radicands_.size(); }

  SqrtRingElem<Coef> scalar(const Coef& c) const {
    SqrtRingElem<Coef> out(q());
    out[0] = c;
    return out;
  }

  SqrtRingElem<Coef> mul(const SqrtRingElem<Coef>& x, const SqrtRingElem<Coef>& y) const {
    SqrtRingElem<Coef> out(q());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (coef_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (coef_is_zero(y[j])) continue;
        Coef term = x[i] * y[j];
        std::size_t common = i & j;
        if (common != 0) term = term * subset_products_[common];
        out[i ^ j] += term;
      }
    }
    return out;
  }

  SqrtRingElem<Coef> square(const SqrtRingElem<Coef>& x) const {
    SqrtRingElem<Coef> out(q());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (coef_is_zero(x[i])) continue;
      Coef sq = x[i] * x[i];
      if (i != 0) sq = sq * subset_products_[i];
      out[0] += sq;
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        if (coef_is_zero(x[j])) continue;
        Coef term = Coef(2) * x[i] * x[j];
        std::size_t common = i & j;
        if (common != 0) term = term * subset_products_[common];
        out[i ^ j] += term;
      }
    }
    return out;
  }

  // Product in a balanced tree whose first level pairs factors whose
  // index differs in the top bit, then the next bit, and so on.
  SqrtRingElem<Coef> product(std::vector<SqrtRingElem<Coef>> factors) const {
    if (factors.empty()) return scalar(Coef(1));
    while (factors.size() > 1) {
      std::size_t half = factors.size() / 2;
      std::vector<SqrtRingElem<Coef>> next;
      next.reserve(half + factors.size() % 2);
      for (std::size_t k = 0; k < half; ++k) next.push_back(mul(factors[k], factors[k + half]));
      if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
      factors = std::move(next);
    }
    return std::move(factors.front());
  }

  // Product of x over all 2^q sign changes of the radicals, taken one radical at a time:
  // (u + v s_j)(u - v s_j) = u^2 - A_j v^2 with u, v free of s_j.
  Coef norm(const SqrtRingElem<Coef>& x) const {
    std::vector<Coef> comps(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) comps[k] = x[k];
    for (std::size_t j = q(); j-- > 0;) {
      std::size_t half = std::size_t{1} << j;
      SqrtRing<Coef> sub(std::vector<Coef>(radicands_.begin(), radicands_.begin() + static_cast<std::ptrdiff_t>(j)));
      SqrtRingElem<Coef> u(j), v(j);
      for (std::size_t k = 0; k < half; ++k) {
        u[k] = std::move(comps[k]);
        v[k] = std::move(comps[k + half]);
      }
      SqrtRingElem<Coef> u2 = sub.square(u);
      SqrtRingElem<Coef> v2 = sub.square(v);
      comps.resize(half);
      for (std::size_t k = 0; k < half; ++k) comps[k] = u2[k] - radicands_[j] * v2[k];
    }
    return comps[0];
  }

 private:
  std::vector<Coef> radicands_;
  std::vector<Coef> subset_products_;
};

}  // namespace dforge
