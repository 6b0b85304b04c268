#include "dforge/coding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dforge/bitarith.hpp"
#include "dforge/errors.hpp"
#include "dforge/parallel.hpp"

namespace dforge::coding {

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

std::uint64_t small_exponent(const BigInt& e) {
  if (!fits_u64(e)) throw ResourceError("exponent " + to_decimal(e) + " is too large");
  return to_u64(e);
}

// Bit-length guard for B^e before materializing it.
void guard_power(const BigInt& base, const BigInt& e, std::uint64_t max_bits = std::uint64_t{1} << 32) {
  if (abs(base) <= 1) return;
  if (big(bit_length(base) - 1) * e > big(max_bits)) {
    throw ResourceError("power with exponent " + to_decimal(e) + " exceeds the size guard");
  }
}

BigInt power(const BigInt& base, const BigInt& e) {
  guard_power(base, e);
  return pow(base, small_exponent(e));
}

void check_positions(const std::vector<BigInt>& n) {
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) throw DomainError("positions must be nonnegative");
    if (i > 0 && n[i] <= n[i - 1]) throw DomainError("positions must be strictly increasing");
  }
}

std::size_t z_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z' || name[1] == '0') return 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return 0;
  }
  return static_cast<std::size_t>(std::stoul(name.substr(1)));
}

std::string z_name(std::size_t k) { return "z" + std::to_string(k); }

// Per-term data of the coefficient-encoding polynomial.
struct EncodedTerm {
  BigInt weight;  // sum i_s (delta+1)^s
  BigInt coef;    // i! (delta - |i|)! a_i
};

std::vector<EncodedTerm> encoded_terms(const MultiPoly& p, std::uint64_t delta, std::size_t nu) {
  BigInt base = big(delta + 1);
  std::vector<EncodedTerm> out;
  VarId a = intern_var("a");
  for (const auto& [m, c] : p.terms()) {
    EncodedTerm t;
    t.coef = c * factorial(delta - m.norm());
    std::uint64_t ia = m.exponent(a);
    t.weight = big(ia);
    t.coef *= factorial(ia);
    for (std::size_t s = 1; s <= nu; ++s) {
      std::uint64_t is = m.exponent(intern_var(z_name(s)));
      t.weight += big(is) * pow(base, s);
      t.coef *= factorial(is);
    }
    out.push_back(std::move(t));
  }
  return out;
}

BigInt top_exponent(std::uint64_t delta, std::size_t nu) { return pow(big(delta + 1), nu + 1); }

std::uint64_t nonconstant_degree(const MultiPoly& p) {
  if (p.is_zero()) throw DomainError("polynomial is zero");
  std::uint64_t d = total_degree(p);
  if (d == 0) throw DomainError("polynomial has degree 0");
  return d;
}

}  // namespace

std::size_t unknown_count(const MultiPoly& p) {
  std::size_t nu = 0;
  for (const auto& v : p.variables()) {
    if (v == "a") continue;
    std::size_t k = z_index(v);
    if (k == 0) throw DomainError("unexpected variable '" + v + "'; expected a or z1, z2, ...");
    nu = std::max(nu, k);
  }
  return nu;
}

MultiPoly make_suitable(const MultiPoly& p) {
  std::size_t nu = unknown_count(p);
  MultiPoly shift = MultiPoly::variable(z_name(nu + 1)) - 1;
  return p * p + shift * shift;
}

std::optional<std::string> suitability_violation(const MultiPoly& p) {
  if (p.constant_term() <= 0) return "constant coefficient must be positive";
  if (p.is_zero() || total_degree(p) == 0) return "degree must be positive";
  return std::nullopt;
}

CodingContext coding_constants(const MultiPoly& p) {
  CodingContext ctx;
  ctx.delta = nonconstant_degree(p);
  ctx.nu = unknown_count(p);
  ctx.L = 0;
  for (const auto& [m, c] : p.terms()) ctx.L += abs(c);
  BigInt bound = 2 * factorial(ctx.delta) * ctx.L * pow(big(ctx.nu + 2), ctx.delta);
  ctx.beta = 1;
  while (ctx.beta <= bound) {
    ctx.beta *= 4;
    ++ctx.r;
  }
  BigInt nnu = pow(big(ctx.delta + 1), ctx.nu);
  ctx.alpha = big(ctx.delta) * nnu + 1;
  ctx.gamma = power(ctx.beta, nnu);
  for (std::size_t j = 1; j <= ctx.nu; ++j) ctx.n.push_back(pow(big(ctx.delta + 1), j));
  return ctx;
}

BigInt code(const std::vector<BigInt>& z, const BigInt& B, const std::vector<BigInt>& n) {
  if (z.size() != n.size()) throw DomainError("code: tuple and position lengths differ");
  check_positions(n);
  BigInt out = 0;
  for (std::size_t i = 0; i < z.size(); ++i) out += z[i] * power(B, n[i]);
  return out;
}

BigInt geometric_sum(const BigInt& B, const BigInt& count) {
  if (count < 0) throw DomainError("negative term count");
  if (B == 1) return count;
  return (power(B, count) - 1) / (B - 1);
}

BigInt mask(const BigInt& b, const BigInt& B, const std::vector<BigInt>& n) {
  if (n.empty()) throw DomainError("mask needs at least one position");
  check_positions(n);
  if (b >= B) throw DomainError("mask requires b < B");
  BigInt out = (B - 1) * geometric_sum(B, n.back() + 1);
  for (const BigInt& pos : n) out -= (b - 1) * power(B, pos);
  return out;
}

MultiPoly coeffs_poly(const MultiPoly& p) {
  std::uint64_t delta = nonconstant_degree(p);
  std::size_t nu = unknown_count(p);
  BigInt top = top_exponent(delta, nu);
  MultiPoly out;
  for (const auto& t : encoded_terms(p, delta, nu)) {
    out.add_term(MultiIndex::of("Y", small_exponent(top - t.weight)), t.coef);
  }
  return out;
}

BigInt coeffs_value(const MultiPoly& p, const BigInt& B) {
  std::uint64_t delta = nonconstant_degree(p);
  std::size_t nu = unknown_count(p);
  BigInt top = top_exponent(delta, nu);
  BigInt out = 0;
  for (const auto& t : encoded_terms(p, delta, nu)) out += t.coef * power(B, top - t.weight);
  return out;
}

BigInt value_at(const MultiPoly& p, const BigInt& x, const BigInt& B) {
  if (B <= 0 || mpz_odd_p(B.get_mpz_t()) != 0) throw DomainError("value polynomial needs an even positive base");
  std::uint64_t delta = nonconstant_degree(p);
  std::size_t nu = unknown_count(p);
  BigInt count = big(2 * delta + 1) * pow(big(delta + 1), nu) + 1;
  return pow(x, delta) * coeffs_value(p, B) + (B / 2) * geometric_sum(B, count);
}

CodingFamily family_eval(const MultiPoly& p, const BigInt& a, const BigInt& f, const BigInt& g) {
  if (auto bad = suitability_violation(p)) throw DomainError("polynomial is not suitable for coding: " + *bad);
  return family_eval(p, coding_constants(p), a, f, g);
}

CodingFamily family_eval(const MultiPoly& p, const CodingContext& ctx, const BigInt& a, const BigInt& f,
                         const BigInt& g) {
  if (auto bad = suitability_violation(p)) throw DomainError("polynomial is not suitable for coding: " + *bad);
  if (a < 0) throw DomainError("a must be nonnegative");
  if (f <= 0) throw DomainError("f must be positive");
  if (g < 0) throw DomainError("g must be nonnegative");
  if (ctx.nu == 0) throw DomainError("coding needs at least one unknown");
  CodingFamily F;
  const std::uint64_t d = ctx.delta;
  BigInt nnu = pow(big(d + 1), ctx.nu);
  F.b = 1 + 3 * (2 * a + 1) * f;
  F.B = ctx.beta * pow(F.b, d);
  F.M = mask(F.b, F.B, ctx.n);
  F.N0 = power(F.B, nnu + 1);
  F.N1 = 4 * power(F.B, big(2 * d + 1) * nnu + 1);
  F.N = F.N0 * F.N1;
  F.c = 1 + a * F.B + g;
  F.K = value_at(p, F.c, F.B);
  F.S_code = g + 2 * F.K * F.N0;
  F.T_code = F.M + (F.B - 2) * power(F.B, nnu * (d + 1)) * F.N0;
  F.R_code = (F.S_code + F.T_code + 1) * F.N + F.T_code + 1;
  F.X = (F.N - 1) * F.R_code;
  F.Y = F.N * F.N;

  auto require = [&](bool ok, const char* what) {
    if (!ok) F.violations.emplace_back(what);
  };
  require(F.b > 2, "b > 2");
  require(F.B >= 2, "B >= 2");
  require(F.N0 >= 2, "N0 >= 2");
  require(F.N1 >= 8, "N1 >= 8");
  require(F.N >= 16, "N >= 16");
  require(F.S_code >= 0, "S >= 0");
  require(F.T_code >= 0, "T >= 0");
  require(F.R_code > 0, "R > 0");
  require(F.X >= 3 * F.b, "X >= 3b");
  require(F.Y >= F.b && F.Y >= 256, "Y >= max(b, 256)");
  require(F.M < F.N0, "M < N0");
  if (g < 2 * F.b * power(F.B, nnu)) {
    require(F.S_code < F.N, "S < N");
    require(F.T_code < F.N, "T < N");
  }
  return F;
}

BigInt find_f(const BigInt& a, const BigInt& Z) {
  if (a < 0) throw DomainError("a must be nonnegative");
  if (Z < 1) throw DomainError("Z must be positive");
  BigInt q = 3 * (2 * a + 1);
  if (bit_length(q) > 40) throw ResourceError("modulus too large for the order computation");
  // 4^m = 1 + q f exactly when ord_q(4) divides m; f grows with m.
  std::uint64_t order = 1;
  BigInt r = mod_floor(BigInt(4), q);
  while (r != 1) {
    r = mod_floor(r * 4, q);
    ++order;
  }
  BigInt step = pow(BigInt(4), order);
  BigInt target = 1 + q * Z;
  BigInt value = step;
  while (value < target) value *= step;
  return (value - 1) / q;
}

BigInt encode_witness(const CodingContext& ctx, const std::vector<BigInt>& z, const BigInt& B) {
  if (z.size() != ctx.n.size()) throw DomainError("witness length must equal the number of unknowns");
  if (std::all_of(z.begin(), z.end(), [](const BigInt& v) { return v == 0; })) {
    throw DomainError("witness must have a positive entry");
  }
  for (const BigInt& v : z) {
    if (v < 0) throw DomainError("witness entries must be nonnegative");
  }
  if (B > 0 && divides(ctx.beta, B)) {
    BigInt q = B / ctx.beta;
    BigInt b;
    if (mpz_root(b.get_mpz_t(), q.get_mpz_t(), ctx.delta) != 0) {
      for (const BigInt& v : z) {
        if (v >= b) throw DomainError("witness entries must be below b = " + to_decimal(b));
      }
    }
  }
  return code(z, B, ctx.n);
}

std::optional<std::vector<BigInt>> decode_code(const BigInt& g, const BigInt& b, const BigInt& B,
                                               const std::vector<BigInt>& n) {
  if (!is_power_of_two(b) || !is_power_of_two(B)) throw DomainError("b and B must be powers of two");
  if (b >= B) throw DomainError("decoding requires b < B");
  if (g < 0) throw DomainError("g must be nonnegative");
  BigInt M = mask(b, B, n);
  if (g >= power(B, n.back() + 1)) return std::nullopt;
  if (bitarith::tau(g, M).value != 0) return std::nullopt;
  std::vector<BigInt> z;
  for (const BigInt& pos : n) z.push_back(mod_floor(g / power(B, pos), B));
  if (code(z, B, n) != g) throw InvariantViolation("mask test accepted a non-code");
  for (const BigInt& v : z) {
    if (v >= b) throw InvariantViolation("mask test accepted a digit >= b");
  }
  return z;
}

namespace {

// Calls fn(z) for each z in [0, b)^nu in lexicographic order until fn returns true.
template <class Fn>
void for_each_tuple(const BigInt& b, std::size_t nu, std::uint64_t cap, Fn fn) {
  BigInt total = pow(b, nu);
  if (total > big(cap)) throw ResourceError("witness search space " + to_decimal(total) + " exceeds the cap");
  std::vector<BigInt> z(nu, BigInt(0));
  while (true) {
    if (fn(z)) return;
    std::size_t k = nu;
    while (k > 0) {
      --k;
      if (++z[k] < b) break;
      z[k] = 0;
      if (k == 0) return;
    }
    if (nu == 0) return;
  }
}

Point solution_point(const BigInt& a, const std::vector<BigInt>& z) {
  Point pt{{"a", a}};
  for (std::size_t i = 0; i < z.size(); ++i) pt[z_name(i + 1)] = z[i];
  return pt;
}

}  // namespace

TheoremReport coding_theorem_check(const MultiPoly& p, const BigInt& a, Mode mode, const TheoremOptions& options) {
  if (auto bad = suitability_violation(p)) throw DomainError("polynomial is not suitable for coding: " + *bad);
  if (a < 0) throw DomainError("a must be nonnegative");
  CodingContext ctx = coding_constants(p);
  TheoremReport rep;
  rep.mode = mode;
  rep.a = a;
  rep.f = options.f ? *options.f : find_f(a, 1);
  CodingFamily base = family_eval(p, ctx, a, rep.f, 0);
  rep.b = base.b;
  rep.B = base.B;
  BigInt mu = ctx.gamma * pow(rep.b, small_exponent(ctx.alpha));
  if (!is_power_of_two(base.N)) {
    rep.precondition_failure = "b is not a power of two, so Y is not a power of two";
    return rep;
  }
  std::uint64_t threshold = log2_exact(base.Y);
  auto divisible = [&](const BigInt& X) { return bitarith::central_binom_divisible_by_pow2(X, threshold); };

  if (mode == Mode::forward) {
    rep.lower = rep.b;
    rep.upper = mu;
    std::optional<std::vector<BigInt>> z = options.z;
    if (!z) {
      for_each_tuple(rep.b, ctx.nu, options.forward_search_cap, [&](const std::vector<BigInt>& t) {
        bool positive = std::any_of(t.begin(), t.end(), [](const BigInt& v) { return v > 0; });
        if (positive && evaluate(p, solution_point(a, t)) == 0) {
          z = t;
          return true;
        }
        return false;
      });
    } else if (evaluate(p, solution_point(a, *z)) != 0) {
      rep.precondition_failure = "the given tuple does not solve P at this parameter";
      return rep;
    }
    if (!z) {
      rep.precondition_failure = "no solution with entries in [0, b) at this parameter";
      return rep;
    }
    TheoremReport::Witness w;
    w.g = encode_witness(ctx, *z, rep.B);
    w.decoded = z;
    w.solves = true;
    CodingFamily fam = family_eval(p, ctx, a, rep.f, w.g);
    bool in_range = w.g >= rep.lower && w.g < rep.upper;
    rep.pass = in_range && divisible(fam.X) && fam.violations.empty();
    rep.witnesses.push_back(std::move(w));
    return rep;
  }

  rep.lower = 0;
  rep.upper = 2 * mu;
  if (rep.upper > big(options.reverse_cap)) {
    throw ResourceError("reverse range " + to_decimal(rep.upper) + " exceeds the cap of " +
                        std::to_string(options.reverse_cap));
  }
  std::uint64_t total = to_u64(rep.upper);
  const std::uint64_t d = ctx.delta;
  BigInt coeffsB = coeffs_value(p, rep.B);
  BigInt shift = (rep.B / 2) * geometric_sum(rep.B, big(2 * d + 1) * pow(big(d + 1), ctx.nu) + 1);
  BigInt c0 = 1 + a * rep.B;
  auto hits = parallel_chunks<std::vector<std::uint64_t>>(total, options.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> found;
    BigInt g;
    for (std::uint64_t k = lo; k < hi; ++k) {
      g = big(k);
      BigInt K = pow(c0 + g, d) * coeffsB + shift;
      BigInt S = g + 2 * K * base.N0;
      BigInt R = (S + base.T_code + 1) * base.N + base.T_code + 1;
      if (divisible((base.N - 1) * R)) found.push_back(k);
    }
    return found;
  });
  for (const auto& chunk : hits) {
    for (std::uint64_t k : chunk) {
      TheoremReport::Witness w;
      w.g = big(k);
      w.decoded = decode_code(w.g, rep.b, rep.B, ctx.n);
      w.solves = w.decoded && evaluate(p, solution_point(a, *w.decoded)) == 0;
      rep.witnesses.push_back(std::move(w));
    }
  }
  for_each_tuple(rep.b, ctx.nu, options.forward_search_cap, [&](const std::vector<BigInt>& t) {
    if (evaluate(p, solution_point(a, t)) == 0) {
      BigInt g = code(t, rep.B, ctx.n);
      if (g < rep.upper) rep.expected.push_back(g);
    }
    return false;
  });
  std::sort(rep.expected.begin(), rep.expected.end());
  std::vector<BigInt> seen;
  bool all_solve = true;
  for (const auto& w : rep.witnesses) {
    seen.push_back(w.g);
    all_solve = all_solve && w.solves;
  }
  rep.pass = all_solve && seen == rep.expected;
  return rep;
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : witnesses) {
    nlohmann::json dec = nullptr;
    if (w.decoded) {
      dec = nlohmann::json::array();
      for (const auto& v : *w.decoded) dec.push_back(to_decimal(v));
    }
    ws.push_back({{"g", to_decimal(w.g)}, {"decoded", dec}, {"solves", w.solves}});
  }
  nlohmann::json exp = nlohmann::json::array();
  for (const auto& g : expected) exp.push_back(to_decimal(g));
  nlohmann::json out = {
      {"mode", mode == Mode::forward ? "forward" : "reverse"},
      {"params",
       {{"a", to_decimal(a)},
        {"f", to_decimal(f)},
        {"b", to_decimal(b)},
        {"B", to_decimal(B)},
        {"g_lower", to_decimal(lower)},
        {"g_upper", to_decimal(upper)}}},
      {"witnesses", ws},
      {"pass", pass},
  };
  if (mode == Mode::reverse) out["expected"] = exp;
  if (precondition_failure) out["precondition_failure"] = *precondition_failure;
  return out;
}

CodingSource::CodingSource(MultiPoly p, bool make_suitable_first)
    : source_(std::move(p)), squared_(make_suitable_first) {
  std::size_t nu = unknown_count(source_);
  if (squared_) {
    std::uint64_t d = source_.is_zero() ? 0 : total_degree(source_);
    delta_ = std::max<std::uint64_t>(2 * d, 2);
    nu_ = nu + 1;
    min_weight_ = 0;  // constant term P(0)^2 + 1 is positive
  } else {
    delta_ = nonconstant_degree(source_);
    nu_ = nu;
    std::vector<EncodedTerm> terms = encoded_terms(source_, delta_, nu_);
    min_weight_ = terms.front().weight;
    for (const auto& t : terms) min_weight_ = std::min(min_weight_, t.weight);
  }
}

const MultiPoly& CodingSource::polynomial() const {
  std::call_once(poly_once_, [this] { poly_ = squared_ ? make_suitable(source_) : source_; });
  return poly_;
}

const CodingContext& CodingSource::context() const {
  std::call_once(ctx_once_, [this] { ctx_ = coding_constants(polynomial()); });
  return ctx_;
}

nlohmann::json CodingSource::to_json() const {
  return {{"source", dforge::to_json(source_)}, {"make_suitable", squared_}};
}

std::shared_ptr<const CodingSource> CodingSource::from_json(const nlohmann::json& doc) {
  return std::make_shared<CodingSource>(multipoly_from_json(doc.at("source")), doc.at("make_suitable").get<bool>());
}

namespace {

class GeometricSumRule final : public CustomRule {
 public:
  explicit GeometricSumRule(BigInt count) : count_(std::move(count)) {
    if (count_ < 0) throw DomainError("negative term count");
  }
  std::string kind() const override { return "geometric_sum"; }
  BigInt evaluate(const std::vector<BigInt>& args) const override { return geometric_sum(args.at(0), count_); }
  Degree degree(const std::vector<Degree>& args) const override {
    if (count_ == 0) return std::nullopt;
    if (!args.at(0)) return BigInt(0);
    return *args[0] * (count_ - 1);
  }
  MultiPoly expand(const std::vector<MultiPoly>& args) const override {
    std::uint64_t count = small_exponent(count_);
    MultiPoly out;
    MultiPoly term(1);
    for (std::uint64_t j = 0; j < count; ++j) {
      out += term;
      if (j + 1 < count) term *= args.at(0);
      TermBudgetGuard::check(out.size());
    }
    return out;
  }
  nlohmann::json params() const override { return {{"count", to_decimal(count_)}}; }

 private:
  BigInt count_;
};

class CoeffEncodingRule final : public CustomRule {
 public:
  explicit CoeffEncodingRule(std::shared_ptr<const CodingSource> src) : src_(std::move(src)) {}
  std::string kind() const override { return "coeff_encoding"; }
  BigInt evaluate(const std::vector<BigInt>& args) const override {
    return coeffs_value(src_->polynomial(), args.at(0));
  }
  Degree degree(const std::vector<Degree>& args) const override {
    if (!args.at(0)) return BigInt(0);
    return *args[0] * (top_exponent(src_->delta(), src_->nu()) - src_->min_weight());
  }
  MultiPoly expand(const std::vector<MultiPoly>& args) const override {
    const MultiPoly& p = src_->polynomial();
    BigInt top = top_exponent(src_->delta(), src_->nu());
    std::map<std::uint64_t, MultiPoly> powers;
    MultiPoly out;
    for (const auto& t : encoded_terms(p, src_->delta(), src_->nu())) {
      std::uint64_t e = small_exponent(top - t.weight);
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, pow(args.at(0), e)).first;
      out += MultiPoly(t.coef) * it->second;
    }
    return out;
  }
  nlohmann::json params() const override { return src_->to_json(); }

 private:
  std::shared_ptr<const CodingSource> src_;
};

class CodingConstantRule final : public CustomRule {
 public:
  CodingConstantRule(std::shared_ptr<const CodingSource> src, std::string which)
      : src_(std::move(src)), which_(std::move(which)) {
    if (which_ != "beta" && which_ != "beta_half" && which_ != "gamma") {
      throw DomainError("unknown coding constant '" + which_ + "'");
    }
  }
  std::string kind() const override { return "coding_constant"; }
  BigInt evaluate(const std::vector<BigInt>&) const override {
    const CodingContext& ctx = src_->context();
    if (which_ == "beta") return ctx.beta;
    if (which_ == "beta_half") return ctx.beta / 2;
    return ctx.gamma;
  }
  Degree degree(const std::vector<Degree>&) const override { return BigInt(0); }
  MultiPoly expand(const std::vector<MultiPoly>&) const override { return MultiPoly(evaluate({})); }
  nlohmann::json params() const override {
    nlohmann::json out = src_->to_json();
    out["which"] = which_;
    return out;
  }

 private:
  std::shared_ptr<const CodingSource> src_;
  std::string which_;
};

}  // namespace

FamilyNodes build_family(ExprBuilder& x, const std::shared_ptr<const CodingSource>& src, const std::string& prefix) {
  FamilyNodes n{};
  const std::uint64_t d = src->delta();
  const std::size_t nu = src->nu();
  BigInt nnu = pow(big(d + 1), nu);
  auto name = [&](const char* s, NodeId id) { return x.named(prefix + s, id); };
  NodeId one = x.constant(1);
  NodeId minus_one = x.constant(-1);

  n.a = x.variable("a");
  n.f = x.variable("f");
  n.g = x.variable("g");
  n.beta = x.custom(std::make_shared<CodingConstantRule>(src, "beta"), {});
  n.beta_half = x.custom(std::make_shared<CodingConstantRule>(src, "beta_half"), {});
  n.gamma = x.custom(std::make_shared<CodingConstantRule>(src, "gamma"), {});
  n.alpha = x.constant(big(d) * nnu + 1);

  n.b = name("b", x.sum({one, x.product({x.constant(3), x.sum({x.scale(2, n.a), one}), n.f})}));
  NodeId bd = x.power(n.b, big(d));
  n.B = name("B", x.product({n.beta, bd}));
  std::vector<NodeId> code_positions;
  for (std::size_t j = 1; j <= nu; ++j) code_positions.push_back(x.power(n.B, pow(big(d + 1), j)));
  NodeId all_digits = x.product({x.sum({n.B, minus_one}), x.custom(std::make_shared<GeometricSumRule>(nnu + 1), {n.B})});
  n.M = name("M", x.sub(all_digits, x.product({x.sum({n.b, minus_one}), x.sum(code_positions)})));
  n.N0 = name("N0", x.power(n.B, nnu + 1));
  BigInt tail = big(2 * d + 1) * nnu + 1;
  n.N1 = name("N1", x.product({x.constant(4), x.power(n.B, tail)}));
  n.N = name("N", x.product({n.N0, n.N1}));
  n.c = name("c", x.sum({one, x.product({n.a, n.B}), n.g}));
  n.coeffs = name("coeffs", x.custom(std::make_shared<CoeffEncodingRule>(src), {n.B}));
  NodeId shift = x.product({n.beta_half, bd, x.custom(std::make_shared<GeometricSumRule>(tail), {n.B})});
  n.K = name("K", x.sum({x.product({x.power(n.c, big(d)), n.coeffs}), shift}));
  n.S_code = name("S", x.sum({n.g, x.product({x.constant(2), n.K, n.N0})}));
  n.T_code = name("T", x.sum({n.M, x.product({x.sum({n.B, x.constant(-2)}), x.power(n.B, nnu * (d + 1)), n.N0})}));
  n.R_code = name("R", x.sum({x.product({x.sum({n.S_code, n.T_code, one}), n.N}), n.T_code, one}));
  n.X = name("X", x.product({x.sum({n.N, minus_one}), n.R_code}));
  n.Y = name("Y", x.power(n.N, 2));
  return n;
}

void register_rules(CustomRegistry& registry) {
  auto cache = std::make_shared<std::map<std::string, std::shared_ptr<const CodingSource>>>();
  auto mutex = std::make_shared<std::mutex>();
  auto source_of = [cache, mutex](const nlohmann::json& params) {
    nlohmann::json key = {{"source", params.at("source")}, {"make_suitable", params.at("make_suitable")}};
    std::string dump = key.dump();
    std::lock_guard lock(*mutex);
    auto it = cache->find(dump);
    if (it == cache->end()) it = cache->emplace(dump, CodingSource::from_json(key)).first;
    return it->second;
  };
  registry["geometric_sum"] = [](const nlohmann::json& params) -> std::shared_ptr<const CustomRule> {
    return std::make_shared<GeometricSumRule>(from_decimal(params.at("count").get<std::string>()));
  };
  registry["coeff_encoding"] = [source_of](const nlohmann::json& params) -> std::shared_ptr<const CustomRule> {
    return std::make_shared<CoeffEncodingRule>(source_of(params));
  };
  registry["coding_constant"] = [source_of](const nlohmann::json& params) -> std::shared_ptr<const CustomRule> {
    return std::make_shared<CodingConstantRule>(source_of(params), params.at("which").get<std::string>());
  };
}

}  // namespace dforge::coding
