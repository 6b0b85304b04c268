// Acceptance run: one line per criterion, exit status 0 only if all pass.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dforge/verify.hpp"

using namespace dforge::verify;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::pair<std::string, std::string>> cases;  // suite, case id
  double limit_seconds;                                     // 0: no limit
};

struct Outcome {
  bool pass = true;
  double seconds = 0;
  std::string detail;
};

Outcome run(const Criterion& c) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  for (const auto& [suite, id] : c.cases) {
    CaseResult r = run_case(suite, id);
    if (!r.pass) {
      out.pass = false;
      if (out.detail.empty()) out.detail = r.line();
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds > 0 && out.seconds >= c.limit_seconds) {
    out.pass = false;
    if (out.detail.empty()) out.detail = "over the time limit";
  }
  return out;
}

std::string line(const Criterion& c, const Outcome& o) {
  std::ostringstream s;
  s << (o.pass ? "PASS" : "FAIL") << " [" << c.number << "] " << c.title << " (" << std::fixed << std::setprecision(2)
    << o.seconds << " s";
  if (c.limit_seconds > 0) s << ", limit " << c.limit_seconds << " s";
  s << ")";
  if (!o.detail.empty()) s << ": " << o.detail;
  return s.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::string>> lucas = {
      {"lucas", "recurrence"},           {"lucas", "elementary"},          {"lucas", "linear-expansion"},
      {"lucas", "square-divisibility"},  {"lucas", "residue-injectivity"}, {"lucas", "index-recovery"},
      {"lucas", "uv-congruence"},        {"lucas", "congruence-forward"},  {"lucas", "congruence-converse"},
      {"lucas", "pell-completeness"},    {"lucas", "pell-corollary"},      {"lucas", "apparition"}};
  const std::vector<Criterion> criteria = {
      {1, "exact decimals of eta(58, 4) and eta(32, 12)", {{"construct", "eta-pairs"}}, 1},
      {2, "expr_degree(Q tilde) = eta(nu, delta) on [1, 10]^2", {{"construct", "degree-sweep"}}, 10},
      {3, "expanded coding family degrees at (2, 1) equal the closed forms", {{"construct", "appendix-expansion"}}, 600},
      {4, "val2(binom(2X, X)) = sigma(X) for X <= 4096", {{"bitarith", "central-binom"}}, 30},
      {5, "tau test for binom(S + T, S) divisibility, N in {2, 4, 8, 16}", {{"bitarith", "tau-binom"}}, 60},
      {6, "masking equivalence, B in {4, 8}, b in {2, 4}, nu <= 2", {{"coding", "masking"}}, 60},
      {7, "coding theorem end to end for a + 1 - z1", {{"coding", "theorem-forward"}, {"coding", "theorem-reverse"}}, 120},
      {8, "Lucas sequence suite", lucas, 300},
      {9, "M_q oracle, q in {1, 2} exhaustive, q = 3 sampled, purity on every evaluation",
       {{"combine", "oracle-q1"}, {"combine", "oracle-q2"}, {"combine", "oracle-q3"}}, 300},
      {10, "three-squares representation for n <= 10^4", {{"construct", "three-squares"}}, 10},
      {11, "Q against m_q_eval of its arguments and Q tilde against Q, 100 points each", {{"construct", "composition"}}, 0},
  };

  std::vector<Outcome> outcomes;
  bool all = true;
  for (const auto& c : criteria) {
    outcomes.push_back(run(c));
    std::cout << line(c, outcomes.back()) << std::endl;
    all = all && outcomes.back().pass;
  }

  // The nine-unknown theorem and the reverse direction of the bridge theorem
  // need witnesses with psi_B(A) at astronomically large indices. They are
  // covered by criteria 5 to 9 and 11 instead of an end-to-end run.
  bool covered = true;
  for (int k : {5, 6, 7, 8, 9, 11}) covered = covered && outcomes[static_cast<std::size_t>(k - 1)].pass;
  std::cout << (covered ? "PASS" : "FAIL")
            << " [12] not reproducible end to end at desk scale: the nine-unknown theorem and the reverse direction"
               " of the bridge theorem (witnesses involve psi_B(A) at astronomical indices); accepted via criteria"
               " 5-9 and 11"
            << std::endl;
  all = all && covered;
  return all ? 0 : 1;
}
