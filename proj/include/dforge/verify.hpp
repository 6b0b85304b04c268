#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dforge::verify {

// Check counter handed to every case. Keeps the first few failure messages.
class CaseContext {
 public:
  CaseContext(std::uint64_t seed, std::optional<std::uint64_t> max) : seed_(seed), max_(max) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t max_or(std::uint64_t fallback) const { return max_.value_or(fallback); }

  bool check(bool ok, const std::string& what);
  template <class Msg>
  bool check_lazy(bool ok, Msg&& what) {
    if (ok) return check(true, std::string());
    return check(false, what());
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  const std::vector<std::string>& messages() const { return messages_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::uint64_t seed_;
  std::optional<std::uint64_t> max_;
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

struct CaseSpec {
  std::string id;
  std::string title;
  std::function<void(CaseContext&)> run;
};

struct CaseResult {
  std::string suite;
  std::string id;
  std::string title;
  bool pass = false;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;
  std::vector<std::string> notes;
  double seconds = 0;

  nlohmann::json to_json() const;
  // "PASS suite/id (checks, seconds)" plus the first failure message on failure.
  std::string line() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> max;
  unsigned threads = 0;  // 0: DIOPHANTINE_FORGE_THREADS or hardware concurrency
};

struct SuiteReport {
  std::vector<CaseResult> cases;  // sorted by suite, then case id
  bool pass() const;
  nlohmann::json to_json() const;
};

// bitarith, coding, lucas, bridge, combine, construct
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite.
std::vector<CaseSpec> suite_cases(const std::string& suite);

// "all" runs every suite. Cases may run in parallel; results come back sorted.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options = {});
CaseResult run_case(const std::string& suite, const std::string& id, const SuiteOptions& options = {});

// Per-suite case lists, one translation unit each.
std::vector<CaseSpec> bitarith_cases();
std::vector<CaseSpec> coding_cases();
std::vector<CaseSpec> lucas_cases();
std::vector<CaseSpec> bridge_cases();
std::vector<CaseSpec> combine_cases();
std::vector<CaseSpec> construct_cases();

}  // namespace dforge::verify
