#include "dforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>

#include "dforge/errors.hpp"
#include "dforge/parallel.hpp"

namespace dforge::verify {

namespace {

constexpr std::size_t kKeptMessages = 5;

CaseResult execute(const std::string& suite, const CaseSpec& spec, const SuiteOptions& options) {
  CaseContext ctx(options.seed, options.max);
  CaseResult r;
  r.suite = suite;
  r.id = spec.id;
  r.title = spec.title;
  auto start = std::chrono::steady_clock::now();
  try {
    spec.run(ctx);
  } catch (const std::exception& e) {
    ctx.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks = ctx.checks();
  r.failures = ctx.failures();
  r.messages = ctx.messages();
  r.notes = ctx.notes();
  r.pass = r.failures == 0 && r.checks > 0;
  if (r.checks == 0) r.messages.push_back("case performed no checks");
  return r;
}

}  // namespace

bool CaseContext::check(bool ok, const std::string& what) {
  ++checks_;
  if (!ok) {
    ++failures_;
    if (messages_.size() < kKeptMessages) messages_.push_back(what);
  }
  return ok;
}

nlohmann::json CaseResult::to_json() const {
  return {{"suite", suite}, {"id", id},           {"title", title},       {"pass", pass},
          {"checks", checks}, {"failures", failures}, {"messages", messages}, {"notes", notes}};
}

std::string CaseResult::line() const {
  std::ostringstream out;
  out << (pass ? "PASS " : "FAIL ") << suite << "/" << id << " (" << checks << " checks, " << std::fixed
      << std::setprecision(2) << seconds << " s)";
  if (!pass && !messages.empty()) out << ": " << messages.front();
  return out.str();
}

bool SuiteReport::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : cases) list.push_back(c.to_json());
  return {{"pass", pass()}, {"cases", list}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bitarith", "coding", "lucas", "bridge", "combine", "construct"};
  return names;
}

std::vector<CaseSpec> suite_cases(const std::string& suite) {
  if (suite == "bitarith") return bitarith_cases();
  if (suite == "coding") return coding_cases();
  if (suite == "lucas") return lucas_cases();
  if (suite == "bridge") return bridge_cases();
  if (suite == "combine") return combine_cases();
  if (suite == "construct") return construct_cases();
  throw DomainError("unknown suite: " + suite);
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  std::vector<std::pair<std::string, CaseSpec>> jobs;
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  for (const auto& s : suites) {
    for (auto& c : suite_cases(s)) jobs.emplace_back(s, std::move(c));
  }
  // One job per chunk slot; each worker takes a contiguous block of cases.
  auto chunks = parallel_chunks<std::vector<CaseResult>>(jobs.size(), options.threads, [&](std::uint64_t b, std::uint64_t e) {
    std::vector<CaseResult> out;
    for (std::uint64_t i = b; i < e; ++i) out.push_back(execute(jobs[i].first, jobs[i].second, options));
    return out;
  });
  SuiteReport report;
  for (auto& part : chunks) {
    for (auto& c : part) report.cases.push_back(std::move(c));
  }
  std::sort(report.cases.begin(), report.cases.end(), [](const CaseResult& l, const CaseResult& r) {
    return std::tie(l.suite, l.id) < std::tie(r.suite, r.id);
  });
  return report;
}

CaseResult run_case(const std::string& suite, const std::string& id, const SuiteOptions& options) {
  for (const auto& c : suite_cases(suite)) {
    if (c.id == id) return execute(suite, c, options);
  }
  throw DomainError("unknown case " + suite + "/" + id);
}

}  // namespace dforge::verify
