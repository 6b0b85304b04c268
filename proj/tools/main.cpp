#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dforge/construct.hpp"
#include "dforge/errors.hpp"
#include "dforge/parse.hpp"
#include "dforge/verify.hpp"

using namespace dforge;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MultiPoly read_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poly(buf.str());
}

// "k=v,k2=v2" with integer values.
Point parse_point(const std::string& text) {
  Point out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value, got '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    trim(key);
    trim(value);
    BigInt v;
    if (key.empty() || v.set_str(value, 10) != 0) throw UsageError("bad binding '" + item + "'");
    if (out.count(key) != 0) throw UsageError("duplicate binding for " + key);
    out[key] = v;
  }
  return out;
}

void check_pair_args(std::uint64_t nu, std::uint64_t delta) {
  if (nu < 1 || delta < 1) throw UsageError("NU and DELTA must be at least 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal Diophantine pairs over the integers: construction, degrees and verification"};
  app.require_subcommand(1, 1);

  std::uint64_t nu = 0, delta = 0;
  auto* eta_cmd = app.add_subcommand("eta", "print eta(NU, DELTA) in decimal");
  eta_cmd->add_option("NU", nu)->required();
  eta_cmd->add_option("DELTA", delta)->required();
  auto* pair_cmd = app.add_subcommand("pair", "print the universal pair (11, eta(NU, DELTA))");
  pair_cmd->add_option("NU", nu)->required();
  pair_cmd->add_option("DELTA", delta)->required();

  std::string poly_file, out_file, at;
  auto* construct_cmd = app.add_subcommand("construct", "emit the eleven-unknown polynomial as DAG JSON");
  construct_cmd->add_option("--poly", poly_file, "file holding P(a, z1, ...)")->required();
  construct_cmd->add_option("--out", out_file, "output file (default stdout)");
  auto* degree_cmd = app.add_subcommand("degree", "emit the degree report JSON");
  degree_cmd->add_option("--poly", poly_file)->required();
  auto* eval_cmd = app.add_subcommand("eval", "evaluate the eleven-unknown polynomial at a point");
  eval_cmd->add_option("--poly", poly_file)->required();
  eval_cmd->add_option("--at", at, "bindings name=value,... for a and the unknowns")->required();

  std::string suite;
  verify::SuiteOptions options;
  std::uint64_t max = 0;
  bool json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  verify_cmd->add_option("SUITE", suite)->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--seed", options.seed, "random seed (default 1)");
  auto* max_opt = verify_cmd->add_option("--max", max, "size knob, see README for each suite");
  verify_cmd->add_flag("--json", json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eta_cmd) {
      check_pair_args(nu, delta);
      std::cout << to_decimal(construct::eta(nu, delta)) << "\n";
      return kOk;
    }
    if (*pair_cmd) {
      check_pair_args(nu, delta);
      std::cout << construct::universal_pair(nu, delta).to_string() << "\n";
      return kOk;
    }
    if (*construct_cmd) {
      std::string doc = to_json(construct::build_Q_tilde(read_poly(poly_file))).dump();
      if (out_file.empty()) {
        std::cout << doc << "\n";
      } else {
        std::ofstream out(out_file);
        if (!(out << doc << "\n")) throw UsageError("cannot write " + out_file);
      }
      return kOk;
    }
    if (*degree_cmd) {
      std::cout << construct::degree_report(read_poly(poly_file)).dump(2) << "\n";
      return kOk;
    }
    if (*eval_cmd) {
      MultiPoly p = read_poly(poly_file);
      Point pt = parse_point(at);
      std::cout << to_decimal(expr_evaluate(construct::build_Q_tilde(p), pt)) << "\n";
      return kOk;
    }
    if (*verify_cmd) {
      if (*max_opt) options.max = max;
      verify::SuiteReport report = verify::run_suite(suite, options);
      if (json) {
        std::cout << report.to_json().dump(2) << "\n";
      } else {
        std::size_t passed = 0;
        for (const auto& c : report.cases) {
          std::cout << c.line() << "\n";
          passed += c.pass ? 1 : 0;
        }
        std::cout << passed << "/" << report.cases.size() << " cases passed\n";
      }
      return report.pass() ? kOk : kFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (auto* cmd : {eta_cmd, pair_cmd}) {
      if (*cmd) std::cerr << cmd->help();
    }
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << poly_file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
