// Command-line front end. Everything computational goes through the
// shared library's C interface (svf/svf.h); this file only parses
// arguments, reads files, and prints.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "svf/svf.h"

namespace {

// Exit codes: 0 success / all trials passed, 1 usage or input error,
// 2 pole or degeneracy, 3 verification failures.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPole = 2;
constexpr int kExitSuiteFailed = 3;

void print_error(int code, const std::string& message) {
  nlohmann::ordered_json doc;
  doc["error"] = {{"code", code}, {"message", message}};
  std::cout << doc.dump() << "\n";
}

int status_to_exit(svf_status status) {
  switch (status) {
    case SVF_OK:
      return kExitOk;
    case SVF_ERR_POLE:
      return kExitPole;
    case SVF_ERR_INPUT:
      return kExitInput;
    default:
      return kExitInput;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { svf_free(ptr); }
};

struct OwnedParams {
  svf_params* ptr = nullptr;
  ~OwnedParams() { svf_params_free(ptr); }
};

int run_eval(const std::string& quantity, const std::string& method,
             const std::string& params_path, bool want_float, int digits) {
  std::string text;
  if (!read_file(params_path, text)) {
    print_error(kExitInput, "cannot read parameter file '" + params_path + "'");
    return kExitInput;
  }
  OwnedParams params;
  if (svf_params_parse(text.c_str(), &params.ptr) != SVF_OK) {
    print_error(kExitInput, svf_last_error());
    return kExitInput;
  }
  OwnedString result;
  const svf_status status =
      svf_eval(params.ptr, quantity.c_str(),
               method.empty() ? nullptr : method.c_str(),
               want_float ? digits : -1, &result.ptr);
  if (result.ptr) {
    std::cout << result.ptr << "\n";
  } else if (status != SVF_OK) {
    print_error(status_to_exit(status), svf_last_error());
  }
  return status_to_exit(status);
}

int run_verify(const std::string& suite, unsigned trials,
               unsigned long long seed, unsigned max_n) {
  OwnedString report;
  unsigned failures = 0;
  const svf_status status =
      svf_verify(suite.c_str(), trials, seed, max_n, &report.ptr, &failures);
  if (status != SVF_OK) {
    print_error(status_to_exit(status), svf_last_error());
    return status_to_exit(status);
  }
  std::cout << report.ptr << "\n";
  return failures == 0 ? kExitOk : kExitSuiteFailed;
}

int run_bench(const std::string& quantity, const std::string& sizes,
              const std::string& method, const std::string& out_path) {
  int lo = 0, hi = 0;
  const auto dots = sizes.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(sizes);
    } else {
      lo = std::stoi(sizes.substr(0, dots));
      hi = std::stoi(sizes.substr(dots + 2));
    }
  } catch (const std::exception&) {
    print_error(kExitInput, "invalid size range '" + sizes + "' (expected A..B)");
    return kExitInput;
  }
  OwnedString csv;
  const svf_status status =
      svf_bench(quantity.c_str(), method.c_str(), lo, hi, &csv.ptr);
  if (status != SVF_OK) {
    print_error(status_to_exit(status), svf_last_error());
    return status_to_exit(status);
  }
  if (out_path.empty()) {
    std::cout << csv.ptr;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      print_error(kExitInput, "cannot write '" + out_path + "'");
      return kExitInput;
    }
    out << csv.ptr;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact six-vertex partition functions: brute-force "
               "contraction, closed forms, identity verification"};
  app.require_subcommand(1);

  std::string quantity, method, params_path, suite = "all", sizes, out_path;
  bool want_float = false;
  int digits = 12;
  unsigned trials = 50, max_n = 5;
  unsigned long long seed = 0;

  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->add_option("quantity", quantity,
                   "triangular | gdw | trapezoid | efp | z11 | beta | gamma")
      ->required();
  eval->add_option("--method", method,
                   "contraction | factorized | subset-sum | determinant | "
                   "components (default depends on quantity)");
  eval->add_option("--params", params_path, "parameter file (JSON)")
      ->required();
  eval->add_flag("--float", want_float, "also print a decimal rendering");
  eval->add_option("--digits", digits, "decimal places for --float")
      ->check(CLI::Range(0, 10000));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--trials", trials, "trials per suite");
  verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--max-n", max_n, "size bound for sampled instances");

  auto* bench = app.add_subcommand("bench", "time one method over sizes");
  bench->add_option("--quantity", quantity, "triangular | gdw | trapezoid | efp")
      ->required();
  bench->add_option("--sizes", sizes, "size range A..B")->required();
  bench->add_option("--method", method, "method to time")->required();
  bench->add_option("--out", out_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (eval->parsed())
    return run_eval(quantity, method, params_path, want_float, digits);
  if (verify->parsed()) return run_verify(suite, trials, seed, max_n);
  return run_bench(quantity, sizes, method, out_path);
}
