#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace svf {

struct SuiteOptions {
  unsigned trials = 50;
  std::uint64_t seed = 0;
  unsigned max_size = 5;
};

// Canonical suite names, excluding the aggregate "all".
const std::vector<std::string>& suite_names();

// Runs one named suite or "all". Pole-colliding draws are redrawn, never
// counted, so passes + |failures| = trials for every suite. Reports are
// byte-reproducible for fixed (trials, seed, max_size) apart from the
// elapsed_seconds fields. InputError on unknown suite names.
nlohmann::ordered_json run_suites(const std::string& name,
                                  const SuiteOptions& options);

// Total number of failures recorded in a report from run_suites.
unsigned report_failures(const nlohmann::ordered_json& report);

}  // namespace svf
