#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orf/config.hpp"
#include "orf/report.hpp"

namespace orf {

struct SuiteResult {
  std::string name;           // csv stem (suite or suite_label)
  bool pass = false;
  double worst_margin = 0.0;  // most binding signed margin; >= 0 passes
  std::string detail;         // one-line account of the binding check
  ExperimentReport report;
};

// Runs one suite with its own deterministic RNG stream.
SuiteResult run_suite(const SuiteConfig& sc, const ExperimentConfig& cfg,
                      std::uint64_t stream_seed);

struct RunOutcome {
  int exit_code = 0;  // 0 all suites pass, 2 otherwise
  std::vector<SuiteResult> results;
};

// Runs every configured suite (concurrently when parallel), writes
// <output>/<stem>.csv per suite, prints one summary line each.  RNG streams
// are derived per suite index, so serial and parallel runs of the same
// config and seed produce byte-identical CSV files.
RunOutcome run(const ExperimentConfig& cfg, bool parallel);

}  // namespace orf
