#pragma once

#include <string>
#include <vector>

namespace orf {

// Per-n experiment rows plus constant metadata.  Metadata is emitted as
// leading columns repeated on every row so the CSV stays "header + one row
// per n" with no comment lines.
struct ExperimentReport {
  std::string suite;
  std::string generator;
  std::string function;
  double quad_tol = 0.0;
  double slack = 0.0;
  std::vector<std::string> columns;        // payload column names
  std::vector<std::vector<double>> rows;   // one entry per payload column
};

// %.17g, locale-independent; round-trips doubles exactly.
std::string format_float(double v);

// Deterministic byte encoding: identical report -> identical string.
std::string csv_string(const ExperimentReport& report);

void emit_csv(const ExperimentReport& report, const std::string& path);

}  // namespace orf
