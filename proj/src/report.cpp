#include "orf/report.hpp"

#include <cstdio>
#include <fstream>

#include "orf/errors.hpp"

namespace orf {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_string(const ExperimentReport& report) {
  std::string out = "suite,generator,function,quad_tol,slack";
  for (const auto& c : report.columns) {
    out += ',';
    out += c;
  }
  out += '\n';
  const std::string meta = report.suite + "," + report.generator + "," +
                           report.function + "," + format_float(report.quad_tol) +
                           "," + format_float(report.slack);
  for (const auto& row : report.rows) {
    out += meta;
    for (double v : row) {
      out += ',';
      out += format_float(v);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const ExperimentReport& report, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  const std::string body = csv_string(report);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace orf
