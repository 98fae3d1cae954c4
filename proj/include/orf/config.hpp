#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orf/generators.hpp"
#include "orf/target.hpp"

namespace orf {

// Parsed `generator = kind args...` value; label() is the normalized
// comma-free form used in CSV metadata.
struct GeneratorSpec {
  std::string kind = "constant";  // constant | geometric_im | power_law |
                                  // mixed_cycle | file
  double p1 = 0.0;
  double p2 = 2.0;
  std::string path;

  std::string label() const;
};

PoleSequence make_poles(const GeneratorSpec& spec, int count);

// Parsed `function = name args...` value.
struct FunctionSpec {
  std::string name = "runge";  // runge | gauss | sign_exp | sign_gauss |
                               // const | zero
  double c = 1.0;
  double lo = -8.0;
  double hi = 8.0;

  std::string label() const;
};

TargetFunction make_function(const FunctionSpec& spec);

struct SuiteConfig {
  std::string suite;   // section name
  std::string label;   // optional section label (output/rng discriminator)
  int header_line = 0;
  GeneratorSpec generator;
  FunctionSpec function;
  std::vector<int> n_list;
  double tol = 0.0;      // suite-local quadrature tol; 0 = inherit global
  // orthonormality
  int k_range = 5;
  double gram_tol = 1e-8;
  // kernel_equivalence
  int n_max = 8;
  int pairs = 100;
  double separation = 0.1;
  double cd_tol = 1e-10;
  double dirichlet_tol = 1e-9;
  // lp_convergence
  double p = 2.0;
  // jump/dini
  double x0 = 0.0;
  double final_tol = 0.05;
  double decay_factor = 0.5;
  // bounds
  double x_min = -5.0, x_max = 5.0, x_step = 0.5;
  double y_min = 0.25, y_max = 5.0, y_step = 0.25;
  // probes
  double x = 0.0;
  double delta = 1.0;

  std::string csv_stem() const {
    return label.empty() ? suite : suite + "_" + label;
  }
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::string output = "out";
  double quad_tol = 1e-10;
  double slack = 1e-9;      // analytic bound-check slack
  double fd_slack = 1e-3;   // finite-difference bound-check slack
  std::vector<SuiteConfig> suites;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace orf
