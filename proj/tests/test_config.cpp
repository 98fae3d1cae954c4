#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "orf/config.hpp"
#include "orf/report.hpp"
#include "orf/suites.hpp"

using namespace orf;

namespace {

int error_line(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ConfigParseError& e) {
    return e.line;
  }
  return -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("a full config round-trips globals and suite settings") {
  const ExperimentConfig cfg = parse_config_text(
      "# experiment\n"
      "seed = 7\n"
      "output = results\n"
      "quad_tol = 1e-9\n"
      "slack = 1e-8\n"
      "\n"
      "[lp_convergence runge]\n"
      "generator = constant 0 2\n"
      "function = runge\n"
      "n_list = 1 2 4\n"
      "p = 2\n"
      "\n"
      "[bounds]\n"
      "generator = power_law 0.5 0.5\n"
      "n_list = 5 10\n"
      "y_min = 0.5\n");
  CHECK(cfg.seed == 7);
  CHECK(cfg.output == "results");
  CHECK(cfg.quad_tol == 1e-9);
  CHECK(cfg.slack == 1e-8);
  CHECK(cfg.fd_slack == 1e-3);  // default survives
  REQUIRE(cfg.suites.size() == 2);
  CHECK(cfg.suites[0].suite == "lp_convergence");
  CHECK(cfg.suites[0].label == "runge");
  CHECK(cfg.suites[0].csv_stem() == "lp_convergence_runge");
  CHECK(cfg.suites[0].generator.kind == "constant");
  CHECK(cfg.suites[0].generator.p2 == 2.0);
  CHECK(cfg.suites[0].function.name == "runge");
  CHECK(cfg.suites[0].n_list == std::vector<int>{1, 2, 4});
  CHECK(cfg.suites[1].csv_stem() == "bounds");
  CHECK(cfg.suites[1].generator.kind == "power_law");
  CHECK(cfg.suites[1].y_min == 0.5);
}

TEST_CASE("suites without an explicit n_list receive defaults") {
  const ExperimentConfig cfg = parse_config_text(
      "[lp_convergence]\ngenerator = constant 0 2\n"
      "[probes]\ngenerator = constant 0 2\n");
  CHECK(cfg.suites[0].n_list == std::vector<int>{1, 2, 4, 8, 16});
  CHECK(cfg.suites[1].n_list == std::vector<int>{1, 4, 16, 64});
}

TEST_CASE("parse errors carry the offending line number") {
  CHECK(error_line("seed = 1\nbogus_key = 2\n[probes]\n") == 2);
  CHECK(error_line("[probes]\nn_list =\n") == 2);
  CHECK(error_line("[probes]\nn_list = 4 2\n") == 2);
  CHECK(error_line("[probes]\nn_list = 0\n") == 2);
  CHECK(error_line("seed = nope\n") == 1);
  CHECK(error_line("[unknown_suite]\n") == 1);
  CHECK(error_line("[probes extra words here]\n") == 1);
  CHECK(error_line("[probes]\ndelta = -1\n") == 2);
  CHECK(error_line("quad_tol = 0\n") == 1);
  CHECK(error_line("[probes]\nno equals sign\n") == 2);
  CHECK(error_line("") == 0);  // no suites declared
  CHECK(error_line("[lp_convergence]\np = 1\n") == 2);
  CHECK(error_line("[bounds]\nx_min = 2\nx_max = 1\n") == 1);  // cross-field
}

TEST_CASE("generator values are validated") {
  CHECK(error_line("[probes]\ngenerator = constant 0 -2\n") == 2);
  CHECK(error_line("[probes]\ngenerator = geometric_im 0\n") == 2);
  CHECK(error_line("[probes]\ngenerator = mixed_cycle 3\n") == 2);
  CHECK(error_line("[probes]\ngenerator = warp 1\n") == 2);
  CHECK(error_line("[probes]\nfunction = const 1 2 2\n") == 2);
  CHECK(error_line("[probes]\nfunction = nosuch\n") == 2);
}

TEST_CASE("generator and function specs print comma-free labels") {
  GeneratorSpec g;
  g.kind = "constant";
  g.p1 = 0.0;
  g.p2 = 2.0;
  CHECK(g.label() == "constant 0 2");
  g.kind = "mixed_cycle";
  CHECK(g.label() == "mixed_cycle");
  FunctionSpec f;
  f.name = "const";
  f.c = 1.0;
  f.lo = -8.0;
  f.hi = 8.0;
  CHECK(f.label() == "const 1 -8 8");
}

TEST_CASE("pole factories honour the requested prefix length") {
  GeneratorSpec g;
  g.kind = "geometric_im";
  g.p1 = 0.5;
  const PoleSequence seq = make_poles(g, 4);
  REQUIRE(seq.size() == 4);
  CHECK(seq.poles[3] == std::complex<double>(0.0, 0.125));
}

TEST_CASE("pole files are read and length-checked") {
  const char* path = "config_test_poles.txt";
  {
    std::ofstream out(path);
    out << "0 2\n1.5 0.5\n";
  }
  GeneratorSpec g;
  g.kind = "file";
  g.path = path;
  const PoleSequence seq = make_poles(g, 2);
  REQUIRE(seq.size() >= 2);
  CHECK(seq.poles[1] == std::complex<double>(1.5, 0.5));
  CHECK_THROWS_AS(make_poles(g, 50), PrefixTooShort);
  g.path = "definitely_missing_poles.txt";
  CHECK_THROWS_AS(make_poles(g, 1), IoError);
  {
    std::ofstream out(path);
    out << "0 2\nnot a pole\n";
  }
  g.path = path;
  CHECK_THROWS_AS(make_poles(g, 1), IoError);
  std::remove(path);
}

TEST_CASE("target functions expose marks, decay and support") {
  FunctionSpec s;
  s.name = "sign_exp";
  const TargetFunction f = make_function(s);
  REQUIRE(f.marked_at(0.0) != nullptr);
  CHECK(f.marked_at(0.0)->left_limit == -1.0);
  CHECK(f.marked_at(0.0)->right_limit == 1.0);
  CHECK(f.marked_at(0.5) == nullptr);
  CHECK(f.eval(1.0).real() == doctest::Approx(std::exp(-1.0)));
  CHECK(f.eval(-1.0).real() == doctest::Approx(-std::exp(-1.0)));

  FunctionSpec c;
  c.name = "const";
  c.c = 3.0;
  c.lo = -1.0;
  c.hi = 2.0;
  const TargetFunction box = make_function(c);
  CHECK(box.decay == DecayClass::Compact);
  CHECK(box.support_lo == -1.0);
  CHECK(box.support_hi == 2.0);
  CHECK(box.eval(0.0).real() == 3.0);
  CHECK(box.eval(5.0).real() == 0.0);
}

TEST_CASE("missing config files raise IoError") {
  CHECK_THROWS_AS(parse_config_file("no_such_config.ini"), IoError);
}

TEST_CASE("floats in reports round-trip through the formatter") {
  CHECK(format_float(0.1) == "0.10000000000000001");
  CHECK(format_float(1.0) == "1");
  CHECK(format_float(-2.9788744092e-4) == "-0.00029788744091999999");
  CHECK(format_float(1e-8) == "1e-08");
}

TEST_CASE("csv encoding is stable and carries metadata per row") {
  ExperimentReport rep;
  rep.suite = "lp_convergence";
  rep.generator = "constant 0 2";
  rep.function = "runge";
  rep.quad_tol = 1e-9;
  rep.slack = 1e-8;
  rep.columns = {"n", "lp_error"};
  rep.rows = {{1.0, 0.5}, {2.0, 0.25}};
  const std::string text = csv_string(rep);
  CHECK(text ==
        "suite,generator,function,quad_tol,slack,n,lp_error\n"
        "lp_convergence,constant 0 2,runge,1.0000000000000001e-09,"
        "1e-08,1,0.5\n"
        "lp_convergence,constant 0 2,runge,1.0000000000000001e-09,"
        "1e-08,2,0.25\n");

  const char* path = "config_test_report.csv";
  emit_csv(rep, path);
  CHECK(slurp(path) == text);
  std::remove(path);
}

TEST_CASE("suite runs are deterministic across serial and parallel modes") {
  const char* config_text =
      "seed = 11\n"
      "quad_tol = 1e-9\n"
      "[orthonormality]\n"
      "generator = mixed_cycle\n"
      "k_range = 2\n"
      "[kernel_equivalence]\n"
      "generator = mixed_cycle\n"
      "pairs = 25\n"
      "n_max = 4\n";
  ExperimentConfig cfg = parse_config_text(config_text);

  cfg.output = "config_test_run_a";
  const RunOutcome a = run(cfg, false);
  cfg.output = "config_test_run_b";
  const RunOutcome b = run(cfg, false);
  cfg.output = "config_test_run_c";
  const RunOutcome c = run(cfg, true);

  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(c.exit_code == 0);
  REQUIRE(a.results.size() == 2);
  CHECK(a.results[0].pass);
  CHECK(a.results[1].pass);
  for (const char* stem : {"orthonormality", "kernel_equivalence"}) {
    const std::string fa = slurp("config_test_run_a/" + std::string(stem) + ".csv");
    const std::string fb = slurp("config_test_run_b/" + std::string(stem) + ".csv");
    const std::string fc = slurp("config_test_run_c/" + std::string(stem) + ".csv");
    CHECK(fa == fb);
    CHECK(fa == fc);
    CHECK(!fa.empty());
  }
}

TEST_CASE("duplicate suite stems are rejected at run time") {
  ExperimentConfig cfg = parse_config_text(
      "[probes]\ngenerator = constant 0 2\n[probes]\ngenerator = constant 0 2\n");
  cfg.output = "config_test_dup";
  CHECK_THROWS_AS(run(cfg, false), Error);
}
