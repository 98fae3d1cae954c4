#include "orf/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <future>
#include <limits>
#include <numbers>
#include <set>

#include "orf/basis.hpp"
#include "orf/kernels.hpp"
#include "orf/quadrature.hpp"
#include "orf/rng.hpp"
#include "orf/series.hpp"

namespace orf {

namespace {

double suite_tol(const SuiteConfig& sc, const ExperimentConfig& cfg) {
  return sc.tol > 0.0 ? sc.tol : cfg.quad_tol;
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[192];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

std::vector<double> grid(double lo, double hi, double step) {
  const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(std::max(count, 1)));
  for (int i = 0; i < count; ++i) g.push_back(lo + i * step);
  return g;
}

void stamp(ExperimentReport& rep, const SuiteConfig& sc,
           const ExperimentConfig& cfg, double tol) {
  rep.suite = sc.csv_stem();
  rep.generator = sc.generator.label();
  rep.quad_tol = tol;
  rep.slack = cfg.slack;
}

SuiteResult run_orthonormality(const SuiteConfig& sc,
                               const ExperimentConfig& cfg) {
  const double tol = suite_tol(sc, cfg);
  const int k_range = sc.k_range;
  const BasisSystem system =
      BasisSystem::paired(make_poles(sc.generator, k_range + 1));
  double dev = 0.0;
  int worst_i = 0, worst_j = 0;
  for (int i = -k_range; i <= k_range; ++i) {
    const Integrand fi = [&system, i](double x) {
      return phi(system, i, std::complex<double>(x, 0.0));
    };
    for (int j = i; j <= k_range; ++j) {
      const Integrand fj = [&system, j](double x) {
        return phi(system, j, std::complex<double>(x, 0.0));
      };
      const std::complex<double> g = inner_product(fi, fj, tol);
      const double target = i == j ? 1.0 : 0.0;
      const double d = std::abs(g - target);
      if (d > dev) {
        dev = d;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  SuiteResult res;
  res.report.function = "none";
  stamp(res.report, sc, cfg, tol);
  res.report.columns = {"k_range", "gram_deviation", "gram_tol"};
  res.report.rows = {{static_cast<double>(k_range), dev, sc.gram_tol}};
  res.worst_margin = sc.gram_tol - dev;
  res.pass = res.worst_margin >= 0.0;
  res.detail =
      fmt("max |gram - id| = %.3e at (k, l) = (%g, %g)", dev,
          static_cast<double>(worst_i), static_cast<double>(worst_j));
  return res;
}

SuiteResult run_kernel_equivalence(const SuiteConfig& sc,
                                   const ExperimentConfig& cfg,
                                   std::uint64_t stream_seed) {
  Rng rng(stream_seed);
  const double keep_away = 1e-3;  // evaluation-to-pole distance floor

  double cd_rel_max = 0.0;
  for (int trial = 0; trial < sc.pairs; ++trial) {
    const int n = rng.uniform_int(1, sc.n_max);
    const int m = rng.uniform_int(1, sc.n_max);
    PoleSequence upper;
    for (int k = 0; k < n; ++k) upper.poles.push_back(rng.upper_pole());
    PoleSequence lower;
    lower.half_plane = HalfPlane::Lower;
    for (int k = 1; k < m; ++k)
      lower.poles.push_back(std::conj(rng.upper_pole()));
    const BasisSystem system = BasisSystem::general(upper, lower);

    const auto clear_of_poles = [&](std::complex<double> w) {
      for (const auto& a : system.upper.poles)
        if (std::abs(w - a) < keep_away || std::abs(w - std::conj(a)) < keep_away)
          return false;
      for (const auto& b : system.lower.poles)
        if (std::abs(w - b) < keep_away || std::abs(w - std::conj(b)) < keep_away)
          return false;
      return true;
    };
    std::complex<double> z, zeta;
    do {
      z = {rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0)};
      zeta = {rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0)};
    } while (std::abs(std::conj(zeta) - z) <= sc.separation ||
             !clear_of_poles(z) || !clear_of_poles(zeta));

    std::complex<double> direct_plus = 0.0;
    for (int k = 0; k < n; ++k)
      direct_plus += std::conj(phi(system, k, zeta)) * phi(system, k, z);
    const std::complex<double> closed_plus =
        cd_kernel_plus(system.upper, n, z, zeta);
    cd_rel_max = std::max(
        cd_rel_max, std::abs(closed_plus - direct_plus) / std::abs(direct_plus));

    if (m > 1) {
      std::complex<double> direct_minus = 0.0;
      for (int k = 1; k < m; ++k)
        direct_minus += std::conj(phi(system, -k, zeta)) * phi(system, -k, z);
      const std::complex<double> closed_minus =
          cd_kernel_minus(system.lower, m, z, zeta);
      cd_rel_max = std::max(cd_rel_max, std::abs(closed_minus - direct_minus) /
                                            std::abs(direct_minus));
    }
  }

  const BasisSystem paired =
      BasisSystem::paired(make_poles(sc.generator, sc.n_max));
  double closed_abs_max = 0.0, sine_abs_max = 0.0;
  const auto compare_at = [&](int n, double x, double t) {
    const std::complex<double> direct =
        dirichlet_direct(paired, n, n + 1, x, t);
    const std::complex<double> closed =
        dirichlet_closed(paired, n, n + 1, x, t);
    const double sine = dirichlet_sine(paired.upper, n, x, t);
    closed_abs_max = std::max(closed_abs_max, std::abs(closed - direct));
    sine_abs_max =
        std::max(sine_abs_max, std::abs(std::complex<double>(sine) - direct));
  };
  for (int trial = 0; trial < sc.pairs; ++trial) {
    const int n = rng.uniform_int(1, sc.n_max);
    const double x = rng.uniform(-5.0, 5.0);
    const double sep = (rng.unit() < 0.5 ? -1.0 : 1.0) *
                       std::pow(10.0, rng.uniform(-5.0, 1.0));
    compare_at(n, x, x + sep);
  }
  // Diagonal-limit path: offsets at and below the switch threshold.
  for (const double off : {0.0, 1e-12, 1e-9, 3e-7}) {
    const int n = rng.uniform_int(1, sc.n_max);
    const double x = rng.uniform(-5.0, 5.0);
    compare_at(n, x, x + off);
  }

  const double dirichlet_abs = std::max(closed_abs_max, sine_abs_max);
  SuiteResult res;
  res.report.function = "none";
  stamp(res.report, sc, cfg, suite_tol(sc, cfg));
  res.report.columns = {"pairs", "cd_rel_max", "closed_abs_max",
                        "sine_abs_max"};
  res.report.rows = {{static_cast<double>(sc.pairs), cd_rel_max,
                      closed_abs_max, sine_abs_max}};
  res.worst_margin =
      std::min(sc.cd_tol - cd_rel_max, sc.dirichlet_tol - dirichlet_abs);
  res.pass = res.worst_margin >= 0.0;
  res.detail = fmt("cd rel err %.3e, dirichlet abs err %.3e", cd_rel_max,
                   dirichlet_abs);
  return res;
}

SuiteResult run_lp_convergence(const SuiteConfig& sc,
                               const ExperimentConfig& cfg) {
  const double tol = suite_tol(sc, cfg);
  const BasisSystem system =
      BasisSystem::paired(make_poles(sc.generator, sc.n_list.back()));
  const TargetFunction f = make_function(sc.function);
  SuiteResult res;
  res.report.function = f.name;
  stamp(res.report, sc, cfg, tol);
  res.report.columns = {"n", "sigma", "varsigma", "ratio", "lp_error"};
  std::vector<double> errs;
  for (int n : sc.n_list) {
    const double sig = sigma_n(system.upper, n);
    const double var = varsigma_n(system.upper, n);
    const double e = lp_error(system, f, n, sc.p, tol);
    errs.push_back(e);
    res.report.rows.push_back({static_cast<double>(n), sig, var,
                               sig > 0.0 ? var / sig : 0.0, e});
  }
  double margin = std::numeric_limits<double>::infinity();
  std::size_t worst = 0;
  for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
    const double drop = errs[i] - errs[i + 1];
    if (drop < margin) {
      margin = drop;
      worst = i;
    }
  }
  if (errs.size() < 2) margin = errs.empty() ? 0.0 : errs[0];
  res.worst_margin = margin;
  res.pass = margin > 0.0;
  res.detail = errs.size() < 2
                   ? fmt("single error value %.3e", errs.empty() ? 0.0 : errs[0])
                   : fmt("smallest drop %.3e between n = %g and n = %g", margin,
                         static_cast<double>(sc.n_list[worst]),
                         static_cast<double>(sc.n_list[worst + 1]));
  return res;
}

SuiteResult run_pointwise(const SuiteConfig& sc, const ExperimentConfig& cfg,
                          bool jump) {
  const double tol = suite_tol(sc, cfg);
  const BasisSystem system =
      BasisSystem::paired(make_poles(sc.generator, sc.n_list.back()));
  const TargetFunction f = make_function(sc.function);
  SuiteResult res;
  res.report = jump ? jump_convergence(system, f, sc.x0, sc.n_list, tol)
                    : dini_convergence(system, f, sc.x0, sc.n_list, tol);
  stamp(res.report, sc, cfg, tol);
  const std::size_t dev_col = res.report.columns.size() - 1;
  const double first = res.report.rows.front()[dev_col];
  const double last = res.report.rows.back()[dev_col];
  const double tol_margin = sc.final_tol - last;
  if (jump) {
    const double decay_margin = sc.decay_factor * first - last;
    res.worst_margin = std::min(decay_margin, tol_margin);
    res.detail = fmt("deviation %.3e -> %.3e (decay target %.3e)", first, last,
                     sc.decay_factor * first);
  } else {
    res.worst_margin = tol_margin;
    res.detail = fmt("final deviation %.3e against %.3e", last, sc.final_tol);
  }
  res.pass = res.worst_margin >= 0.0;
  return res;
}

SuiteResult run_bounds(const SuiteConfig& sc, const ExperimentConfig& cfg) {
  const PoleSequence upper = make_poles(sc.generator, sc.n_list.back());
  const std::vector<double> xs = grid(sc.x_min, sc.x_max, sc.x_step);
  const std::vector<double> ys = grid(sc.y_min, sc.y_max, sc.y_step);
  SuiteResult res;
  res.report.function = "none";
  stamp(res.report, sc, cfg, suite_tol(sc, cfg));
  res.report.columns = {"n",
                        "ymu_prime_lower",
                        "mu_lower",
                        "ymu_second_upper",
                        "mu_prime_upper",
                        "mu_second_upper"};
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  std::string binding = "all margins clear";
  const auto consider = [&](const BoundWorstPoint& w, const char* name, int n,
                            double slack) {
    if (w.margin < -slack) ok = false;
    if (w.margin < worst) {
      worst = w.margin;
      binding = std::string(name) +
                fmt(" margin %.3e at (x, y) = (%g, %g)", w.margin, w.x, w.y) +
                fmt(", n = %g", static_cast<double>(n));
    }
  };
  for (int n : sc.n_list) {
    const BoundCheckReport rep = bound_check(upper, n, xs, ys);
    res.report.rows.push_back(
        {static_cast<double>(n), rep.ymu_prime_lower.margin,
         rep.mu_lower.margin, rep.ymu_second_upper.margin,
         rep.mu_prime_upper.margin, rep.mu_second_upper.margin});
    consider(rep.ymu_prime_lower, "ymu_prime_lower", n, cfg.slack);
    consider(rep.mu_lower, "mu_lower", n, cfg.slack);
    consider(rep.ymu_second_upper, "ymu_second_upper", n, cfg.slack);
    consider(rep.mu_prime_upper, "mu_prime_upper", n, cfg.fd_slack);
    consider(rep.mu_second_upper, "mu_second_upper", n, cfg.fd_slack);
  }
  res.worst_margin = worst;
  res.pass = ok;
  res.detail = binding;
  return res;
}

SuiteResult run_probes(const SuiteConfig& sc, const ExperimentConfig& cfg) {
  const double tol = suite_tol(sc, cfg);
  const PoleSequence upper = make_poles(sc.generator, sc.n_list.back());
  const Integrand weight = [](double y) {
    return std::complex<double>(std::exp(-y), 0.0);
  };
  const std::vector<double> rl =
      riemann_lebesgue_probe(upper, weight, sc.n_list, sc.x, tol);
  const std::vector<double> sine =
      sine_integral_probe(upper, sc.n_list, sc.x, sc.delta, tol);
  const double half_pi = std::numbers::pi / 2.0;

  SuiteResult res;
  res.report.function = "exp(-y) weight";
  stamp(res.report, sc, cfg, tol);
  res.report.columns = {"n", "rl_value", "sine_value", "sine_deviation"};
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sc.n_list.size(); ++i) {
    const double dev = std::abs(sine[i] - half_pi);
    res.report.rows.push_back(
        {static_cast<double>(sc.n_list[i]), rl[i], sine[i], dev});
    if (i + 1 < sc.n_list.size())
      margin = std::min(margin, std::abs(rl[i]) - std::abs(rl[i + 1]));
  }
  margin = std::min(margin, sc.final_tol - std::abs(rl.back()));
  const double sine_dev = std::abs(sine.back() - half_pi);
  margin = std::min(margin, sc.final_tol - sine_dev);
  res.worst_margin = margin;
  res.pass = margin > 0.0;
  res.detail = fmt("|rl| tail %.3e, sine deviation %.3e (cap %.3e)",
                   std::abs(rl.back()), sine_dev, sc.final_tol);
  return res;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& sc, const ExperimentConfig& cfg,
                      std::uint64_t stream_seed) {
  SuiteResult res;
  if (sc.suite == "orthonormality")
    res = run_orthonormality(sc, cfg);
  else if (sc.suite == "kernel_equivalence")
    res = run_kernel_equivalence(sc, cfg, stream_seed);
  else if (sc.suite == "lp_convergence")
    res = run_lp_convergence(sc, cfg);
  else if (sc.suite == "jump_pointwise")
    res = run_pointwise(sc, cfg, true);
  else if (sc.suite == "dini_pointwise")
    res = run_pointwise(sc, cfg, false);
  else if (sc.suite == "bounds")
    res = run_bounds(sc, cfg);
  else if (sc.suite == "probes")
    res = run_probes(sc, cfg);
  else
    throw Error("unknown suite '" + sc.suite + "'");
  res.name = sc.csv_stem();
  return res;
}

RunOutcome run(const ExperimentConfig& cfg, bool parallel) {
  namespace fs = std::filesystem;
  {
    std::set<std::string> stems;
    for (const auto& sc : cfg.suites)
      if (!stems.insert(sc.csv_stem()).second)
        throw Error("duplicate suite output '" + sc.csv_stem() +
                    "'; add a section label");
  }
  std::error_code ec;
  fs::create_directories(cfg.output, ec);
  if (ec) throw IoError("cannot create output directory: " + cfg.output);

  RunOutcome out;
  out.results.resize(cfg.suites.size());
  const auto job = [&](std::size_t i) {
    const std::uint64_t stream = splitmix64(cfg.seed ^ splitmix64(i + 1));
    out.results[i] = run_suite(cfg.suites[i], cfg, stream);
  };
  if (parallel && cfg.suites.size() > 1) {
    std::vector<std::future<void>> jobs;
    jobs.reserve(cfg.suites.size());
    for (std::size_t i = 0; i < cfg.suites.size(); ++i)
      jobs.push_back(std::async(std::launch::async, job, i));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < cfg.suites.size(); ++i) job(i);
  }

  for (const auto& res : out.results) {
    emit_csv(res.report, cfg.output + "/" + res.name + ".csv");
    std::printf("%-28s %s  worst margin % .3e  %s\n", res.name.c_str(),
                res.pass ? "PASS" : "FAIL", res.worst_margin,
                res.detail.c_str());
    if (!res.pass) out.exit_code = 2;
  }
  return out;
}

}  // namespace orf
