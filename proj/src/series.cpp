#include "orf/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace orf {

namespace {

constexpr double kFdStep = 1e-5;

double midpoint_target(const TargetFunction& f, double x0) {
  if (const MarkedPoint* m = f.marked_at(x0))
    return 0.5 * (m->left_limit + m->right_limit);
  return f.eval(x0).real();
}

ExperimentReport pointwise_rows(const char* suite, const BasisSystem& system,
                                const TargetFunction& f, double x0,
                                const std::vector<int>& n_list, double tol) {
  ExperimentReport rep;
  rep.suite = suite;
  rep.function = f.name;
  rep.quad_tol = tol;
  rep.columns = {"n",    "sigma",           "varsigma", "ratio", "x0",
                 "s_re", "s_im",            "midpoint_target",   "deviation"};
  const double target = midpoint_target(f, x0);
  for (int n : n_list) {
    const double sig = sigma_n(system.upper, n);
    const double var = varsigma_n(system.upper, n);
    const std::complex<double> s = partial_sum(system, f, n, x0, tol);
    rep.rows.push_back({static_cast<double>(n), sig, var,
                        sig > 0.0 ? var / sig : 0.0, x0, s.real(), s.imag(),
                        target, std::abs(s - target)});
  }
  return rep;
}

double fd_mu_prime(const PoleSequence& upper, int n, double x, double y) {
  return (mu(upper, n, x, y + kFdStep) - mu(upper, n, x, y - kFdStep)) /
         (2.0 * kFdStep);
}

double fd_mu_second(const PoleSequence& upper, int n, double x, double y) {
  return (mu(upper, n, x, y + kFdStep) - 2.0 * mu(upper, n, x, y) +
          mu(upper, n, x, y - kFdStep)) /
         (kFdStep * kFdStep);
}

void track_min(BoundWorstPoint& w, double margin, double x, double y) {
  if (margin < w.margin) w = {margin, x, y};
}

}  // namespace

std::complex<double> partial_sum(const BasisSystem& system,
                                 const TargetFunction& f, int n, double x,
                                 double tol) {
  if (n < 1) throw IndexOutOfRange("partial_sum requires n >= 1");
  Integrand kernel_slice;
  if (system.conjugate_paired) {
    const PoleSequence& upper = system.upper;
    kernel_slice = [&upper, n, x](double t) {
      return std::complex<double>(dirichlet_sine(upper, n, x, t), 0.0);
    };
  } else {
    kernel_slice = [&system, n, x](double t) {
      return dirichlet_closed(system, n, n + 1, t, x);
    };
  }
  return integrate_target_against(f, kernel_slice, tol).value /
         std::numbers::pi;
}

std::vector<std::complex<double>> evaluate_partial_sums(
    const PartialSumSpec& spec, const TargetFunction& f, double tol) {
  std::vector<std::complex<double>> out;
  out.reserve(spec.eval_points.size());
  for (double x : spec.eval_points)
    out.push_back(partial_sum(spec.system, f, spec.n, x, tol));
  return out;
}

std::complex<double> partial_sum_via_coefficients(
    const BasisSystem& system, const std::vector<std::complex<double>>& coeffs,
    int n, double x) {
  if (coeffs.size() != static_cast<std::size_t>(2 * n))
    throw IndexOutOfRange("need coefficients for every k in [-n, n)");
  std::complex<double> s = 0.0;
  for (int k = -n; k < n; ++k)
    s += coeffs[static_cast<std::size_t>(k + n)] *
         phi(system, k, std::complex<double>(x, 0.0));
  return s;
}

std::vector<std::complex<double>> fourier_coefficients(
    const BasisSystem& system, const TargetFunction& f, int n, double tol) {
  std::vector<std::complex<double>> c;
  c.reserve(static_cast<std::size_t>(2 * n));
  for (int k = -n; k < n; ++k)
    c.push_back(fourier_coefficient(system, f, k, tol));
  return c;
}

double lp_error(const BasisSystem& system, const TargetFunction& f, int n,
                double p, double tol) {
  if (!(p > 1.0)) throw InvalidExponent(p);
  const auto coeffs = fourier_coefficients(system, f, n, tol);
  const Integrand residual_p = [&](double x) {
    const std::complex<double> s =
        partial_sum_via_coefficients(system, coeffs, n, x);
    return std::complex<double>(std::pow(std::abs(f.eval(x) - s), p), 0.0);
  };
  const double integral = integrate_line(residual_p, tol).value.real();
  return std::pow(integral, 1.0 / p);
}

ExperimentReport jump_convergence(const BasisSystem& system,
                                  const TargetFunction& f, double x0,
                                  const std::vector<int>& n_list, double tol) {
  return pointwise_rows("jump_pointwise", system, f, x0, n_list, tol);
}

ExperimentReport dini_convergence(const BasisSystem& system,
                                  const TargetFunction& f, double x0,
                                  const std::vector<int>& n_list, double tol) {
  return pointwise_rows("dini_pointwise", system, f, x0, n_list, tol);
}

std::vector<double> riemann_lebesgue_probe(const PoleSequence& upper,
                                           const Integrand& phi_fn,
                                           const std::vector<int>& n_list,
                                           double x, double tol) {
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    const Integrand g = [&upper, n, x, &phi_fn](double y) {
      return phi_fn(y) * std::sin(y * mu(upper, n, x, y));
    };
    out.push_back(integrate_half_line(g, tol).value.real());
  }
  return out;
}

std::vector<double> sine_integral_probe(const PoleSequence& upper,
                                        const std::vector<int>& n_list,
                                        double x, double delta, double tol) {
  if (!(delta > 0.0)) throw Error("sine_integral_probe requires delta > 0");
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    const Integrand g = [&upper, n, x](double y) {
      return std::complex<double>(std::sin(y * mu(upper, n, x, y)) / y, 0.0);
    };
    out.push_back(integrate_interval(g, 0.0, delta, tol).value.real());
  }
  return out;
}

BoundMargins bound_margins(const PoleSequence& upper, int n, double x,
                           double y) {
  const double sig = sigma_n(upper, n);
  const double var = varsigma_n(upper, n);
  double cubes = 0.0;
  for (int k = 0; k < n; ++k) {
    const double g = upper.poles[static_cast<std::size_t>(k)].imag();
    cubes += 1.0 / (g * g * g);
  }
  const double lower_bound = sig / (1.0 + (std::abs(x) + y) * (std::abs(x) + y));

  BoundMargins m;
  const MuDerivatives d = mu_derivatives(upper, n, x, y);
  m.ymu_prime_lower = std::abs(d.d_y_of_y_mu) - lower_bound;
  const double mu_plus = n > 0 ? mu(upper, n, x, y) : 0.0;
  const double mu_minus = n > 0 ? mu(upper, n, x, -y) : 0.0;
  m.mu_lower = std::min(std::abs(mu_plus), std::abs(mu_minus)) - lower_bound;
  m.ymu_second_upper = var - std::abs(d.d2_y_of_y_mu);
  if (n > 0) {
    m.mu_prime_upper = var - std::abs(fd_mu_prime(upper, n, x, y));
    m.mu_second_upper =
        (8.0 / 3.0) * cubes - std::abs(fd_mu_second(upper, n, x, y));
  } else {
    m.mu_prime_upper = 0.0;
    m.mu_second_upper = 0.0;
  }
  return m;
}

bool BoundCheckReport::all_ok(double analytic_slack, double fd_slack) const {
  return ymu_prime_lower.margin >= -analytic_slack &&
         mu_lower.margin >= -analytic_slack &&
         ymu_second_upper.margin >= -analytic_slack &&
         mu_prime_upper.margin >= -fd_slack &&
         mu_second_upper.margin >= -fd_slack;
}

BoundCheckReport bound_check(const PoleSequence& upper, int n,
                             const std::vector<double>& x_grid,
                             const std::vector<double>& y_grid) {
  const double inf = std::numeric_limits<double>::infinity();
  BoundCheckReport rep;
  rep.n = n;
  rep.ymu_prime_lower = rep.mu_lower = rep.ymu_second_upper =
      rep.mu_prime_upper = rep.mu_second_upper = {inf, 0.0, 0.0};
  for (double x : x_grid) {
    for (double y : y_grid) {
      const BoundMargins m = bound_margins(upper, n, x, y);
      track_min(rep.ymu_prime_lower, m.ymu_prime_lower, x, y);
      track_min(rep.mu_lower, m.mu_lower, x, y);
      track_min(rep.ymu_second_upper, m.ymu_second_upper, x, y);
      track_min(rep.mu_prime_upper, m.mu_prime_upper, x, y);
      track_min(rep.mu_second_upper, m.mu_second_upper, x, y);
    }
  }
  return rep;
}

}  // namespace orf
