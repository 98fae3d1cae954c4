#include "orf/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace orf {

namespace {

// 15-point Gauss-Legendre rule on [-1,1], nodes stored as +-xi pairs plus
// the center.  Pair evaluation keeps panel sums exactly antisymmetric for
// odd integrands, which makes symmetric integrals of odd functions cancel
// to +-0.0 through the whole adaptive tree.
constexpr int kPairs = 7;
constexpr double kXi[kPairs] = {
    0.2011940939974345223006, 0.3941513470775633698972,
    0.5709721726085388475372, 0.7244177313601700474162,
    0.8482065834104272162006, 0.9372733924007059043078,
    0.9879925180204854284896};
constexpr double kW[kPairs] = {
    0.1984314853271115764561,  0.1861610000155622110268,
    0.1662692058169939335532,  0.1395706779261543144478,
    0.1071592204671719350119,  0.07036604748810812470927,
    0.03075324199611726835463};
constexpr double kW0 = 0.2025782419255612728806;

constexpr int kMinDepth = 3;
constexpr int kMaxDepth = 48;

struct Adaptive {
  const Integrand& f;
  std::int64_t budget;
  std::int64_t used = 0;
  double est_sum = 0.0;
  bool shortfall = false;

  std::complex<double> panel(double a, double b) {
    used += 15;
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    std::complex<double> s = kW0 * f(c);
    for (int j = 0; j < kPairs; ++j)
      s += kW[j] * (f(c + r * kXi[j]) + f(c - r * kXi[j]));
    return r * s;
  }

  // Integral over [a, b] given its one-panel estimate `coarse`.  The budget
  // is strict: the two half panels are evaluated only when they still fit,
  // so `used` never exceeds the budget.  `pending` is this node's share of
  // the last measured discrepancy on the path above; it is what the error
  // estimate charges when refinement has to stop short.
  std::complex<double> refine(double a, double b, std::complex<double> coarse,
                              double tol, int depth, double pending) {
    if (depth >= kMaxDepth || used + 30 > budget) {
      shortfall = true;
      est_sum += std::max(tol, pending);
      return coarse;
    }
    const double mid = 0.5 * (a + b);
    const std::complex<double> left = panel(a, mid);
    const std::complex<double> right = panel(mid, b);
    const double err = std::abs(coarse - (left + right));
    if (err < tol && depth >= kMinDepth) {
      est_sum += err;
      return left + right;
    }
    const std::complex<double> lv =
        refine(a, mid, left, 0.5 * tol, depth + 1, 0.5 * err);
    const std::complex<double> rv =
        refine(mid, b, right, 0.5 * tol, depth + 1, 0.5 * err);
    return lv + rv;
  }
};

QuadratureResult run_adaptive(const Integrand& f, double a, double b,
                              double tol, std::int64_t node_budget) {
  Adaptive state{f, node_budget};
  const std::complex<double> whole = state.panel(a, b);
  const std::complex<double> value =
      state.refine(a, b, whole, tol, 0, std::abs(whole));
  if (state.shortfall && state.est_sum >= tol)
    throw ToleranceNotMet(value, state.est_sum, state.used, node_budget);
  return {value, state.est_sum, state.used};
}

}  // namespace

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    double tol, std::int64_t node_budget) {
  if (!(tol > 0.0)) throw Error("quadrature tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0};
  return run_adaptive(f, a, b, tol, node_budget);
}

QuadratureResult integrate_line(const Integrand& f, double tol,
                                std::int64_t node_budget,
                                double truncation_radius) {
  const double half_pi = std::numbers::pi / 2.0;
  const double theta_max = std::isfinite(truncation_radius)
                               ? std::atan(truncation_radius)
                               : half_pi;
  const Integrand g = [&f](double theta) {
    const double x = std::tan(theta);
    return f(x) * (1.0 + x * x);
  };
  return integrate_interval(g, -theta_max, theta_max, tol, node_budget);
}

QuadratureResult integrate_half_line(const Integrand& f, double tol,
                                     std::int64_t node_budget) {
  const double half_pi = std::numbers::pi / 2.0;
  const Integrand g = [&f](double theta) {
    const double x = std::tan(theta);
    return f(x) * (1.0 + x * x);
  };
  return integrate_interval(g, 0.0, half_pi, tol, node_budget);
}

std::complex<double> inner_product(const Integrand& f, const Integrand& g,
                                   double tol) {
  const double pi = std::numbers::pi;
  const Integrand prod = [&](double x) { return f(x) * std::conj(g(x)); };
  return integrate_line(prod, tol).value / pi;
}

QuadratureResult integrate_target_against(const TargetFunction& f,
                                          const Integrand& weight, double tol,
                                          std::int64_t node_budget) {
  const Integrand prod = [&](double x) { return f.eval(x) * weight(x); };
  switch (f.decay) {
    case DecayClass::Compact:
      return integrate_interval(prod, f.support_lo, f.support_hi, tol,
                                node_budget);
    case DecayClass::Algebraic:
      if (f.algebraic_order > 1.0) {
        // scale * R^{1-q} < tol/10  =>  R = (10 scale / tol)^{1/(q-1)}
        const double r = std::pow(10.0 * f.algebraic_scale / tol,
                                  1.0 / (f.algebraic_order - 1.0));
        return integrate_line(prod, tol, node_budget, r);
      }
      return integrate_line(prod, tol, node_budget);
    case DecayClass::SchwartzLike:
      break;
  }
  return integrate_line(prod, tol, node_budget);
}

std::complex<double> fourier_coefficient(const BasisSystem& system,
                                         const TargetFunction& f, int k,
                                         double tol) {
  const double pi = std::numbers::pi;
  const Integrand weight = [&system, k](double x) {
    return std::conj(phi(system, k, std::complex<double>(x, 0.0)));
  };
  return integrate_target_against(f, weight, tol).value / pi;
}

}  // namespace orf
