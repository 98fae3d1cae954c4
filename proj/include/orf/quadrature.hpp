#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>

#include "orf/basis.hpp"
#include "orf/errors.hpp"
#include "orf/target.hpp"

namespace orf {

using Integrand = std::function<std::complex<double>(double)>;

inline constexpr std::int64_t kDefaultNodeBudget = std::int64_t(1) << 18;

struct QuadratureResult {
  std::complex<double> value;
  double abs_error_estimate = 0.0;
  std::int64_t nodes_used = 0;
};

// Adaptive 15-point Gauss-Legendre with bisection on |whole - halves|;
// refinement is forced to depth 3 so symmetric false convergence at the
// first midpoint cannot slip through.  Throws ToleranceNotMet (carrying the
// partial result) when the node budget runs out above tol.
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    double tol,
                                    std::int64_t node_budget = kDefaultNodeBudget);

// Integral over R via x = tan(theta).  A finite truncation_radius R
// restricts to [-R, R] (still through the theta map).
QuadratureResult integrate_line(
    const Integrand& f, double tol,
    std::int64_t node_budget = kDefaultNodeBudget,
    double truncation_radius = std::numeric_limits<double>::infinity());

// Integral over (0, inf) via the same substitution.
QuadratureResult integrate_half_line(
    const Integrand& f, double tol,
    std::int64_t node_budget = kDefaultNodeBudget);

// (1/pi) * integral of f * conj(g) over R.
std::complex<double> inner_product(const Integrand& f, const Integrand& g,
                                   double tol);

// Integral of f.eval * weight over f's declared domain: Compact support as
// given, Algebraic order q > 1 truncated where scale*R^{1-q} < tol/10,
// otherwise the full line.  The weight must stay bounded on R.
QuadratureResult integrate_target_against(const TargetFunction& f,
                                          const Integrand& weight, double tol,
                                          std::int64_t node_budget = kDefaultNodeBudget);

// c_k = (1/pi) * integral of f * conj(Phi_k).
std::complex<double> fourier_coefficient(const BasisSystem& system,
                                         const TargetFunction& f, int k,
                                         double tol);

}  // namespace orf
