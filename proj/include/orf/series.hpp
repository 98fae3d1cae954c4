#pragma once

#include <complex>
#include <vector>

#include "orf/kernels.hpp"
#include "orf/quadrature.hpp"
#include "orf/report.hpp"

namespace orf {

// S_n := S_{n,n+1}: indices k in {-n, ..., n-1}.
struct PartialSumSpec {
  BasisSystem system;  // conjugate-paired for the sine-kernel path
  int n = 1;
  std::vector<double> eval_points;
};

// (1/pi) * integral f(t) D_{n,n+1}(t, x) dt; sine kernel when the system is
// conjugate-paired, closed form otherwise (integration variable in the
// kernel's first slot so the value equals sum c_k Phi_k(x)).
std::complex<double> partial_sum(const BasisSystem& system,
                                 const TargetFunction& f, int n, double x,
                                 double tol);

std::vector<std::complex<double>> evaluate_partial_sums(
    const PartialSumSpec& spec, const TargetFunction& f, double tol);

// coeffs[j] holds c_{j-n}, j in [0, 2n).
std::complex<double> partial_sum_via_coefficients(
    const BasisSystem& system, const std::vector<std::complex<double>>& coeffs,
    int n, double x);

// All 2n coefficients c_{-n}..c_{n-1} of f, in index order.
std::vector<std::complex<double>> fourier_coefficients(
    const BasisSystem& system, const TargetFunction& f, int n, double tol);

// (integral |f - S_n(f)|^p dx)^{1/p}, p > 1.  S_n is expanded through its
// coefficients (projection identity; the kernel/coefficient agreement is a
// tested invariant), keeping the cost one quadrature per coefficient plus
// one for the norm.
double lp_error(const BasisSystem& system, const TargetFunction& f, int n,
                double p, double tol);

// Rows of S_n(f;x0) against the midpoint (f(x0-0)+f(x0+0))/2; limits come
// from the declared marked point at x0, else f is treated as continuous.
ExperimentReport jump_convergence(const BasisSystem& system,
                                  const TargetFunction& f, double x0,
                                  const std::vector<int>& n_list, double tol);

// Same rows for a point where the caller asserts the Dini condition.
ExperimentReport dini_convergence(const BasisSystem& system,
                                  const TargetFunction& f, double x0,
                                  const std::vector<int>& n_list, double tol);

// integral_0^inf phi(y) sin(y mu_n(y;x)) dy for each n.
std::vector<double> riemann_lebesgue_probe(const PoleSequence& upper,
                                           const Integrand& phi_fn,
                                           const std::vector<int>& n_list,
                                           double x, double tol);

// integral_0^delta sin(y mu_n(y;x))/y dy for each n (approaches pi/2).
std::vector<double> sine_integral_probe(const PoleSequence& upper,
                                        const std::vector<int>& n_list,
                                        double x, double delta, double tol);

// Signed margins, each >= 0 (up to slack) iff the inequality holds.
// The first three are analytic; the last two use the mandated 3-point
// central differences of mu at h = 1e-5 (grid must keep y > h).
struct BoundMargins {
  double ymu_prime_lower;   // |d/dy[y mu]| - sigma_n/(1+(|x|+y)^2)
  double mu_lower;          // min over +-y of |mu| - sigma_n/(1+(|x|+y)^2)
  double ymu_second_upper;  // varsigma_n - |d2/dy2[y mu]|
  double mu_prime_upper;    // varsigma_n - |mu'(y)|
  double mu_second_upper;   // (8/3) sum (Im a_k)^-3 - |mu''(y)|
};

BoundMargins bound_margins(const PoleSequence& upper, int n, double x,
                           double y);

struct BoundWorstPoint {
  double margin;
  double x;
  double y;
};

struct BoundCheckReport {
  int n = 0;
  BoundWorstPoint ymu_prime_lower;
  BoundWorstPoint mu_lower;
  BoundWorstPoint ymu_second_upper;
  BoundWorstPoint mu_prime_upper;
  BoundWorstPoint mu_second_upper;

  bool all_ok(double analytic_slack, double fd_slack) const;
};

// Minimum margin over the grid per inequality, with the attaining point.
BoundCheckReport bound_check(const PoleSequence& upper, int n,
                             const std::vector<double>& x_grid,
                             const std::vector<double>& y_grid);

}  // namespace orf
