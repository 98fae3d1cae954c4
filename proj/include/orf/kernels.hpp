#pragma once

#include <complex>

#include "orf/basis.hpp"

namespace orf {

enum class KernelMethod { DirectSum, ClosedForm, SineForm, DiagonalLimit };

// Value of D_{n,m} at (x,t) with provenance.  method records DiagonalLimit
// when a closed/sine evaluation fell below the diagonal threshold.
struct KernelEvaluation {
  std::complex<double> value;
  KernelMethod method = KernelMethod::DirectSum;
  int n = 0;
  int m = 1;
  double x = 0.0;
  double t = 0.0;
};

// |t - x| below this switches closed/sine forms to the Taylor limit path.
inline double diagonal_threshold(double x) { return 1e-6 * (1.0 + std::abs(x)); }

// sum_{k<n} conj(Phi_k^+(zeta)) Phi_k^+(z)
//   = [1 - conj(B_n^+(zeta)) B_n^+(z)] / (2i(conj(zeta) - z))
std::complex<double> cd_kernel_plus(const PoleSequence& upper, int n,
                                    std::complex<double> z,
                                    std::complex<double> zeta);

// sum_{1<=k<m} conj(Phi_k^-(zeta)) Phi_k^-(z)
//   = [conj(B_m^-(zeta)) B_m^-(z) - 1] / (2i(conj(zeta) - z))
std::complex<double> cd_kernel_minus(const PoleSequence& lower, int m,
                                     std::complex<double> z,
                                     std::complex<double> zeta);

// sum_{k=-m+1}^{n-1} conj(Phi_k(x)) Phi_k(t), term by term.
std::complex<double> dirichlet_direct(const BasisSystem& system, int n, int m,
                                      double x, double t);

// exp(i(P+ - P-)) * sin(P+ + P-) / (t - x), where P+- are the per-pole
// arctangent phase sums; second-order Taylor below the diagonal threshold
// (throws DegenerateArguments there when allow_diagonal_limit is false).
std::complex<double> dirichlet_closed(const BasisSystem& system, int n, int m,
                                      double x, double t,
                                      bool allow_diagonal_limit = true);

// Conjugate-paired specialization (m = n+1): sin(A)/(t-x) with
// A = sum_k 2[atan((t-Re a_k)/Im a_k) - atan((x-Re a_k)/Im a_k)];
// total on R^2 via the Taylor limit path on the diagonal.
double dirichlet_sine(const PoleSequence& upper, int n, double x, double t);

KernelEvaluation evaluate_kernel(const BasisSystem& system, int n, int m,
                                 double x, double t, KernelMethod method);

// (1/y) sum_{k<n} 2[atan((x+y-Re a_k)/Im a_k) - atan((x-Re a_k)/Im a_k)];
// y may be negative; y = 0 raises ZeroWidth (use mu_limit).
double mu(const PoleSequence& upper, int n, double x, double y);

// y -> 0 limit of mu: sum_k 2 Im a_k / ((x-Re a_k)^2 + (Im a_k)^2).
double mu_limit(const PoleSequence& upper, int n, double x);

struct MuDerivatives {
  double d_y_of_y_mu;    // d/dy [y mu_n(y;x)]
  double d2_y_of_y_mu;   // d^2/dy^2 [y mu_n(y;x)]
};

MuDerivatives mu_derivatives(const PoleSequence& upper, int n, double x,
                             double y);

}  // namespace orf
