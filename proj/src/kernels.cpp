#include "orf/kernels.hpp"

#include <cmath>
#include <cstddef>

namespace orf {

namespace {

constexpr double kDegenerateTol = 1e-13;

// atan(u) - atan(v) without cancellation when u ~ v.  du must equal u - v
// exactly as the caller knows it (e.g. (t-x)/gamma).  The atan2 form is the
// addition theorem, valid for u*v > -1; outside that region the direct
// difference is large and therefore cancellation-free.
double atan_difference(double u, double v, double du) {
  const double p = u * v;
  if (p > -1.0) return std::atan2(du, 1.0 + p);
  return std::atan(u) - std::atan(v);
}

void check_prefix(const PoleSequence& seq, int n) {
  if (n < 0 || static_cast<std::size_t>(n) > seq.size())
    throw PrefixTooShort(n, seq.size());
}

// Phase sum over poles: sum_k [atan((t-b_k)/g_k) - atan((x-b_k)/g_k)] where
// b_k + i g_k runs over the first `count` poles mapped into the upper
// half-plane (g = |Im|).  first = 0 for the upper product, 1 for the lower.
double phase_sum(const PoleSequence& seq, int first, int count, double x,
                 double t) {
  double s = 0.0;
  const double d = t - x;
  for (int k = first; k < count; ++k) {
    const std::complex<double> p = seq.poles[static_cast<std::size_t>(k - first)];
    const double beta = p.real();
    const double gamma = std::abs(p.imag());
    s += atan_difference((t - beta) / gamma, (x - beta) / gamma, d / gamma);
  }
  return s;
}

// d/dt and d^2/dt^2 of a phase sum, evaluated at u = t.
void phase_derivatives(const PoleSequence& seq, int first, int count, double u,
                       double& d1, double& d2) {
  for (int k = first; k < count; ++k) {
    const std::complex<double> p = seq.poles[static_cast<std::size_t>(k - first)];
    const double s = u - p.real();
    const double g = std::abs(p.imag());
    const double q = s * s + g * g;
    d1 += g / q;
    d2 += -2.0 * g * s / (q * q);
  }
}

std::complex<double> cd_denominator(std::complex<double> z,
                                    std::complex<double> zeta) {
  const std::complex<double> d = std::conj(zeta) - z;
  if (std::abs(d) < kDegenerateTol * (1.0 + std::abs(z)))
    throw DegenerateArguments("conj(zeta) coincides with z");
  return std::complex<double>(0.0, 2.0) * d;
}

}  // namespace

std::complex<double> cd_kernel_plus(const PoleSequence& upper, int n,
                                    std::complex<double> z,
                                    std::complex<double> zeta) {
  const std::complex<double> den = cd_denominator(z, zeta);
  const std::complex<double> bracket =
      1.0 - std::conj(blaschke_plus(upper, n, zeta)) * blaschke_plus(upper, n, z);
  return bracket / den;
}

std::complex<double> cd_kernel_minus(const PoleSequence& lower, int m,
                                     std::complex<double> z,
                                     std::complex<double> zeta) {
  const std::complex<double> den = cd_denominator(z, zeta);
  const std::complex<double> bracket =
      std::conj(blaschke_minus(lower, m, zeta)) * blaschke_minus(lower, m, z) -
      1.0;
  return bracket / den;
}

std::complex<double> dirichlet_direct(const BasisSystem& system, int n, int m,
                                      double x, double t) {
  if (n < 0 || m < 1) throw IndexOutOfRange("dirichlet requires n >= 0, m >= 1");
  std::complex<double> s = 0.0;
  for (int k = -m + 1; k <= n - 1; ++k)
    s += std::conj(phi(system, k, x)) * phi(system, k, t);
  return s;
}

std::complex<double> dirichlet_closed(const BasisSystem& system, int n, int m,
                                      double x, double t,
                                      bool allow_diagonal_limit) {
  if (n < 0 || m < 1) throw IndexOutOfRange("dirichlet requires n >= 0, m >= 1");
  check_prefix(system.upper, n);
  check_prefix(system.lower, m - 1);
  const double h = t - x;
  if (std::abs(h) < diagonal_threshold(x)) {
    if (!allow_diagonal_limit)
      throw DegenerateArguments("dirichlet_closed at the diagonal");
    // e^{i D} sin(S)/h = S' + h (S''/2 + i D' S') + O(h^2), with S = P+ + P-,
    // D = P+ - P-, both vanishing at t = x.
    double up1 = 0.0, up2 = 0.0, lo1 = 0.0, lo2 = 0.0;
    phase_derivatives(system.upper, 0, n, x, up1, up2);
    phase_derivatives(system.lower, 1, m, x, lo1, lo2);
    const double s1 = up1 + lo1, s2 = up2 + lo2, d1 = up1 - lo1;
    return std::complex<double>(s1 + h * s2 / 2.0, h * d1 * s1);
  }
  const double plus = phase_sum(system.upper, 0, n, x, t);
  const double minus = phase_sum(system.lower, 1, m, x, t);
  return std::polar(1.0, plus - minus) * (std::sin(plus + minus) / h);
}

double dirichlet_sine(const PoleSequence& upper, int n, double x, double t) {
  check_prefix(upper, n);
  const double h = t - x;
  if (std::abs(h) < diagonal_threshold(x)) {
    double a1 = 0.0, a2 = 0.0;
    phase_derivatives(upper, 0, n, x, a1, a2);
    return 2.0 * a1 + h * a2;  // A'(x) + A''(x) h/2 with A = 2 * phase sum
  }
  const double a = 2.0 * phase_sum(upper, 0, n, x, t);
  return std::sin(a) / h;
}

KernelEvaluation evaluate_kernel(const BasisSystem& system, int n, int m,
                                 double x, double t, KernelMethod method) {
  KernelEvaluation ev;
  ev.n = n;
  ev.m = m;
  ev.x = x;
  ev.t = t;
  ev.method = method;
  const bool diagonal = std::abs(t - x) < diagonal_threshold(x);
  switch (method) {
    case KernelMethod::DirectSum:
      ev.value = dirichlet_direct(system, n, m, x, t);
      break;
    case KernelMethod::ClosedForm:
    case KernelMethod::DiagonalLimit:
      ev.value = dirichlet_closed(system, n, m, x, t);
      if (diagonal) ev.method = KernelMethod::DiagonalLimit;
      break;
    case KernelMethod::SineForm:
      if (!system.conjugate_paired || m != n + 1)
        throw DegenerateArguments(
            "sine form requires a conjugate-paired system with m = n+1");
      ev.value = dirichlet_sine(system.upper, n, x, t);
      if (diagonal) ev.method = KernelMethod::DiagonalLimit;
      break;
  }
  return ev;
}

double mu(const PoleSequence& upper, int n, double x, double y) {
  check_prefix(upper, n);
  if (y == 0.0) throw ZeroWidth();
  // Divide by the representable width t - x, not the requested y: the phase
  // sum only sees t, and for |y| near ulp(x) the two differ relatively.
  const double t = x + y;
  const double width = t - x;
  if (width == 0.0) return mu_limit(upper, n, x);
  return 2.0 * phase_sum(upper, 0, n, x, t) / width;
}

double mu_limit(const PoleSequence& upper, int n, double x) {
  check_prefix(upper, n);
  double d1 = 0.0, d2 = 0.0;
  phase_derivatives(upper, 0, n, x, d1, d2);
  return 2.0 * d1;
}

MuDerivatives mu_derivatives(const PoleSequence& upper, int n, double x,
                             double y) {
  check_prefix(upper, n);
  double d1 = 0.0, d2 = 0.0;
  phase_derivatives(upper, 0, n, x + y, d1, d2);
  return {2.0 * d1, 2.0 * d2};
}

}  // namespace orf
