#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "orf/generators.hpp"
#include "orf/kernels.hpp"

using namespace orf;
using C = std::complex<double>;

namespace {
const PoleSequence kUpper2i{{{0.0, 2.0}}, HalfPlane::Upper};
const PoleSequence kLower2i{{{0.0, -2.0}}, HalfPlane::Lower};

BasisSystem pair2i() { return BasisSystem::general(kUpper2i, kLower2i); }

BasisSystem general_system() {
  PoleSequence upper{{{0.0, 2.0}, {1.0, 1.0}}, HalfPlane::Upper};
  PoleSequence lower{{{0.0, -1.5}, {-1.0, -3.0}}, HalfPlane::Lower};
  return BasisSystem::general(upper, lower);
}
}  // namespace

TEST_CASE("Christoffel-Darboux closed forms match hand values") {
  // upper {2i}, n=1, z=2, zeta=0: [1 - conj(B)B]/(2i(conj(zeta)-z))
  const C plus = cd_kernel_plus(kUpper2i, 1, {2.0, 0.0}, {0.0, 0.0});
  CHECK(std::abs(plus - C(0.25, 0.25)) < 1e-15);
  // lower {-2i}, m=2, z=0, zeta=1
  const C minus = cd_kernel_minus(kLower2i, 2, {0.0, 0.0}, {1.0, 0.0});
  CHECK(std::abs(minus - C(0.4, 0.2)) < 1e-15);
}

TEST_CASE("Christoffel-Darboux kernels equal their defining sums") {
  const BasisSystem sys = general_system();
  const C z{0.6, 0.9}, zeta{-1.1, 0.4};
  C direct_plus = 0.0;
  for (int k = 0; k < 2; ++k)
    direct_plus += std::conj(phi(sys, k, zeta)) * phi(sys, k, z);
  CHECK(std::abs(cd_kernel_plus(sys.upper, 2, z, zeta) - direct_plus) < 1e-14);
  C direct_minus = 0.0;
  for (int k = 1; k < 3; ++k)
    direct_minus += std::conj(phi(sys, -k, zeta)) * phi(sys, -k, z);
  CHECK(std::abs(cd_kernel_minus(sys.lower, 3, z, zeta) - direct_minus) <
        1e-14);
}

TEST_CASE("coincident kernel arguments are rejected") {
  const C z{0.5, 0.25};
  CHECK_THROWS_AS(cd_kernel_plus(kUpper2i, 1, z, std::conj(z)),
                  DegenerateArguments);
  CHECK_THROWS_AS(cd_kernel_minus(kLower2i, 2, z, std::conj(z)),
                  DegenerateArguments);
}

TEST_CASE("closed Dirichlet kernel matches hand values") {
  const BasisSystem sys = pair2i();
  CHECK(std::abs(dirichlet_closed(sys, 1, 2, 0.0, 2.0) - C(0.5, 0.0)) < 1e-14);
  CHECK(std::abs(dirichlet_closed(sys, 1, 1, 0.0, 2.0) - C(0.25, 0.25)) <
        1e-14);
  CHECK(dirichlet_sine(kUpper2i, 1, 0.0, 2.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("closed form equals the direct sum off the pairing assumption") {
  const BasisSystem sys = general_system();
  REQUIRE_FALSE(sys.conjugate_paired);
  for (double x : {-2.5, 0.0, 1.3}) {
    for (double t : {-1.7, 0.4, 3.9}) {
      for (int n : {0, 1, 2}) {
        for (int m : {1, 2, 3}) {
          if (n == 0 && m == 1) continue;  // empty index range
          const C direct = dirichlet_direct(sys, n, m, x, t);
          const C closed = dirichlet_closed(sys, n, m, x, t);
          CHECK(std::abs(closed - direct) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("sine form equals the direct sum for conjugate-paired systems") {
  const BasisSystem sys = BasisSystem::paired(mixed_cycle(5));
  for (double x : {-3.0, 0.2}) {
    for (double t : {-2.9, 1.4, 11.0}) {
      for (int n : {1, 3, 5}) {
        const C direct = dirichlet_direct(sys, n, n + 1, x, t);
        const double sine = dirichlet_sine(sys.upper, n, x, t);
        CHECK(std::abs(C(sine, 0.0) - direct) < 1e-13);
        // paired phases cancel: the closed form is exactly real here
        const C closed = dirichlet_closed(sys, n, n + 1, x, t);
        CHECK(closed.imag() == 0.0);
        CHECK(closed.real() == doctest::Approx(sine).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("diagonal limit continues the closed and sine forms") {
  const BasisSystem sys = BasisSystem::paired(mixed_cycle(4));
  const double x = 0.8;
  // exactly on the diagonal, against the always-valid direct sum
  const C direct = dirichlet_direct(sys, 3, 4, x, x);
  CHECK(std::abs(dirichlet_closed(sys, 3, 4, x, x) - direct) < 1e-10);
  CHECK(std::abs(dirichlet_sine(sys.upper, 3, x, x) - direct.real()) < 1e-10);
  // just below and above the switch: values stay consistent
  for (double off : {1e-12, 1e-9, 3e-7, 1e-5}) {
    const C d = dirichlet_direct(sys, 3, 4, x, x + off);
    CHECK(std::abs(dirichlet_closed(sys, 3, 4, x, x + off) - d) < 1e-10);
    CHECK(std::abs(dirichlet_sine(sys.upper, 3, x, x + off) - d.real()) <
          1e-10);
  }
}

TEST_CASE("diagonal evaluation can be rejected on request") {
  const BasisSystem sys = pair2i();
  CHECK_THROWS_AS(dirichlet_closed(sys, 1, 2, 0.5, 0.5 + 1e-8, false),
                  DegenerateArguments);
  CHECK_NOTHROW(dirichlet_closed(sys, 1, 2, 0.5, 0.5 + 1e-4, false));
}

TEST_CASE("kernel dispatch records the method actually used") {
  const BasisSystem sys = BasisSystem::paired(mixed_cycle(4));
  const KernelEvaluation direct =
      evaluate_kernel(sys, 2, 3, 0.0, 1.0, KernelMethod::DirectSum);
  CHECK(direct.method == KernelMethod::DirectSum);
  CHECK(direct.n == 2);
  CHECK(direct.m == 3);

  const KernelEvaluation closed =
      evaluate_kernel(sys, 2, 3, 0.0, 1.0, KernelMethod::ClosedForm);
  CHECK(closed.method == KernelMethod::ClosedForm);
  CHECK(std::abs(closed.value - direct.value) < 1e-13);

  const KernelEvaluation diag =
      evaluate_kernel(sys, 2, 3, 0.0, 1e-9, KernelMethod::ClosedForm);
  CHECK(diag.method == KernelMethod::DiagonalLimit);

  const KernelEvaluation sine =
      evaluate_kernel(sys, 2, 3, 0.0, 1.0, KernelMethod::SineForm);
  CHECK(sine.method == KernelMethod::SineForm);
  CHECK(sine.value.imag() == 0.0);

  const KernelEvaluation sine_diag =
      evaluate_kernel(sys, 2, 3, 0.4, 0.4, KernelMethod::SineForm);
  CHECK(sine_diag.method == KernelMethod::DiagonalLimit);
}

TEST_CASE("sine dispatch requires pairing and matched orders") {
  const BasisSystem general = general_system();
  CHECK_THROWS_AS(evaluate_kernel(general, 1, 2, 0.0, 1.0, KernelMethod::SineForm),
                  DegenerateArguments);
  const BasisSystem paired = BasisSystem::paired(mixed_cycle(4));
  CHECK_THROWS_AS(evaluate_kernel(paired, 2, 2, 0.0, 1.0, KernelMethod::SineForm),
                  DegenerateArguments);
}

TEST_CASE("phase average mu matches hand values and symmetry") {
  CHECK(std::abs(mu(kUpper2i, 1, 0.0, 2.0) - std::numbers::pi / 4.0) < 1e-15);
  // even in y at a symmetric point
  CHECK(mu(kUpper2i, 1, 0.0, -2.0) ==
        doctest::Approx(mu(kUpper2i, 1, 0.0, 2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(mu(kUpper2i, 1, 0.0, 0.0), ZeroWidth);
  CHECK_THROWS_AS(mu(kUpper2i, 2, 0.0, 1.0), PrefixTooShort);
}

TEST_CASE("mu stays exact for vanishing widths") {
  // stabilized arctangent difference: no cancellation as y -> 0
  CHECK(mu(kUpper2i, 1, 0.0, 1e-300) == 1.0);
  CHECK(mu_limit(kUpper2i, 1, 0.0) == 1.0);
  CHECK(std::abs(mu(kUpper2i, 1, 0.0, 1e-9) - mu_limit(kUpper2i, 1, 0.0)) <
        1e-9);
  const PoleSequence seq = mixed_cycle(6);
  for (double x : {-4.0, 0.3, 2.0})
    CHECK(std::abs(mu(seq, 6, x, 1e-12) - mu_limit(seq, 6, x)) < 1e-10);
}

TEST_CASE("mu uses the plain difference across the arctangent branch") {
  // u*v <= -1 forces the unstabilized branch; both factors are O(1) there
  const double got = mu(kUpper2i, 1, -50.0, 100.0);
  const double want = 2.0 * (std::atan(25.0) - std::atan(-25.0)) / 100.0;
  CHECK(got == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("analytic mu derivatives agree with high-order differences") {
  const PoleSequence seq = mixed_cycle(6);
  const int n = 6;
  const double x = 0.7, y = 1.3, h = 2e-3;
  const auto ymu = [&](double w) { return w * mu(seq, n, x, w); };
  const double fd1 = (-ymu(y + 2 * h) + 8 * ymu(y + h) - 8 * ymu(y - h) +
                      ymu(y - 2 * h)) /
                     (12 * h);
  const double fd2 = (-ymu(y + 2 * h) + 16 * ymu(y + h) - 30 * ymu(y) +
                      16 * ymu(y - h) - ymu(y - 2 * h)) /
                     (12 * h * h);
  const MuDerivatives d = mu_derivatives(seq, n, x, y);
  CHECK(std::abs(d.d_y_of_y_mu - fd1) < 1e-9);
  CHECK(std::abs(d.d2_y_of_y_mu - fd2) < 1e-8);
}

TEST_CASE("dirichlet argument validation") {
  const BasisSystem sys = pair2i();
  CHECK_THROWS_AS(dirichlet_direct(sys, -1, 1, 0.0, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(dirichlet_closed(sys, 1, 0, 0.0, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(dirichlet_closed(sys, 2, 1, 0.0, 1.0), PrefixTooShort);
  CHECK_THROWS_AS(dirichlet_sine(kUpper2i, 2, 0.0, 1.0), PrefixTooShort);
}
