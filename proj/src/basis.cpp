#include "orf/basis.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace orf {

namespace {

constexpr double kPoleHitTol = 1e-13;

void check_prefix(const PoleSequence& seq, int n) {
  if (n < 0 || static_cast<std::size_t>(n) > seq.size())
    throw PrefixTooShort(n, seq.size());
}

bool sequences_conjugate(const PoleSequence& upper, const PoleSequence& lower) {
  if (lower.poles.empty() || upper.size() != lower.size()) return false;
  for (std::size_t j = 0; j < lower.size(); ++j)
    if (lower.poles[j] != std::conj(upper.poles[j])) return false;
  return true;
}

}  // namespace

bool hits_pole(std::complex<double> z, std::complex<double> pole) {
  return std::abs(z - pole) < kPoleHitTol * (1.0 + std::abs(pole));
}

BasisSystem BasisSystem::paired(PoleSequence upper) {
  upper.half_plane = HalfPlane::Upper;
  require_valid(upper);
  BasisSystem s;
  s.lower.half_plane = HalfPlane::Lower;
  for (const auto& a : upper.poles) s.lower.poles.push_back(std::conj(a));
  s.upper = std::move(upper);
  s.conjugate_paired = true;
  return s;
}

BasisSystem BasisSystem::general(PoleSequence upper, PoleSequence lower) {
  upper.half_plane = HalfPlane::Upper;
  lower.half_plane = HalfPlane::Lower;
  require_valid(upper);
  if (!lower.poles.empty()) require_valid(lower);
  BasisSystem s;
  s.conjugate_paired = sequences_conjugate(upper, lower);
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  return s;
}

std::complex<double> chi(std::complex<double> pole) {
  const std::complex<double> w = 1.0 + pole * pole;
  if (w == std::complex<double>(0.0, 0.0)) return 1.0;  // pole == +-i
  return std::abs(w) / w;
}

std::complex<double> blaschke_plus(const PoleSequence& upper, int n,
                                   std::complex<double> z) {
  check_prefix(upper, n);
  std::complex<double> acc = 1.0;
  for (int k = 0; k < n; ++k) {
    const std::complex<double> a = upper.poles[static_cast<std::size_t>(k)];
    const std::complex<double> pole = std::conj(a);
    if (hits_pole(z, pole)) throw PoleHit(z);
    acc = acc * (chi(a) * ((z - a) / (z - pole)));
  }
  return acc;
}

std::complex<double> blaschke_minus(const PoleSequence& lower, int m,
                                    std::complex<double> z) {
  if (m < 1) throw IndexOutOfRange("blaschke_minus requires m >= 1");
  check_prefix(lower, m - 1);
  std::complex<double> acc = 1.0;
  for (int k = 1; k < m; ++k) {
    const std::complex<double> b = lower.poles[static_cast<std::size_t>(k - 1)];
    const std::complex<double> pole = std::conj(b);
    if (hits_pole(z, pole)) throw PoleHit(z);
    acc = acc * (chi(b) * ((z - b) / (z - pole)));
  }
  return acc;
}

std::complex<double> phi(const BasisSystem& system, int n,
                         std::complex<double> z) {
  if (n >= 0) {
    if (static_cast<std::size_t>(n) >= system.upper.size())
      throw IndexOutOfRange("phi: upper sequence has no pole a_" +
                            std::to_string(n));
    const std::complex<double> a =
        system.upper.poles[static_cast<std::size_t>(n)];
    const std::complex<double> pole = std::conj(a);
    if (hits_pole(z, pole)) throw PoleHit(z);
    return std::sqrt(a.imag()) / (z - pole) * blaschke_plus(system.upper, n, z);
  }
  const int m = -n;
  if (static_cast<std::size_t>(m) > system.lower.size())
    throw IndexOutOfRange("phi: lower sequence has no pole b_" +
                          std::to_string(m));
  const std::complex<double> b =
      system.lower.poles[static_cast<std::size_t>(m - 1)];
  const std::complex<double> pole = std::conj(b);
  if (hits_pole(z, pole)) throw PoleHit(z);
  return std::sqrt(-b.imag()) / (z - pole) * blaschke_minus(system.lower, m, z);
}

}  // namespace orf
