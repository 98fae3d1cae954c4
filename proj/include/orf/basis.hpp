#pragma once

#include <complex>

#include "orf/poles.hpp"

namespace orf {

// Paired (upper, lower) pole configuration defining the two-sided system
// Phi_n, n in Z.  Lower-sequence indices count from 1: lower.poles[j] holds
// b_{j+1}, so Phi_{-m} needs lower.size() >= m.
struct BasisSystem {
  PoleSequence upper;  // a_k, k >= 0
  PoleSequence lower;  // b_k, k >= 1, stored shifted by one
  bool conjugate_paired = false;

  // lower = {conj(a_{k-1})}; validates both sequences.
  static BasisSystem paired(PoleSequence upper);
  // Independent sequences; validates both and detects pairing.
  static BasisSystem general(PoleSequence upper, PoleSequence lower);
};

// |1+p^2| / (1+p^2), unimodular; chi(+-i) := 1 by convention (the formula
// is 0/0 there and any unit factor preserves orthonormality).
std::complex<double> chi(std::complex<double> pole);

// B_0^+ = 1; otherwise prod_{k<n} chi(a_k)(z-a_k)/(z-conj(a_k)),
// accumulated left to right in index order.
std::complex<double> blaschke_plus(const PoleSequence& upper, int n,
                                   std::complex<double> z);

// B_1^- = 1; otherwise prod_{1<=k<m} chi(b_k)(z-b_k)/(z-conj(b_k)).
std::complex<double> blaschke_minus(const PoleSequence& lower, int m,
                                    std::complex<double> z);

// n >= 0: Phi_n^+(z) = sqrt(Im a_n)/(z-conj(a_n)) * B_n^+(z);
// n <= -1: Phi_{-n}^-(z) = sqrt(-Im b_{-n})/(z-conj(b_{-n})) * B_{-n}^-(z).
std::complex<double> phi(const BasisSystem& system, int n,
                         std::complex<double> z);

// Points closer than 1e-13*(1+|pole|) to a pole raise PoleHit.
bool hits_pole(std::complex<double> z, std::complex<double> pole);

}  // namespace orf
