#pragma once

#include <complex>
#include <vector>

#include "orf/errors.hpp"

namespace orf {

enum class HalfPlane { Upper, Lower };

// A finite prefix of a conceptually infinite pole sequence confined to one
// open half-plane.  Every operation takes an explicit prefix length n.
struct PoleSequence {
  std::vector<std::complex<double>> poles;
  HalfPlane half_plane = HalfPlane::Upper;

  std::size_t size() const { return poles.size(); }
};

struct ValidationResult {
  bool ok = false;
  bool empty = false;
  std::vector<std::size_t> offending;  // indices violating the half-plane
};

// sigma[j] = sigma_{j+1}, varsigma[j] = varsigma_{j+1} for j in [0, n_max).
// Both series are nondecreasing by construction.
struct AdmissibilityReport {
  int n_max = 0;
  std::vector<double> sigma;
  std::vector<double> varsigma;
  std::vector<double> ratio;  // varsigma_n / sigma_n
  double min_abs_im = 0.0;    // finite-prefix proxy for "no limit points on R"
  bool sigma_diverges_trend = false;
  bool ratio_bounded = false;
};

ValidationResult validate(const PoleSequence& seq);

// Throws EmptySequence / WrongHalfPlane instead of returning a result.
void require_valid(const PoleSequence& seq);

// sum_{k<n} |Im a_k| / (1 + |a_k|^2)
double sigma_n(const PoleSequence& seq, int n);

// sum_{k<n} 1 / (Im a_k)^2
double varsigma_n(const PoleSequence& seq, int n);

AdmissibilityReport admissibility(const PoleSequence& seq, int n_max,
                                  double sigma_threshold, double ratio_bound);

}  // namespace orf
