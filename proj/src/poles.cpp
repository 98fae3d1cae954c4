#include "orf/poles.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace orf {

namespace {

bool in_declared_half_plane(std::complex<double> p, HalfPlane hp) {
  return hp == HalfPlane::Upper ? p.imag() > 0.0 : p.imag() < 0.0;
}

void check_prefix(const PoleSequence& seq, int n) {
  if (n < 0 || static_cast<std::size_t>(n) > seq.size())
    throw PrefixTooShort(n, seq.size());
}

}  // namespace

ValidationResult validate(const PoleSequence& seq) {
  ValidationResult r;
  if (seq.poles.empty()) {
    r.empty = true;
    return r;
  }
  for (std::size_t i = 0; i < seq.poles.size(); ++i)
    if (!in_declared_half_plane(seq.poles[i], seq.half_plane))
      r.offending.push_back(i);
  r.ok = r.offending.empty();
  return r;
}

void require_valid(const PoleSequence& seq) {
  const ValidationResult r = validate(seq);
  if (r.empty) throw EmptySequence();
  if (!r.ok) throw WrongHalfPlane(r.offending.front());
}

double sigma_n(const PoleSequence& seq, int n) {
  check_prefix(seq, n);
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const std::complex<double> a = seq.poles[static_cast<std::size_t>(k)];
    s += std::abs(a.imag()) / (1.0 + std::norm(a));
  }
  return s;
}

double varsigma_n(const PoleSequence& seq, int n) {
  check_prefix(seq, n);
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const double im = seq.poles[static_cast<std::size_t>(k)].imag();
    s += 1.0 / (im * im);
  }
  return s;
}

AdmissibilityReport admissibility(const PoleSequence& seq, int n_max,
                                  double sigma_threshold, double ratio_bound) {
  check_prefix(seq, n_max);
  AdmissibilityReport rep;
  rep.n_max = n_max;
  double sig = 0.0, var = 0.0, max_ratio = 0.0;
  double min_im = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_max; ++k) {
    const std::complex<double> a = seq.poles[static_cast<std::size_t>(k)];
    sig += std::abs(a.imag()) / (1.0 + std::norm(a));
    var += 1.0 / (a.imag() * a.imag());
    rep.sigma.push_back(sig);
    rep.varsigma.push_back(var);
    rep.ratio.push_back(var / sig);
    max_ratio = std::max(max_ratio, var / sig);
    min_im = std::min(min_im, std::abs(a.imag()));
  }
  rep.min_abs_im = n_max > 0 ? min_im : 0.0;
  rep.sigma_diverges_trend = n_max > 0 && sig >= sigma_threshold;
  rep.ratio_bounded = n_max > 0 && max_ratio <= ratio_bound;
  return rep;
}

}  // namespace orf
