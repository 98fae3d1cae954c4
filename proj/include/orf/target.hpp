#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace orf {

// Declared tail behaviour; trusted and recorded, not verified.
enum class DecayClass { SchwartzLike, Algebraic, Compact };

struct MarkedPoint {
  double x0;
  double left_limit;
  double right_limit;
};

// Host-supplied real-variable function with integrability metadata.
struct TargetFunction {
  std::function<std::complex<double>(double)> eval;
  DecayClass decay = DecayClass::SchwartzLike;
  // |f(x)| <= algebraic_scale * |x|^{-algebraic_order} for large |x|;
  // order 1 means no usable tail bound (integrate the full line).
  double algebraic_order = 2.0;
  double algebraic_scale = 1.0;
  double support_lo = -1.0;  // Compact only
  double support_hi = 1.0;
  std::vector<MarkedPoint> marked_points;
  std::string name = "f";

  const MarkedPoint* marked_at(double x0) const {
    for (const auto& m : marked_points)
      if (m.x0 == x0) return &m;
    return nullptr;
  }
};

}  // namespace orf
