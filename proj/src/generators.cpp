#include "orf/generators.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace orf {

PoleSequence constant_pole(std::complex<double> pole, int count) {
  PoleSequence s;
  s.poles.assign(static_cast<std::size_t>(count), pole);
  return s;
}

PoleSequence geometric_im(double base, int count) {
  PoleSequence s;
  double im = 1.0;
  for (int k = 0; k < count; ++k) {
    s.poles.emplace_back(0.0, im);
    im *= base;
  }
  return s;
}

PoleSequence power_law(double alpha, double beta, int count) {
  PoleSequence s;
  for (int k = 0; k < count; ++k) {
    const double j = static_cast<double>(k + 1);
    s.poles.emplace_back(std::pow(j, alpha), std::pow(j, beta));
  }
  return s;
}

PoleSequence mixed_cycle(int count) {
  static const std::array<std::complex<double>, 5> cycle = {{
      {0.0, 2.0}, {1.0, 1.0}, {-1.0, 2.0}, {0.0, 3.0}, {0.5, 1.5}}};
  PoleSequence s;
  for (int k = 0; k < count; ++k)
    s.poles.push_back(cycle[static_cast<std::size_t>(k) % cycle.size()]);
  return s;
}

PoleSequence poles_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pole file: " + path);
  PoleSequence s;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im))
      throw IoError("pole file " + path + " line " + std::to_string(line_no) +
                    ": expected `re im`");
    s.poles.emplace_back(re, im);
  }
  return s;
}

PoleSequence conjugate_mirror(const PoleSequence& upper) {
  PoleSequence s;
  s.half_plane = HalfPlane::Lower;
  for (const auto& a : upper.poles) s.poles.push_back(std::conj(a));
  return s;
}

}  // namespace orf
