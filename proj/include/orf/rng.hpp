#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace orf {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 with manual double conversion: identical streams on every
// platform for a given seed.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double unit() { return (eng() >> 11) * 0x1.0p-53; }  // [0, 1)

  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(eng() % span);
  }

  std::complex<double> upper_pole(double re_span = 2.0, double im_min = 0.5,
                                  double im_max = 2.5) {
    return {uniform(-re_span, re_span), uniform(im_min, im_max)};
  }
};

}  // namespace orf
