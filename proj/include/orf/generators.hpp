#pragma once

#include <complex>
#include <string>

#include "orf/poles.hpp"

namespace orf {

// a_k = pole for all k
PoleSequence constant_pole(std::complex<double> pole, int count);

// a_k = i * base^k
PoleSequence geometric_im(double base, int count);

// a_k = (k+1)^alpha + i*(k+1)^beta
PoleSequence power_law(double alpha, double beta, int count);

// Cycles {2i, 1+i, -1+2i, 3i, 0.5+1.5i}.
PoleSequence mixed_cycle(int count);

// One pole per line as `re im`, declared Upper.
PoleSequence poles_from_file(const std::string& path);

// b_k = conj(a_{k-1}); result is Lower with poles[j] = b_{j+1}.
PoleSequence conjugate_mirror(const PoleSequence& upper);

}  // namespace orf
