#pragma once

#include <complex>
#include <vector>

namespace tlex::fft {

// In-place forward/inverse transform, size must be a power of two.
// Inverse does not rescale.
void radix2(std::vector<std::complex<double>>& a, bool inverse);

// DFT of arbitrary length: radix-2 when possible, Bluestein's chirp-z
// otherwise. Returns X(f) = sum_t x(t) exp(-2*pi*i*f*t/N), unscaled.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

}  // namespace tlex::fft
