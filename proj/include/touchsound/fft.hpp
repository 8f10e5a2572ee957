#pragma once

#include <complex>
#include <vector>

namespace touchsound {

// In-place radix-2 Cooley-Tukey FFT. Size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

// Magnitudes of bins 0..n/2 of the DFT of a real input (length a power of two).
std::vector<double> real_magnitude_spectrum(const std::vector<double>& frame);

}  // namespace touchsound
