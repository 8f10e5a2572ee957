#include "touchsound/fft.hpp"

#include <cmath>
#include <numbers>

#include "touchsound/errors.hpp"

namespace touchsound {

void fft_radix2(std::vector<std::complex<double>>& data) {
    const size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw InvalidConfig("FFT size must be a power of two, got " + std::to_string(n));
    }

    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<double> real_magnitude_spectrum(const std::vector<double>& frame) {
    std::vector<std::complex<double>> buf(frame.begin(), frame.end());
    fft_radix2(buf);
    std::vector<double> mag(frame.size() / 2 + 1);
    for (size_t k = 0; k < mag.size(); ++k) mag[k] = std::abs(buf[k]);
    return mag;
}

}  // namespace touchsound
