#ifndef MASKFRAME_FFT_HPP
#define MASKFRAME_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace maskframe::fft {

using cvec = std::vector<std::complex<double>>;

/// Unnormalized DFT, X[m] = sum_j x[j] exp(sign * 2*pi*i*j*m/N).
/// sign = +1 is the synthesis direction (FFTW_BACKWARD), -1 analysis.
cvec transform(const cvec& x, int sign);

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// Linear convolution of two coefficient sequences via zero-padded FFT.
cvec convolve_fft(const cvec& a, const cvec& b);

}  // namespace maskframe::fft

#endif
