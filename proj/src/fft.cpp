#include "maskframe/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace maskframe::fft {

cvec transform(const cvec& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  fftw_complex* buf = fftw_alloc_complex(n);
  std::memcpy(buf, x.data(), n * sizeof(fftw_complex));
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                    sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  cvec out(n);
  std::memcpy(out.data(), buf, n * sizeof(fftw_complex));
  fftw_free(buf);
  return out;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

cvec convolve_fft(const cvec& a, const cvec& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  const std::size_t m = next_pow2(n);
  cvec fa(m), fb(m);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  fa = transform(fa, -1);
  fb = transform(fb, -1);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  fa = transform(fa, +1);
  cvec out(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) out[i] = fa[i] * scale;
  return out;
}

}  // namespace maskframe::fft
