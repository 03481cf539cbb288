#include "ttomo/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

#include "ttomo/errors.hpp"

namespace ttomo {

namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan cached_plan(int n, int sign) {
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<cplx> a(n), b(n);
  fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                 reinterpret_cast<fftw_complex*>(b.data()),
                                 sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, p);
  return p;
}

}  // namespace

FourierPlan::FourierPlan(int n, int sign) : n_(n) {
  if (n <= 0) fail(ErrorKind::InvalidArgument, "FFT size must be positive");
  plan_ = cached_plan(n, sign);
}

void FourierPlan::execute(std::span<const cplx> in, std::span<cplx> out) const {
  if (static_cast<int>(in.size()) != n_ || static_cast<int>(out.size()) != n_ || in.data() == out.data())
    fail(ErrorKind::InvalidArgument, "FFT buffer size mismatch");
  fftw_execute_dft(static_cast<fftw_plan>(plan_),
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

std::vector<cplx> fourier_coefficients(std::span<const cplx> samples) {
  const int n = static_cast<int>(samples.size());
  std::vector<cplx> out(n);
  FourierPlan(n, -1).execute(samples, out);
  for (auto& c : out) c /= static_cast<double>(n);
  return out;
}

std::vector<cplx> trig_resample(std::span<const cplx> samples, int m) {
  const int n = static_cast<int>(samples.size());
  if (m == n) return {samples.begin(), samples.end()};
  if (m < n) fail(ErrorKind::InvalidArgument, "trig_resample only upsamples");
  auto c = fourier_coefficients(samples);
  std::vector<cplx> spec(m, cplx{});
  const int half = n / 2;
  for (int k = 0; k < n; ++k) {
    int freq = k <= half ? k : k - n;
    if (n % 2 == 0 && k == half) {
      // split the Nyquist bin symmetrically
      spec[half] += 0.5 * c[k];
      spec[m - half] += 0.5 * c[k];
      continue;
    }
    spec[(freq + m) % m] = c[k];
  }
  std::vector<cplx> out(m);
  FourierPlan(m, +1).execute(spec, out);
  return out;
}

std::vector<cplx> trig_derivative(std::span<const cplx> samples) {
  const int n = static_cast<int>(samples.size());
  auto c = fourier_coefficients(samples);
  for (int k = 0; k < n; ++k) {
    int freq = k <= n / 2 ? k : k - n;
    if (n % 2 == 0 && k == n / 2) freq = 0;
    c[k] *= cplx(0.0, static_cast<double>(freq));
  }
  std::vector<cplx> out(n);
  FourierPlan(n, +1).execute(c, out);
  return out;
}

}  // namespace ttomo
