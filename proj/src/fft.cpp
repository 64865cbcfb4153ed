#include "lmgdfm/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace lmgdfm::fft {

namespace {
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}
}  // namespace

Plan::Plan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("fft::Plan: size must be positive");
  std::lock_guard<std::mutex> lock(planner_mutex());
  buf_in_ = fftw_malloc(sizeof(fftw_complex) * n);
  buf_out_ = fftw_malloc(sizeof(fftw_complex) * n);
  if (!buf_in_ || !buf_out_) throw std::bad_alloc();
  // FFTW_ESTIMATE keeps planning deterministic (no timing-dependent choices).
  fwd_ = fftw_plan_dft_1d(static_cast<int>(n), static_cast<fftw_complex*>(buf_in_),
                          static_cast<fftw_complex*>(buf_out_), FFTW_FORWARD, FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_1d(static_cast<int>(n), static_cast<fftw_complex*>(buf_in_),
                          static_cast<fftw_complex*>(buf_out_), FFTW_BACKWARD, FFTW_ESTIMATE);
}

Plan::~Plan() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_));
  fftw_free(buf_in_);
  fftw_free(buf_out_);
}

void Plan::forward(const std::complex<double>* in, std::complex<double>* out) {
  std::memcpy(buf_in_, in, sizeof(fftw_complex) * n_);
  fftw_execute(static_cast<fftw_plan>(fwd_));
  std::memcpy(out, buf_out_, sizeof(fftw_complex) * n_);
}

void Plan::inverse(const std::complex<double>* in, std::complex<double>* out) {
  std::memcpy(buf_in_, in, sizeof(fftw_complex) * n_);
  fftw_execute(static_cast<fftw_plan>(inv_));
  std::memcpy(out, buf_out_, sizeof(fftw_complex) * n_);
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(out_len);
  Plan plan(n);
  std::vector<std::complex<double>> fa(n), fb(n), tmp(n);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
  plan.forward(fa.data(), tmp.data());
  fa.swap(tmp);
  plan.forward(fb.data(), tmp.data());
  fb.swap(tmp);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  plan.inverse(fa.data(), tmp.data());
  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = tmp[i].real() / static_cast<double>(n);
  return out;
}

}  // namespace lmgdfm::fft
