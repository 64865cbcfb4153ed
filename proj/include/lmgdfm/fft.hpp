#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lmgdfm::fft {

/// One fixed-size complex transform pair backed by FFTW. Plan construction is
/// serialized internally (the FFTW planner is not thread-safe); separate Plan
/// instances may execute concurrently.
class Plan {
 public:
  explicit Plan(std::size_t n);
  ~Plan();
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  /// out[k] = sum_j in[j] exp(-2*pi*i*j*k/n)
  void forward(const std::complex<double>* in, std::complex<double>* out);
  /// out[j] = sum_k in[k] exp(+2*pi*i*j*k/n)   (unnormalized)
  void inverse(const std::complex<double>* in, std::complex<double>* out);

  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  void* fwd_;
  void* inv_;
  void* buf_in_;
  void* buf_out_;
};

/// Linear convolution of two real sequences via zero-padded FFTs.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace lmgdfm::fft
