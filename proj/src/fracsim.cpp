#include "lmgdfm/fracsim.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "lmgdfm/fft.hpp"
#include "lmgdfm/rng.hpp"

namespace lmgdfm {

std::vector<double> frac_coeffs(double d, int K) {
  if (!(d >= 0.0 && d < 0.5)) throw std::domain_error("frac_coeffs: d must lie in [0, 0.5)");
  if (K < 0) throw std::invalid_argument("frac_coeffs: K must be >= 0");
  std::vector<double> psi(K + 1);
  psi[0] = 1.0;
  for (int k = 1; k <= K; ++k) psi[k] = psi[k - 1] * (k - 1 + d) / k;
  return psi;
}

std::vector<double> arma_impulse(const TransferEntry& entry, int K) {
  if (!ar_polynomial_stable(entry.phi))
    throw std::domain_error("arma_impulse: Phi(L) has a root on or inside the unit circle");
  std::vector<double> h(K + 1, 0.0);
  const int p = static_cast<int>(entry.theta.size()) - 1;
  const int r = static_cast<int>(entry.phi.size());
  for (int k = 0; k <= K; ++k) {
    double v = k <= p ? entry.theta[k] : 0.0;
    for (int j = 1; j <= std::min(k, r); ++j) v += entry.phi[j - 1] * h[k - j];
    h[k] = v;
  }
  return h;
}

std::vector<double> transfer_coeffs(const TransferEntry& entry, int K) {
  const std::vector<double> psi = frac_coeffs(entry.d, K);
  const std::vector<double> h = arma_impulse(entry, K);
  std::vector<double> b(K + 1, 0.0);
  if (K >= 256) {
    std::vector<double> full = fft::convolve(psi, h);
    for (int k = 0; k <= K; ++k) b[k] = entry.c * full[k];
  } else {
    for (int k = 0; k <= K; ++k) {
      double v = 0.0;
      for (int j = 0; j <= k; ++j) v += psi[j] * h[k - j];
      b[k] = entry.c * v;
    }
  }
  return b;
}

namespace {

/// Gaussian vector stream, one draw per (time, coordinate), in time order.
std::vector<double> gaussian_stream(std::uint64_t seed, std::uint64_t stream, std::size_t count) {
  CounterRng rng(seed, stream);
  std::vector<double> out(count);
  for (auto& v : out) v = rng.normal();
  return out;
}

}  // namespace

TimeSeriesPanel simulate_panel(const ModelSpec& spec, int T, std::uint64_t seed, SimulateOptions opts) {
  spec.validate();
  if (T < 8) throw config_error("simulate_panel: T must be >= 8");
  const int ma_trunc = opts.ma_trunc >= 0 ? opts.ma_trunc : std::max(2000, 4 * T);
  const int burn_in = opts.burn_in >= 0 ? opts.burn_in : ma_trunc;
  if (ma_trunc < T)
    throw config_error("simulate_panel: ma_trunc < T would distort within-sample dependence");

  const int n = spec.n;
  const int q = spec.q;
  const int T_ext = T + burn_in;
  const int shock_len = T_ext + ma_trunc;  // shocks u_{l,s}, s = 1-ma_trunc .. T_ext

  // Common component via FFT convolution: one forward transform per shock
  // stream, one inverse per row.
  Matrix chi = Matrix::Zero(n, T);
  if (!spec.all_loadings_zero()) {
    const std::size_t conv_len = static_cast<std::size_t>(shock_len) + ma_trunc;
    std::size_t L = 1;
    while (L < conv_len) L <<= 1;
    fft::Plan plan(L);

    std::vector<std::vector<Complex>> shock_fft(q, std::vector<Complex>(L));
    {
      std::vector<Complex> buf(L);
      for (int l = 0; l < q; ++l) {
        const std::vector<double> u =
            gaussian_stream(seed, kStreamFactorBase + static_cast<std::uint64_t>(l), shock_len);
        std::fill(buf.begin(), buf.end(), Complex(0.0));
        for (int s = 0; s < shock_len; ++s) buf[s] = u[s];
        plan.forward(buf.data(), shock_fft[l].data());
      }
    }

    std::vector<Complex> buf(L), acc(L), coeff_fft(L);
    for (int i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), Complex(0.0));
      for (int l = 0; l < q; ++l) {
        const std::vector<double> b = transfer_coeffs(spec.entry(i, l), ma_trunc);
        std::fill(buf.begin(), buf.end(), Complex(0.0));
        for (int k = 0; k <= ma_trunc; ++k) buf[k] = b[k];
        plan.forward(buf.data(), coeff_fft.data());
        for (std::size_t m = 0; m < L; ++m) acc[m] += coeff_fft[m] * shock_fft[l][m];
      }
      plan.inverse(acc.data(), buf.data());
      // chi_{i,tau} sits at convolution index tau + ma_trunc - 1 for the
      // extended time tau = 1..T_ext; keep the last T columns.
      for (int t = 0; t < T; ++t) {
        const std::size_t idx = static_cast<std::size_t>(burn_in + t + ma_trunc);
        chi(i, t) = buf[idx].real() / static_cast<double>(L);
      }
    }
  }

  // Idiosyncratic component from its own stream.
  Matrix xi_raw = Matrix::Zero(n, T);
  CounterRng idio_rng(seed, kStreamIdio);
  if (spec.idio.kind == IdioKind::OrthonormalWhiteNoise) {
    const double sd = std::sqrt(spec.idio.sigma2);
    for (int t = 0; t < T_ext; ++t)
      for (int i = 0; i < n; ++i) {
        const double z = idio_rng.normal();
        if (t >= burn_in) xi_raw(i, t - burn_in) = sd * z;
      }
  } else {
    Matrix sigma0(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sigma0(i, j) = spec.idio.sigma_eps * std::pow(spec.idio.r_cs, std::abs(i - j));
    const Matrix chol = Eigen::LLT<Matrix>(sigma0).matrixL();
    const double innov_scale = std::sqrt(1.0 - spec.idio.phi_eps * spec.idio.phi_eps);
    Vector state = Vector::Zero(n);
    Vector z(n);
    for (int t = 0; t < T_ext; ++t) {
      for (int i = 0; i < n; ++i) z(i) = idio_rng.normal();
      state = spec.idio.phi_eps * state + innov_scale * (chol * z);
      if (t >= burn_in) xi_raw.col(t - burn_in) = state;
    }
  }

  TimeSeriesPanel panel;
  panel.X = chi + xi_raw;
  panel.chi = chi;
  panel.xi = panel.X - chi;  // bitwise equal to any later recomputation of X - chi
  return panel;
}

Complex transfer_value(const TransferEntry& entry, double theta) {
  if (entry.c == 0.0) return Complex(0.0, 0.0);
  const Complex z = std::exp(Complex(0.0, -theta));  // e^{-i theta}
  Complex frac(1.0, 0.0);
  if (entry.d != 0.0) frac = std::pow(Complex(1.0, 0.0) - z, -entry.d);
  Complex th(0.0, 0.0);
  Complex zk(1.0, 0.0);
  for (double coef : entry.theta) {
    th += coef * zk;
    zk *= z;
  }
  Complex ph(1.0, 0.0);
  zk = z;
  for (double coef : entry.phi) {
    ph -= coef * zk;
    zk *= z;
  }
  return entry.c * frac * th / ph;
}

CMatrix analytic_idio_spectrum(const ModelSpec& spec, double theta) {
  const int n = spec.n;
  if (spec.idio.kind == IdioKind::OrthonormalWhiteNoise)
    return CMatrix::Identity(n, n) * Complex(spec.idio.sigma2 / kTwoPi, 0.0);
  Matrix sigma0(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sigma0(i, j) = spec.idio.sigma_eps * std::pow(spec.idio.r_cs, std::abs(i - j));
  const Complex denom = Complex(1.0, 0.0) - spec.idio.phi_eps * std::exp(Complex(0.0, -theta));
  const double scale = (1.0 - spec.idio.phi_eps * spec.idio.phi_eps) / (kTwoPi * std::norm(denom));
  return (scale * sigma0).cast<Complex>();
}

CMatrix analytic_spectrum(const ModelSpec& spec, double theta) {
  if (theta <= -kPi || theta > kPi)
    throw std::invalid_argument("analytic_spectrum: theta must lie in (-pi, pi]");
  bool positive_memory = false;
  for (const auto& row : spec.entries)
    for (const auto& e : row)
      if (e.d > 0.0 && e.c != 0.0) positive_memory = true;
  if (theta == 0.0 && positive_memory)
    throw std::domain_error("analytic_spectrum: spectral singularity at theta = 0");

  const int n = spec.n;
  const int q = spec.q;
  CMatrix B(n, q);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < q; ++l) B(i, l) = transfer_value(spec.entry(i, l), theta);
  CMatrix sigma = (B * B.adjoint()) / kTwoPi + analytic_idio_spectrum(spec, theta);
  return (sigma + sigma.adjoint()) / 2.0;
}

}  // namespace lmgdfm
