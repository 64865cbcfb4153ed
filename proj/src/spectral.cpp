#include "lmgdfm/spectral.hpp"

#include <cmath>
#include <iostream>
#include <ostream>

#include "lmgdfm/csv.hpp"
#include "lmgdfm/fft.hpp"
#include "lmgdfm/fracsim.hpp"
#include "lmgdfm/parallel.hpp"

namespace lmgdfm {

CMatrix periodogram(const TimeSeriesPanel& panel, double lambda) {
  const int n = panel.n();
  const int T = panel.T();
  if (T < 2) throw std::invalid_argument("periodogram: T must be >= 2");
  CVector d = CVector::Zero(n);
  for (int t = 0; t < T; ++t) d += panel.X.col(t) * std::exp(Complex(0.0, -lambda * t));
  CMatrix I = (d * d.adjoint()) / (kTwoPi * T);
  return (I + I.adjoint()) / 2.0;
}

CMatrix panel_fourier_transforms(const TimeSeriesPanel& panel) {
  const int n = panel.n();
  const int T = panel.T();
  if (T < 2) throw std::invalid_argument("panel_fourier_transforms: T must be >= 2");
  const int T0 = (T - 1) / 2;
  fft::Plan plan(T);
  CMatrix out(n, T0);
  std::vector<Complex> in(T), tf(T);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < T; ++t) in[t] = panel.X(i, t);
    plan.forward(in.data(), tf.data());
    for (int j = 1; j <= T0; ++j) out(i, j - 1) = tf[j];
  }
  return out;
}

SpectralField smoothed_spectrum(const TimeSeriesPanel& panel, const FrequencyGrid& grid, double B_T,
                                const KernelSpec& kernel, int threads) {
  const int n = panel.n();
  const int T = panel.T();
  if (!(B_T > 0.0 && B_T <= 1.0)) throw config_error("smoothed_spectrum: B_T must lie in (0, 1]");
  if (B_T * T < 1.0) throw config_error("smoothed_spectrum: need B_T * T >= 1");
  const int T0 = (T - 1) / 2;
  const double rho = kernel.rho();
  const double half_width = rho * B_T;
  const CMatrix dft = panel_fourier_transforms(panel);

  SpectralField field{grid, n, std::vector<CMatrix>(grid.size()), std::vector<std::uint8_t>(grid.size(), 0)};

  // lambda_j range intersecting [center - hw, center + hw], j in [1, T0]
  auto window_range = [&](double center) {
    int lo = static_cast<int>(std::ceil((center - half_width) * T / kTwoPi - 1e-12));
    int hi = static_cast<int>(std::floor((center + half_width) * T / kTwoPi + 1e-12));
    lo = std::max(lo, 1);
    hi = std::min(hi, T0);
    return std::pair<int, int>(lo, hi);
  };

  const double scale = 1.0 / (B_T * static_cast<double>(T) * static_cast<double>(T));

  auto compute_point = [&](double theta) {
    CMatrix acc = CMatrix::Zero(n, n);
    bool any = false;
    auto [lo1, hi1] = window_range(theta);
    for (int j = lo1; j <= hi1; ++j) {
      const double w = kernel.weight((theta - kTwoPi * j / T) / B_T);
      if (w <= 0.0) continue;
      any = true;
      acc.selfadjointView<Eigen::Lower>().rankUpdate(dft.col(j - 1), w * scale);
    }
    auto [lo2, hi2] = window_range(-theta);
    for (int j = lo2; j <= hi2; ++j) {
      const double w = kernel.weight((theta + kTwoPi * j / T) / B_T);
      if (w <= 0.0) continue;
      any = true;
      acc.selfadjointView<Eigen::Lower>().rankUpdate(dft.col(j - 1).conjugate(), w * scale);
    }
    CMatrix out = acc.selfadjointView<Eigen::Lower>();
    return std::pair<CMatrix, bool>(std::move(out), any);
  };

  const bool mirrored = grid.symmetric();
  parallel_for(grid.size(), resolve_threads(threads), [&](std::size_t k) {
    const double theta = grid[static_cast<int>(k)];
    if (mirrored && theta < 0.0) return;  // filled from the mirror below
    auto [mat, any] = compute_point(theta);
    field.mats[k] = std::move(mat);
    field.flags[k] = any ? 0 : 1;
  });
  if (mirrored) {
    for (int k = 0; k < grid.size(); ++k) {
      if (grid[k] >= 0.0) continue;
      const int m = grid.mirror(k);
      field.mats[k] = field.mats[m].conjugate();
      field.flags[k] = field.flags[m];
    }
  }

  int flagged = 0;
  for (auto f : field.flags) flagged += f;
  if (flagged > 0)
    std::cerr << "smoothed_spectrum: warning: empty kernel window at " << flagged
              << " grid point(s); zero matrices emitted\n";
  return field;
}

SpectralField analytic_spectrum_field(const ModelSpec& spec, const FrequencyGrid& grid, int threads) {
  SpectralField field{grid, spec.n, std::vector<CMatrix>(grid.size()),
                      std::vector<std::uint8_t>(grid.size(), 0)};
  const bool mirrored = grid.symmetric();
  parallel_for(grid.size(), resolve_threads(threads), [&](std::size_t k) {
    const double theta = grid[static_cast<int>(k)];
    if (mirrored && theta < 0.0) return;
    field.mats[k] = analytic_spectrum(spec, theta);
  });
  if (mirrored)
    for (int k = 0; k < grid.size(); ++k)
      if (grid[k] < 0.0) field.mats[k] = field.mats[grid.mirror(k)].conjugate();
  return field;
}

void write_csv(const SpectralField& field, std::ostream& os) {
  os << "theta,i,j,re,im\n";
  for (int k = 0; k < field.size(); ++k) {
    const CMatrix& m = field.mats[k];
    for (int i = 0; i < field.n; ++i)
      for (int j = 0; j < field.n; ++j)
        os << csv::num(field.grid[k]) << ',' << (i + 1) << ',' << (j + 1) << ','
           << csv::num(m(i, j).real()) << ',' << csv::num(m(i, j).imag()) << '\n';
  }
}

}  // namespace lmgdfm
