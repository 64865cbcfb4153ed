#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lmgdfm/grid.hpp"
#include "lmgdfm/kernel.hpp"
#include "lmgdfm/model.hpp"

namespace lmgdfm {

/// A frequency grid paired with one n x n Hermitian matrix per grid point.
struct SpectralField {
  FrequencyGrid grid;
  int n = 0;
  std::vector<CMatrix> mats;
  std::vector<std::uint8_t> flags;  // 1 = empty smoothing window at this point

  const CMatrix& at(int k) const { return mats[k]; }
  int size() const { return static_cast<int>(mats.size()); }
};

/// Periodogram I_XX(lambda) = (1/2piT) d(lambda) d(lambda)^* with
/// d(lambda) = sum_{t=0}^{T-1} X_t e^{-i lambda t}. Rank <= 1, Hermitian PSD.
CMatrix periodogram(const TimeSeriesPanel& panel, double lambda);

/// Discrete Fourier transforms of the panel rows at the positive Fourier
/// frequencies: column j-1 holds d(lambda_j) for j = 1..T0, T0 = floor((T-1)/2).
CMatrix panel_fourier_transforms(const TimeSeriesPanel& panel);

/// Smoothed periodogram on a grid:
///   Sigma_hat(theta) = (2pi/(B_T T)) sum_{j=1}^{T0}
///     [ W((theta - lambda_j)/B_T) I(lambda_j) + W((theta + lambda_j)/B_T) conj(I(lambda_j)) ],
/// the j = 0 term excluded. The two windows carry I and conj(I) = I(-lambda_j)
/// respectively, so the estimator equals the two-sided sum over j != 0 and
/// satisfies Sigma_hat(-theta) = conj(Sigma_hat(theta)) exactly.
/// Grid points with an empty window get a zero matrix and a flag.
SpectralField smoothed_spectrum(const TimeSeriesPanel& panel, const FrequencyGrid& grid, double B_T,
                                const KernelSpec& kernel, int threads = 1);

/// Population spectral density evaluated on a grid (parallel over points).
SpectralField analytic_spectrum_field(const ModelSpec& spec, const FrequencyGrid& grid,
                                      int threads = 1);

/// CSV export with columns (theta, i, j, re, im); indices are 1-based.
void write_csv(const SpectralField& field, std::ostream& os);

}  // namespace lmgdfm
