#pragma once

#include <cstdint>
#include <vector>

#include "lmgdfm/grid.hpp"
#include "lmgdfm/model.hpp"

namespace lmgdfm {

/// MA(infinity) expansion of (1-L)^{-d}: psi_0 = 1, psi_k = psi_{k-1} (k-1+d)/k.
/// Throws std::domain_error for d outside [0, 0.5).
std::vector<double> frac_coeffs(double d, int K);

/// Impulse response of Theta(L)/Phi(L) up to lag K (no fractional part, no scale).
std::vector<double> arma_impulse(const TransferEntry& entry, int K);

/// MA coefficients of c (1-L)^{-d} Theta(L)/Phi(L) up to lag K: the convolution
/// of the fractional expansion with the ARMA impulse response, scaled by c.
std::vector<double> transfer_coeffs(const TransferEntry& entry, int K);

struct SimulateOptions {
  int burn_in = -1;   // -1: defaults to ma_trunc
  int ma_trunc = -1;  // -1: defaults to max(2000, 4T)
};

/// Simulate the panel x_it = chi_it + xi_it with the common component built
/// from the truncated one-sided MA representation,
///   chi_it = sum_l sum_{k=0}^{ma_trunc} b_{il,k} u_{l,t-k},
/// Gaussian shocks drawn from counter-based streams keyed by (seed, stream),
/// and the idiosyncratic component from an independent stream. The leading
/// burn_in observations are discarded. Deterministic in (spec, T, seed).
TimeSeriesPanel simulate_panel(const ModelSpec& spec, int T, std::uint64_t seed,
                               SimulateOptions opts = {});

/// Frequency response c (1-e^{-i theta})^{-d} Theta(e^{-i theta})/Phi(e^{-i theta}).
Complex transfer_value(const TransferEntry& entry, double theta);

/// Population spectral density
///   Sigma(theta) = (1/2pi) B(theta) B(theta)^* + Sigma_xi(theta),
/// with B_il the entry transfer values. Throws std::domain_error at theta = 0
/// when any memory parameter is positive (spectral singularity).
CMatrix analytic_spectrum(const ModelSpec& spec, double theta);

/// Idiosyncratic part of the population spectral density.
CMatrix analytic_idio_spectrum(const ModelSpec& spec, double theta);

}  // namespace lmgdfm
