#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lmgdfm/common.hpp"

namespace lmgdfm {

/// One loading filter c * (1-L)^{-d} * Theta(L) / Phi(L).
/// Theta(z) = sum_k theta[k] z^k; Phi(z) = 1 - sum_k phi[k] z^{k+1}.
/// The one-pole case Theta = 1, Phi = 1 - alpha L is the default construction.
struct TransferEntry {
  double d = 0.0;
  double c = 1.0;
  std::vector<double> theta{1.0};
  std::vector<double> phi{};

  static TransferEntry one_pole(double d, double c, double alpha) {
    TransferEntry e;
    e.d = d;
    e.c = c;
    e.theta = {1.0};
    e.phi = alpha != 0.0 ? std::vector<double>{alpha} : std::vector<double>{};
    return e;
  }
};

enum class IdioKind { OrthonormalWhiteNoise, DenseAr1Toeplitz };

/// Idiosyncratic component. White noise: xi_it iid N(0, sigma2).
/// Dense AR(1)-Toeplitz: xi_t = phi_eps xi_{t-1} + eps_t with
/// Var(eps_t) = (1 - phi_eps^2) Sigma0, (Sigma0)_{ij} = sigma_eps r_cs^{|i-j|},
/// so the marginal covariance of xi_t is exactly Sigma0.
struct IdioSpec {
  IdioKind kind = IdioKind::OrthonormalWhiteNoise;
  double sigma2 = 1.0;     // white-noise variance
  double sigma_eps = 1.0;  // Toeplitz diagonal (a variance)
  double phi_eps = 0.0;
  double r_cs = 0.0;

  static IdioSpec white(double sigma2) {
    IdioSpec s;
    s.kind = IdioKind::OrthonormalWhiteNoise;
    s.sigma2 = sigma2;
    return s;
  }
  static IdioSpec dense_ar1(double sigma_eps, double phi_eps, double r_cs) {
    IdioSpec s;
    s.kind = IdioKind::DenseAr1Toeplitz;
    s.sigma_eps = sigma_eps;
    s.phi_eps = phi_eps;
    s.r_cs = r_cs;
    return s;
  }
};

enum class MemoryRegime { FactorHomogeneous, FactorHeterogeneous, RowHeterogeneous, EntryWise };

std::string regime_name(MemoryRegime r);

/// Full generative description of a long-memory factor panel.
struct ModelSpec {
  int n = 0;
  int q = 0;
  std::vector<std::vector<TransferEntry>> entries;  // [n][q]
  IdioSpec idio;

  const TransferEntry& entry(int i, int l) const { return entries[i][l]; }

  /// Throws std::domain_error / config_error on invalid parameters:
  /// d outside [0, 0.5), unstable Phi, bad shapes.
  void validate() const;

  MemoryRegime regime() const;

  bool all_loadings_zero() const;

  nlohmann::json to_json() const;

  /// Parse either the expanded "entries" form or the compact "columns" form
  /// with linspace generators and per-entry overrides. If n_override > 0 it
  /// replaces the document's "n" before row profiles are materialized.
  static ModelSpec from_json(const nlohmann::json& j, int n_override = 0);
};

/// True when Phi(z) = 1 - sum phi[k] z^{k+1} has all roots strictly outside
/// the closed unit disk (the AR recursion is stable).
bool ar_polynomial_stable(const std::vector<double>& phi);

/// An n x T observed panel, optionally carrying the simulated components.
/// When chi is attached, xi holds exactly X - chi (entrywise, bitwise): the
/// simulator stores xi := X - chi after forming X, so recomputing the
/// residual reproduces the attached matrix.
struct TimeSeriesPanel {
  Matrix X;
  std::optional<Matrix> chi;
  std::optional<Matrix> xi;

  int n() const { return static_cast<int>(X.rows()); }
  int T() const { return static_cast<int>(X.cols()); }
};

}  // namespace lmgdfm
