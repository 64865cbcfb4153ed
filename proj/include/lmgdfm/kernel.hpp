#pragma once

#include <string>

#include "lmgdfm/common.hpp"

namespace lmgdfm {

/// Spectral smoothing window: symmetric, nonnegative, unit integral, compact
/// support on [-rho, rho], Lipschitz on its support.
class KernelSpec {
 public:
  enum class Family { Epanechnikov, BartlettPriestley };

  /// w(x) = 3/4 (1 - x^2) on [-1, 1].
  static KernelSpec epanechnikov() { return KernelSpec(Family::Epanechnikov, 1.0, "epanechnikov"); }

  /// w(x) = 3/(4 pi) (1 - (x/pi)^2) on [-pi, pi].
  static KernelSpec bartlett_priestley() {
    return KernelSpec(Family::BartlettPriestley, kPi, "bartlett-priestley");
  }

  static KernelSpec by_name(const std::string& name) {
    if (name == "epanechnikov") return epanechnikov();
    if (name == "bartlett-priestley" || name == "bartlett_priestley") return bartlett_priestley();
    throw config_error("unknown kernel: " + name);
  }

  double weight(double x) const {
    if (x < -rho_ || x > rho_) return 0.0;
    switch (family_) {
      case Family::Epanechnikov:
        return 0.75 * (1.0 - x * x);
      case Family::BartlettPriestley: {
        const double u = x / kPi;
        return 3.0 / (4.0 * kPi) * (1.0 - u * u);
      }
    }
    return 0.0;
  }

  double rho() const { return rho_; }
  const std::string& name() const { return name_; }

 private:
  KernelSpec(Family f, double rho, std::string name) : family_(f), rho_(rho), name_(std::move(name)) {}

  Family family_;
  double rho_;
  std::string name_;
};

inline double kernel_weight(const KernelSpec& kernel, double x) { return kernel.weight(x); }

}  // namespace lmgdfm
