#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "lmgdfm/common.hpp"

namespace lmgdfm {

/// A strictly increasing set of frequencies in (-pi, pi].
///
/// Uniform grids use the midpoint convention theta_k = -pi + 2*pi*(k+1/2)/N,
/// which is symmetric about zero and contains neither 0 nor +-pi, so fields
/// with a singularity at the origin can be evaluated on it directly while the
/// rectangle rule still matches the inverse DFT exactly.
class FrequencyGrid {
 public:
  enum class Kind { Fourier, Uniform, Custom };

  static FrequencyGrid fourier(int T, bool exclude_zero) {
    if (T < 2) throw config_error("fourier grid: T must be >= 2");
    const int T0 = (T - 1) / 2;
    FrequencyGrid g;
    g.kind_ = Kind::Fourier;
    g.param_ = T;
    for (int j = -T0; j <= T0; ++j) {
      if (exclude_zero && j == 0) continue;
      g.points_.push_back(kTwoPi * j / T);
    }
    g.symmetric_ = true;
    return g;
  }

  static FrequencyGrid uniform(int N) {
    if (N < 2 || N % 2 != 0) throw config_error("uniform grid: N must be even and >= 2");
    FrequencyGrid g;
    g.kind_ = Kind::Uniform;
    g.param_ = N;
    g.points_.resize(N);
    for (int k = 0; k < N; ++k) g.points_[k] = -kPi + kTwoPi * (k + 0.5) / N;
    g.symmetric_ = true;
    return g;
  }

  static FrequencyGrid custom(std::vector<double> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] <= -kPi || pts[i] > kPi) throw config_error("custom grid: points must lie in (-pi, pi]");
      if (i > 0 && pts[i] <= pts[i - 1]) throw config_error("custom grid: points must be strictly increasing");
    }
    FrequencyGrid g;
    g.kind_ = Kind::Custom;
    g.param_ = static_cast<int>(pts.size());
    g.points_ = std::move(pts);
    g.symmetric_ = g.detect_symmetry();
    return g;
  }

  Kind kind() const { return kind_; }
  int param() const { return param_; }
  int size() const { return static_cast<int>(points_.size()); }
  double operator[](int k) const { return points_[k]; }
  const std::vector<double>& points() const { return points_; }

  /// True when for every point theta the grid also contains -theta.
  bool symmetric() const { return symmetric_; }

  /// Index of the point -points[k]; valid on symmetric grids without zero.
  int mirror(int k) const {
    if (kind_ == Kind::Uniform) return size() - 1 - k;
    for (int j = 0; j < size(); ++j)
      if (std::abs(points_[j] + points_[k]) < 1e-12) return j;
    throw std::logic_error("mirror: grid is not symmetric");
  }

  bool is_uniform() const { return kind_ == Kind::Uniform; }

  bool operator==(const FrequencyGrid& other) const { return points_ == other.points_; }

 private:
  bool detect_symmetry() const {
    for (double p : points_) {
      bool found = false;
      for (double q : points_)
        if (std::abs(p + q) < 1e-12) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }

  Kind kind_ = Kind::Custom;
  int param_ = 0;
  bool symmetric_ = false;
  std::vector<double> points_;
};

}  // namespace lmgdfm
