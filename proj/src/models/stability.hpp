#pragma once

#include <algorithm>
#include <limits>

namespace beamgeneric::detail {

/// Accumulates the explicit RK4 step restrictions of a model's terms.
/// RK4 is stable on the imaginary axis up to |z| = 2*sqrt(2) and on the
/// negative real axis up to about 2.78; a 0.9 safety factor is applied.
class StabilityBound {
 public:
  void oscillation(double omega_max) {
    if (omega_max > 0.0) tighten(kSafety * 2.8 / omega_max);
  }
  void damping(double rate) {
    if (rate > 0.0) tighten(kSafety * 2.78 / rate);
  }
  /// Diffusion coefficient D discretised with the 3-point Laplacian.
  void diffusion(double coefficient, double dx) {
    if (coefficient > 0.0) tighten(kSafety * dx * dx / (2.0 * coefficient));
  }
  double value() const { return dt_; }

 private:
  static constexpr double kSafety = 0.9;
  void tighten(double dt) { dt_ = std::min(dt_, dt); }
  double dt_ = std::numeric_limits<double>::infinity();
};

}  // namespace beamgeneric::detail
