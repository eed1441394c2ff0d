#include <algorithm>
#include <cmath>
#include <string>

#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "engine/internal.hpp"

namespace beamgeneric {

namespace {

// Least-squares slope of log(mech_energy) on records [first, last).
double log_slope(std::span<const DiagnosticsRecord> r, std::size_t first, std::size_t last) {
  const double m = static_cast<double>(last - first);
  double st = 0, sy = 0;
  for (std::size_t i = first; i < last; ++i) {
    if (!(r[i].mech_energy > 0.0)) {
      throw DomainError("mechanical energy is nonpositive at t = " + std::to_string(r[i].t));
    }
    st += r[i].t;
    sy += std::log(r[i].mech_energy);
  }
  const double t_mean = st / m, y_mean = sy / m;
  double num = 0, den = 0;
  for (std::size_t i = first; i < last; ++i) {
    const double dt = r[i].t - t_mean;
    num += dt * (std::log(r[i].mech_energy) - y_mean);
    den += dt * dt;
  }
  return den > 0 ? num / den : 0.0;
}

std::size_t window_start(std::span<const DiagnosticsRecord> r) {
  const double t_mid = 0.5 * (r.front().t + r.back().t);
  std::size_t i = 0;
  while (i < r.size() && r[i].t < t_mid) ++i;
  return i;
}

// P(X >= k) for X ~ Binomial(n, 1/2).
double upper_tail(int n, int k) {
  double p = 0.0;
  for (int j = k; j <= n; ++j) {
    p += std::exp(std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) -
                  n * std::log(2.0));
  }
  return std::min(1.0, p);
}

}  // namespace

double decay_rate(std::span<const DiagnosticsRecord> records) {
  if (records.size() < 10) {
    throw PreconditionError("decay fit needs at least 10 records, got " +
                            std::to_string(records.size()));
  }
  const std::size_t first = window_start(records);
  return log_slope(records, first, records.size());
}

DecayFit fit_decay(std::span<const DiagnosticsRecord> records, int windows) {
  if (windows < 1) throw PreconditionError("fit_decay needs at least one window");
  DecayFit fit;
  fit.rate = decay_rate(records);
  const std::size_t first = window_start(records);
  const std::size_t len = (records.size() - first) / static_cast<std::size_t>(windows);
  if (len < 2) {
    throw PreconditionError("too few records for " + std::to_string(windows) + " windows");
  }
  fit.windows = windows;
  for (int w = 0; w < windows; ++w) {
    const std::size_t a = first + static_cast<std::size_t>(w) * len;
    if (log_slope(records, a, a + len) < 0.0) ++fit.negative_windows;
  }
  fit.confidence = fit.negative_windows == 0 ? 0.0
                                             : 1.0 - upper_tail(windows, fit.negative_windows);
  return fit;
}

double cattaneo_identity_residual(const Model& model, const State& z, double h) {
  if (model.id() != ModelId::TimoshenkoHeatII) {
    throw PreconditionError("the Cattaneo identity applies to TimoshenkoHeatII only, not " +
                            std::string(to_string(model.id())));
  }
  if (!(h > 0.0)) throw PreconditionError("probe step must be positive");
  model.require_layout(z);
  const Grid& g = model.grid();
  const auto& P = model.params();

  const Tangent rate = generic_rhs(model, z);
  const Tangent ahead = generic_rhs(model, detail::rk4_step(model, z, h));
  const Tangent behind = generic_rhs(model, detail::rk4_step(model, z, -h));

  const auto th = z.field(FieldName::theta);
  const auto q = z.field(FieldName::q);
  const auto th_t = rate.field(FieldName::theta);
  const auto q_t = rate.field(FieldName::q);
  const Field th_xx = g.d1(g.d1(th));
  const Field q_x = g.d1(q);
  const Field q_tx = g.d1(q_t);

  double diff = 0.0, size = 0.0;
  const auto a = ahead.field(FieldName::theta);
  const auto b = behind.field(FieldName::theta);
  for (std::size_t i = 0; i < th.size(); ++i) {
    const double lhs = (a[i] - b[i]) / (2.0 * h);
    const double rhs =
        th_xx[i] - P.beta * th_t[i] - P.beta * P.gamma * q_x[i] - P.gamma * q_tx[i];
    diff = std::max(diff, std::abs(lhs - rhs));
    size = std::max(size, std::abs(rhs));
  }
  return diff / std::max(size, 1e-300);
}

}  // namespace beamgeneric
