#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "beamgeneric/model.hpp"

namespace beamgeneric {

// ---------------------------------------------------------------------------
// Operator application and the evolution equation z_t = L dE + M dS.
// ---------------------------------------------------------------------------

Tangent apply_L(const Model& model, const State& z, const Cotangent& xi);
Tangent apply_M(const Model& model, const State& z, const Cotangent& xi);
FactoredDissipator factored_M(const Model& model, const State& z);

Tangent generic_rhs(const Model& model, const State& z);
Tangent direct_rhs(const Model& model, const State& z);

// ---------------------------------------------------------------------------
// Time integration.
// ---------------------------------------------------------------------------

struct IntegratorConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  int record_every = 1;
};

struct DiagnosticsRecord {
  double t = 0;
  double energy = 0;
  double entropy = 0;
  double mech_energy = 0;
  double res_LdS = 0;  // sup-norm of L(z) dS/dz
  double res_MdE = 0;  // sup-norm of M(z) dE/dz
  double theta_min = 0;  // 0 when the model has no theta field
};

DiagnosticsRecord diagnose(const Model& model, double t, const State& z);

/// One classical RK4 step on generic_rhs. Throws PreconditionError for dt <= 0.
State step_rk4(const Model& model, const State& z, double dt);

/// Called at every recorded step with the step index, time and state.
using StepObserver = std::function<void(long, double, const State&)>;

/// Integrates to cfg.t_end with fixed step cfg.dt, recording diagnostics at
/// step 0, every record_every steps, and the final step.
///
/// Throws PreconditionError if dt is not positive, exceeds model.dt_bound(),
/// t_end < dt, or record_every < 1. Throws DivergenceError on non-finite
/// values and DomainError if theta leaves (0, inf) under log-entropy; both
/// name the offending step.
std::vector<DiagnosticsRecord> integrate(const Model& model, const State& z0,
                                         const IntegratorConfig& cfg,
                                         const StepObserver& observer = {});

// ---------------------------------------------------------------------------
// Verification of the bracket axioms.
// ---------------------------------------------------------------------------

namespace tolerance {
inline constexpr double bracket = 1e-12;
inline constexpr double gradient = 1e-6;
inline constexpr double jacobi_constant = 1e-10;
inline constexpr double jacobi_state_dependent = 1e-4;
inline constexpr double jacobi_step = 1e-5;
}  // namespace tolerance

struct CheckResult {
  std::string name;
  double residual = 0;  // already divided by the check's scale
  double tolerance = 0;
  bool pass() const { return residual <= tolerance; }
};

struct VerificationReport {
  ModelId model;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Throws LookupError for an unknown check name.
  const CheckResult& check(const std::string& name) const;
};

/// Standard normal per slot; theta = exp(N/2) for log-entropy models.
State random_state(const Model& model, std::mt19937_64& rng);
Cotangent random_cotangent(const Model& model, std::mt19937_64& rng);

/// Randomised antisymmetry, symmetry, PSD and degeneracy checks on `trials`
/// random states with `trials` covector pairs each.
/// Checks: antisymmetry, symmetry, psd, degeneracy_LdS, degeneracy_MdE.
VerificationReport verify_brackets(const Model& model, int trials, std::uint64_t seed);

/// verify_brackets plus rhs_equivalence, grad_energy, grad_entropy,
/// block_equivalence (when a literal M exists) and jacobi.
VerificationReport verify_model(const Model& model, int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Jacobi identity.
// ---------------------------------------------------------------------------

/// F(z) = 1/2 <z - z0, A (z - z0)> + <c, z> with A symmetric.
struct TestFunctional {
  State z0;
  BlockOperator A;
  Cotangent c;

  double value(const State& z) const;
  Cotangent gradient(const State& z) const;
};

TestFunctional random_test_functional(const Model& model, std::mt19937_64& rng);

/// {F, G}(z) = <dF, L(z) dG>
double poisson_bracket(const Model& model, const State& z, const TestFunctional& f,
                       const TestFunctional& g);

struct JacobiResult {
  double residual = 0;  // |cyclic sum|
  double scale = 1;     // max(1, sum of |terms| in absolute pairing)
  double relative() const { return residual / scale; }
};

/// Cyclic sum {{F1,F2},F3} + {{F2,F3},F1} + {{F3,F1},F2}. Inner gradients are
/// analytic; outer gradients use central differences with relative step h.
JacobiResult jacobi_residual(const Model& model, const State& z, const TestFunctional& f1,
                             const TestFunctional& f2, const TestFunctional& f3, double h);

// ---------------------------------------------------------------------------
// Coordinate transformation.
// ---------------------------------------------------------------------------

/// The model in coordinates zbar = T z with T diagonal per slot (fields in
/// layout order, then e). Throws StructuralError for singular T.
ModelPtr make_scaled_model(ModelPtr model, std::vector<double> slot_scales);
State scale_state(const State& z, std::span<const double> slot_scales);

/// Integrates the original and transformed systems independently and returns
/// the largest sup-norm mismatch between T z(t) and zbar(t) over the samples.
double transform_check(const ModelPtr& model, std::span<const double> slot_scales,
                       const State& z0, const IntegratorConfig& cfg);

// ---------------------------------------------------------------------------
// Trajectory analysis.
// ---------------------------------------------------------------------------

/// Least-squares slope of log(mech_energy) against t over the last half of
/// the records. Throws PreconditionError for fewer than 10 records and
/// DomainError for nonpositive mech_energy in the window.
double decay_rate(std::span<const DiagnosticsRecord> records);

struct DecayFit {
  double rate = 0;
  int windows = 0;
  int negative_windows = 0;
  /// 1 - P(at least negative_windows negative slopes | sign is a fair coin).
  double confidence = 0;
};

/// decay_rate plus a sign test over equal sub-windows of the last half.
DecayFit fit_decay(std::span<const DiagnosticsRecord> records, int windows = 8);

/// Relative mismatch between d/dt of theta_t along the trajectory (central
/// difference of RK4 steps +-h) and the eliminated second-order equation
/// theta_tt = theta_xx - beta theta_t - beta gamma psi_tx - gamma psi_ttx.
/// Requires TimoshenkoHeatII.
double cattaneo_identity_residual(const Model& model, const State& z, double h = 1e-4);

}  // namespace beamgeneric
