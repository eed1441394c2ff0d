#include <algorithm>
#include <cmath>

#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "beamgeneric/functionals.hpp"

namespace beamgeneric {

namespace {

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Running maximum of a named, scale-normalised residual.
struct Accumulator {
  std::string name;
  double tolerance;
  double worst = 0.0;
  void observe(double residual, double scale) {
    worst = std::max(worst, residual / std::max(1.0, scale));
  }
  CheckResult result() const { return CheckResult{name, worst, tolerance}; }
};

void run_bracket_checks(const Model& model, int trials, std::uint64_t seed,
                        std::vector<CheckResult>& out) {
  Accumulator antisym{"antisymmetry", tolerance::bracket};
  Accumulator sym{"symmetry", tolerance::bracket};
  Accumulator psd{"psd", tolerance::bracket};
  Accumulator deg_l{"degeneracy_LdS", tolerance::bracket};
  Accumulator deg_m{"degeneracy_MdE", tolerance::bracket};

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const State z = random_state(model, rng);
    const BlockOperator L = model.poisson(z);
    const FactoredDissipator M = model.dissipator(z);
    const double z_scale = max_abs(z.flat());

    const Cotangent dS = model.grad_entropy(z);
    const Cotangent dE = model.grad_energy(z);
    deg_l.observe(max_abs(L.apply(dS).flat()), std::max(z_scale, max_abs(dS.flat())));
    deg_m.observe(max_abs(M.apply(dE).flat()), std::max(z_scale, max_abs(dE.flat())));

    for (int pair = 0; pair < trials; ++pair) {
      const Cotangent xi = random_cotangent(model, rng);
      const Cotangent eta = random_cotangent(model, rng);
      const Tangent l_eta = L.apply(eta);
      const Tangent l_xi = L.apply(xi);
      antisym.observe(std::abs(pairing(xi, l_eta) + pairing(eta, l_xi)),
                      abs_pairing(xi, l_eta) + abs_pairing(eta, l_xi));
      const Tangent m_eta = M.apply(eta);
      const Tangent m_xi = M.apply(xi);
      sym.observe(std::abs(pairing(xi, m_eta) - pairing(eta, m_xi)),
                  abs_pairing(xi, m_eta) + abs_pairing(eta, m_xi));
      psd.observe(std::max(0.0, -pairing(xi, m_xi)), abs_pairing(xi, m_xi));
    }
  }
  for (const auto* a : {&antisym, &sym, &psd, &deg_l, &deg_m}) out.push_back(a->result());
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw LookupError("no check named '" + name + "' in report");
}

State random_state(const Model& model, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  State z(model.layout());
  for (double& v : z.flat()) v = normal(rng);
  if (model.log_entropy()) {
    for (double& th : z.field(FieldName::theta)) th = std::exp(0.5 * th);
  }
  return z;
}

Cotangent random_cotangent(const Model& model, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Cotangent xi(model.layout());
  for (double& v : xi.flat()) v = normal(rng);
  return xi;
}

VerificationReport verify_brackets(const Model& model, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("verification needs at least one trial");
  VerificationReport report{model.id(), {}};
  run_bracket_checks(model, trials, seed, report.checks);
  return report;
}

VerificationReport verify_model(const Model& model, int trials, std::uint64_t seed) {
  VerificationReport report = verify_brackets(model, trials, seed);

  Accumulator rhs{"rhs_equivalence", tolerance::bracket};
  Accumulator g_energy{"grad_energy", tolerance::gradient};
  Accumulator g_entropy{"grad_entropy", tolerance::gradient};
  Accumulator blocks{"block_equivalence", tolerance::bracket};
  bool has_blocks = false;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < trials; ++t) {
    const State z = random_state(model, rng);

    const Tangent reversible = model.poisson(z).apply(model.grad_energy(z));
    const Tangent irreversible = model.dissipator(z).apply(model.grad_entropy(z));
    const Tangent generic = generic_rhs(model, z);
    const Tangent direct = model.direct_rhs(z);
    rhs.observe(sup_diff(generic.flat(), direct.flat()),
                std::max({max_abs(z.flat()), max_abs(reversible.flat()),
                          max_abs(irreversible.flat()), max_abs(direct.flat())}));

    const Cotangent dE = model.grad_energy(z);
    const Cotangent fdE = fd_gradient([&](const State& s) { return model.energy(s); }, z);
    g_energy.observe(sup_diff(dE.flat(), fdE.flat()), 1.0 + max_abs(dE.flat()));
    const Cotangent dS = model.grad_entropy(z);
    const Cotangent fdS = fd_gradient([&](const State& s) { return model.entropy(s); }, z);
    g_entropy.observe(sup_diff(dS.flat(), fdS.flat()), 1.0 + max_abs(dS.flat()));

    if (auto literal = model.block_dissipator(z)) {
      has_blocks = true;
      const FactoredDissipator M = model.dissipator(z);
      const Cotangent xi = random_cotangent(model, rng);
      const Tangent a = literal->apply(xi);
      const Tangent b = M.apply(xi);
      blocks.observe(sup_diff(a.flat(), b.flat()),
                     std::max({max_abs(xi.flat()), max_abs(a.flat()), max_abs(b.flat())}));
    }
  }
  report.checks.push_back(rhs.result());
  report.checks.push_back(g_energy.result());
  report.checks.push_back(g_entropy.result());
  if (has_blocks) report.checks.push_back(blocks.result());

  const bool state_dependent = model.log_entropy();
  Accumulator jacobi{"jacobi", state_dependent ? tolerance::jacobi_state_dependent
                                               : tolerance::jacobi_constant};
  const int jacobi_trials = std::min(trials, 3);
  for (int t = 0; t < jacobi_trials; ++t) {
    const State z = random_state(model, rng);
    const TestFunctional f1 = random_test_functional(model, rng);
    const TestFunctional f2 = random_test_functional(model, rng);
    const TestFunctional f3 = random_test_functional(model, rng);
    const JacobiResult j = jacobi_residual(model, z, f1, f2, f3, tolerance::jacobi_step);
    jacobi.observe(j.residual, j.scale);
  }
  report.checks.push_back(jacobi.result());
  return report;
}

}  // namespace beamgeneric
