#pragma once

#include <functional>

#include "beamgeneric/model.hpp"

namespace beamgeneric {

enum class FunctionalKind { energy, entropy };

double energy(const Model& model, const State& z);
double entropy(const Model& model, const State& z);
Cotangent grad_energy(const Model& model, const State& z);
Cotangent grad_entropy(const Model& model, const State& z);

double evaluate(const Model& model, FunctionalKind kind, const State& z);
Cotangent gradient(const Model& model, FunctionalKind kind, const State& z);

using ScalarFunctional = std::function<double(const State&)>;

/// Central-difference gradient with per-slot step h_i = rel_step * (1 + |z_i|).
/// Field slots are divided by dx so the result approximates the density
/// derivative paired by `pairing`; the e slot is left undivided.
Cotangent fd_gradient(const ScalarFunctional& f, const State& z, double rel_step = 1e-6);

}  // namespace beamgeneric
