#pragma once

#include "beamgeneric/model.hpp"

namespace beamgeneric {

/// Field order of each model: Timoshenko (phi, psi, p, q) followed by the
/// thermal unknowns; Bresse (phi, psi, chi, p, q, w) followed by the thermal
/// unknowns. Every model except TimoshenkoNew carries the reservoir e.
LayoutPtr make_layout(ModelId id, const Grid& grid);

/// Validates params for id and wires the model. Throws ValidationError.
ModelPtr build_model(ModelId id, const ModelParams& params, const Grid& grid);

/// Single Fourier mode in the displacements, zero velocities, theta = 1 for
/// TimoshenkoNew and 0 otherwise, e = 0. Throws PreconditionError for mode < 1.
State default_initial_state(ModelId id, const Grid& grid, int mode, double amplitude);

}  // namespace beamgeneric
