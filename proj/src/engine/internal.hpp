#pragma once

#include "beamgeneric/model.hpp"

namespace beamgeneric::detail {

State rk4_step(const Model& model, const State& z, double dt);

}  // namespace beamgeneric::detail
