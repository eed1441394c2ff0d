#include "beamgeneric/grid.hpp"

#include <cmath>
#include <string>

#include "beamgeneric/errors.hpp"

namespace beamgeneric {

Grid::Grid(int n, double length) : n_(n), length_(length), dx_(0.0) {
  if (n < 4) {
    throw ValidationError("grid needs at least 4 nodes, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw ValidationError("grid length must be positive and finite");
  }
  dx_ = length / n;
}

void Grid::check(std::span<const double> u) const {
  if (u.size() != static_cast<std::size_t>(n_)) {
    throw StructuralError("field of size " + std::to_string(u.size()) +
                          " does not live on a grid with n=" + std::to_string(n_));
  }
}

Field Grid::d1(std::span<const double> u) const {
  check(u);
  Field out(u.size());
  const double c = 0.5 / dx_;
  for (int i = 0; i < n_; ++i) {
    const int ip = (i + 1) % n_;
    const int im = (i + n_ - 1) % n_;
    out[i] = c * (u[ip] - u[im]);
  }
  return out;
}

Field Grid::d2(std::span<const double> u) const {
  check(u);
  Field out(u.size());
  const double c = 1.0 / (dx_ * dx_);
  for (int i = 0; i < n_; ++i) {
    const int ip = (i + 1) % n_;
    const int im = (i + n_ - 1) % n_;
    out[i] = c * ((u[ip] - u[i]) - (u[i] - u[im]));
  }
  return out;
}

Field Grid::dplus(std::span<const double> u) const {
  check(u);
  Field out(u.size());
  const double c = 1.0 / dx_;
  for (int i = 0; i < n_; ++i) out[i] = c * (u[(i + 1) % n_] - u[i]);
  return out;
}

Field Grid::dminus(std::span<const double> u) const {
  check(u);
  Field out(u.size());
  const double c = 1.0 / dx_;
  for (int i = 0; i < n_; ++i) out[i] = c * (u[i] - u[(i + n_ - 1) % n_]);
  return out;
}

double Grid::inner(std::span<const double> u, std::span<const double> v) const {
  check(u);
  check(v);
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += u[i] * v[i];
  return dx_ * acc;
}

double Grid::integrate(std::span<const double> u) const {
  check(u);
  double acc = 0.0;
  for (double x : u) acc += x;
  return dx_ * acc;
}

}  // namespace beamgeneric
