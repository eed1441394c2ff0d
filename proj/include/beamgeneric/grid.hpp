#pragma once

#include <span>
#include <vector>

namespace beamgeneric {

/// Nodal values of a scalar function on a Grid.
using Field = std::vector<double>;

/// Uniform periodic 1D mesh with mimetic difference operators.
///
/// Under the rectangle-rule inner product `inner(u, v) = dx * sum(u_i v_i)`:
///   - d1 (central) is exactly skew-adjoint,
///   - dplus^* = -dminus,
///   - d2 = dminus o dplus is exactly self-adjoint and negative semidefinite.
/// All operators annihilate constant fields.
class Grid {
 public:
  Grid(int n, double length);

  int n() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  double dx() const noexcept { return dx_; }
  double x(int i) const noexcept { return i * dx_; }

  /// (u[i+1] - u[i-1]) / (2 dx)
  Field d1(std::span<const double> u) const;
  /// (u[i+1] - 2u[i] + u[i-1]) / dx^2
  Field d2(std::span<const double> u) const;
  /// (u[i+1] - u[i]) / dx, value associated with the midpoint i+1/2.
  Field dplus(std::span<const double> u) const;
  /// (u[i] - u[i-1]) / dx
  Field dminus(std::span<const double> u) const;

  double inner(std::span<const double> u, std::span<const double> v) const;
  double integrate(std::span<const double> u) const;
  double norm2(std::span<const double> u) const { return inner(u, u); }

  Field constant(double c) const { return Field(static_cast<std::size_t>(n_), c); }

  bool operator==(const Grid& other) const noexcept {
    return n_ == other.n_ && length_ == other.length_;
  }

 private:
  void check(std::span<const double> u) const;

  int n_;
  double length_;
  double dx_;
};

}  // namespace beamgeneric
