#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <utility>

#include "beamgeneric/grid.hpp"

namespace beamgeneric::detail {

/// sum_k c_k * u_k over fields of equal length.
inline Field combine(std::initializer_list<std::pair<double, std::span<const double>>> terms) {
  Field out(terms.begin()->second.size(), 0.0);
  for (const auto& [c, u] : terms) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * u[i];
  }
  return out;
}

inline Field times(std::span<const double> a, std::span<const double> b) {
  Field out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

inline void assign(std::span<double> dst, std::span<const double> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i];
}

}  // namespace beamgeneric::detail
