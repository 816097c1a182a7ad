#pragma once

// Smoothness of affine toric varieties from lattice data alone. This
// header deliberately depends only on the lattice and cone layers.

#include <optional>
#include <string>

#include "toric/cone.hpp"
#include "toric/fan.hpp"

namespace toric {

struct SmoothnessFailure {
  enum class Kind { RayCountMismatch, InvariantFactor };
  Kind kind;
  std::size_t ray_count = 0;
  std::size_t dim = 0;
  Integer invariant_factor;  // first invariant factor > 1, for InvariantFactor

  std::string describe() const;
};

struct SmoothnessReport {
  bool smooth = false;
  std::optional<SmoothnessFailure> failure;
};

/// σ is smooth iff it has exactly dim σ rays and they extend to a Z-basis
/// of N (all Smith invariant factors of the ray matrix equal 1).
SmoothnessReport is_smooth_cone(const Cone& cone);

/// Conjunction over all cones of the fan.
bool is_smooth_fan(const Fan& fan);

}  // namespace toric
