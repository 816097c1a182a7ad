#include "toric/smoothness.hpp"

#include "toric/normal_form.hpp"

namespace toric {

std::string SmoothnessFailure::describe() const {
  switch (kind) {
    case Kind::RayCountMismatch:
      return "ray count " + std::to_string(ray_count) + " != dim " + std::to_string(dim);
    case Kind::InvariantFactor:
      return "invariant factor " + invariant_factor.str();
  }
  return {};
}

SmoothnessReport is_smooth_cone(const Cone& cone) {
  const auto ray_list = rays(cone);
  SmoothnessReport report;
  if (ray_list.size() != cone.dim()) {
    report.failure = SmoothnessFailure{SmoothnessFailure::Kind::RayCountMismatch, ray_list.size(),
                                       cone.dim(), 0};
    return report;
  }
  if (ray_list.empty()) {
    report.smooth = true;
    return report;
  }
  SmithForm s = smith_normal_form(IntMatrix::from_vectors(cone.ambient_rank(), cone.extreme_rays()));
  for (const auto& f : s.invariant_factors()) {
    if (f != 1) {
      report.failure = SmoothnessFailure{SmoothnessFailure::Kind::InvariantFactor, ray_list.size(),
                                         cone.dim(), f};
      return report;
    }
  }
  report.smooth = true;
  return report;
}

bool is_smooth_fan(const Fan& fan) {
  for (const auto& c : fan.cones())
    if (!is_smooth_cone(c).smooth) return false;
  return true;
}

}  // namespace toric
