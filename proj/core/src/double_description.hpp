#pragma once

#include <vector>

#include "toric/integer.hpp"

namespace toric::detail {

using IntRow = std::vector<Integer>;

/// Generators of {x in Q^n : <a, x> >= 0 for every inequality a}: a basis
/// of the lineality space and one primitive integer vector per extreme
/// ray of the pointed part. Representatives of the rays modulo the
/// lineality space are not normalized.
struct GeneratorDescription {
  std::vector<IntRow> lineality;
  std::vector<IntRow> rays;
};

/// Double description method with incremental Fourier-Motzkin steps; each
/// step keeps only the combinations that pass the rank test for extreme
/// rays, so the ray list stays irredundant.
GeneratorDescription solve_inequalities(std::size_t rank, const std::vector<IntRow>& inequalities);

Integer dot(const IntRow& a, const IntRow& b);
IntRow make_primitive(IntRow v);
std::size_t row_rank(std::size_t cols, const std::vector<IntRow>& rows);

/// Orthogonal projection of v onto the complement of span(basis) under the
/// standard inner product, scaled to a primitive integer vector. Returns an
/// empty row when v lies in span(basis).
IntRow project_off(const IntRow& v, const std::vector<IntRow>& basis);

}  // namespace toric::detail
