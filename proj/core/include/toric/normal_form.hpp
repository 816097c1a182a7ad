#pragma once

// Hermite and Smith normal forms and the integer linear algebra built on
// them.

#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

struct HermiteForm {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, h == u * a
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form: nonzero rows first, positive pivots with
/// strictly increasing columns, zeros below each pivot and entries above a
/// pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& a);

struct SmithForm {
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, d == u * a * v
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Some x in Z^cols with a * x == b, or nullopt when none exists over Z.
/// The solution is the one read off the Hermite form of a^T, with all free
/// coordinates set to zero, so it is deterministic.
std::optional<std::vector<Integer>> solve_integer_system(const IntMatrix& a,
                                                         const std::vector<Integer>& b);

/// Canonical (Hermite-reduced) lattice basis of {x in Z^cols : a * x == 0}.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a);

/// Canonical Hermite basis of the lattice spanned by the rows of `a`.
std::vector<std::vector<Integer>> lattice_basis(const IntMatrix& a);

/// True iff the vectors are part of a Z-basis of the ambient lattice:
/// linearly independent with all invariant factors equal to 1.
template <class Space>
bool extends_to_lattice_basis(const std::vector<IntVector<Space>>& vectors);

}  // namespace toric
