#pragma once

// Rational polyhedral cones in N and M: construction, duality, faces and
// the sublattice M ∩ σ^⊥.

#include <stdexcept>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Thrown when a cone that must be strongly convex contains a line.
class NotStronglyConvexError : public std::invalid_argument {
 public:
  explicit NotStronglyConvexError(LatticeVector witness)
      : std::invalid_argument("cone contains a line (direction " + witness.to_string() + ")"),
        witness_(std::move(witness)) {}
  const LatticeVector& witness() const { return witness_; }

 private:
  LatticeVector witness_;
};

/// A rational polyhedral cone in the lattice `Space`, held in canonical
/// form: the pointed part is generated by primitive vectors orthogonal
/// (standard inner product) to the lineality space, sorted
/// lexicographically; the lineality space by its Hermite lattice basis.
/// Equal cones therefore compare equal coordinate-wise. The facet
/// description is computed once at construction.
template <class Space>
class PolyhedralCone {
 public:
  using Vector = IntVector<Space>;
  using DualVector = IntVector<DualSpace<Space>>;

  /// Cone generated by `generators`; lines are allowed here.
  static PolyhedralCone from_generators(std::size_t rank, const std::vector<Vector>& generators);

  std::size_t ambient_rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  bool is_strongly_convex() const { return lineality_.empty(); }
  bool is_zero() const { return dim_ == 0; }

  /// Extreme rays of the pointed part (the rays when strongly convex).
  const std::vector<Vector>& extreme_rays() const { return rays_; }
  const std::vector<Vector>& lineality_basis() const { return lineality_; }
  /// Full generator list: extreme rays followed by ±b for each lineality
  /// basis vector b.
  std::vector<Vector> generators() const;

  /// Canonical inward facet normals (generators of the pointed part of the
  /// dual cone). Together with perp_basis() they cut out the cone.
  const std::vector<DualVector>& facet_normals() const { return facets_; }
  /// Hermite basis of the lattice annihilator of span(cone).
  const std::vector<DualVector>& perp_basis() const { return perp_; }

  bool contains(const Vector& v) const;
  bool contains(const PolyhedralCone& other) const;

  friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  /// Orders by ambient rank, dimension, then generators.
  friend bool operator<(const PolyhedralCone& a, const PolyhedralCone& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
    return a.lineality_ < b.lineality_;
  }

  std::string to_string() const;

 private:
  PolyhedralCone() = default;

  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vector> rays_;
  std::vector<Vector> lineality_;
  std::vector<DualVector> facets_;
  std::vector<DualVector> perp_;
};

using Cone = PolyhedralCone<NSpace>;
using DualCone = PolyhedralCone<MSpace>;

/// A one-dimensional cone, identified with its primitive generator u_ρ.
class Ray {
 public:
  explicit Ray(LatticeVector generator);
  const LatticeVector& generator() const { return generator_; }
  std::size_t ambient_rank() const { return generator_.rank(); }
  friend bool operator==(const Ray& a, const Ray& b) { return a.generator_ == b.generator_; }
  friend bool operator<(const Ray& a, const Ray& b) { return a.generator_ < b.generator_; }
  std::string to_string() const { return generator_.to_string(); }

 private:
  LatticeVector generator_;
};

/// Strongly convex cone generated by `generators` (may be empty: the zero
/// cone). Throws NotStronglyConvexError carrying a line direction.
Cone new_cone(const std::vector<LatticeVector>& generators, std::size_t ambient_rank);

/// σ^∨ = {m : <m, u> >= 0 for all u in σ}, and its inverse direction.
template <class Space>
PolyhedralCone<DualSpace<Space>> dual_cone(const PolyhedralCone<Space>& cone);

/// Extreme rays in canonical order. Requires strong convexity.
std::vector<Ray> rays(const Cone& cone);

/// All faces, including the cone itself and {0}, in canonical order.
std::vector<Cone> faces(const Cone& cone);
bool is_face(const Cone& candidate, const Cone& cone);

/// σ ∩ τ for cones in the same lattice.
Cone intersect(const Cone& a, const Cone& b);

/// Lattice basis of M ∩ σ^⊥ (Hermite form).
std::vector<Weight> perp_sublattice(const Cone& cone);

/// Canonical representative of m modulo M ∩ σ^⊥: pivot coordinates of the
/// Hermite basis are reduced into [0, pivot). The identity for full-dim σ.
Weight weight_class(const Weight& m, const Cone& cone);

/// True iff the ray generators are linearly independent over Q.
bool linearly_independent_rays(const Cone& cone);

/// The image cone {U u : u in σ}; U must be unimodular for the result to
/// be the same cone in new coordinates.
Cone transform(const IntMatrix& u, const Cone& cone);

}  // namespace toric
