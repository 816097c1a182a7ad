#pragma once

#include <stdexcept>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// Two cones of a proposed fan whose intersection is not a face of both.
class FanError : public std::invalid_argument {
 public:
  FanError(Cone first, Cone second, Cone intersection);
  const Cone& first() const { return first_; }
  const Cone& second() const { return second_; }
  const Cone& intersection() const { return intersection_; }

 private:
  Cone first_, second_, intersection_;
};

/// A fan of strongly convex cones, stored face-closed and sorted in the
/// canonical cone order (so every cone appears exactly once).
class Fan {
 public:
  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }
  bool contains(const Cone& cone) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.cones_ == b.cones_;
  }

 private:
  Fan() = default;
  friend Fan validate_fan(std::size_t, const std::vector<Cone>&);
  friend Fan codim_le1_subfan(const Fan&);

  std::size_t rank_ = 0;
  std::vector<Cone> cones_;
};

/// Adds all faces and checks that every pairwise intersection is a face of
/// both cones. Input may list only the maximal cones; an empty list gives
/// the fan {0}. Throws FanError naming the first offending pair.
Fan validate_fan(std::size_t ambient_rank, const std::vector<Cone>& cones);

/// Σ(ℓ): the cones of dimension ℓ.
std::vector<Cone> skeleton(const Fan& fan, std::size_t dim);

/// Σ(0) ∪ Σ(1), the subfan over which every torus orbit has codimension
/// at most one.
Fan codim_le1_subfan(const Fan& fan);

/// Cones that are not a proper face of another cone.
std::vector<Cone> maximal_cones(const Fan& fan);

/// Σ(1) as rays.
std::vector<Ray> fan_rays(const Fan& fan);

}  // namespace toric
