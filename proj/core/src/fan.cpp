#include "toric/fan.hpp"

#include <algorithm>
#include <set>

namespace toric {

FanError::FanError(Cone first, Cone second, Cone intersection)
    : std::invalid_argument("cones " + first.to_string() + " and " + second.to_string() +
                            " meet in " + intersection.to_string() + ", which is not a face of both"),
      first_(std::move(first)),
      second_(std::move(second)),
      intersection_(std::move(intersection)) {}

bool Fan::contains(const Cone& cone) const {
  return std::binary_search(cones_.begin(), cones_.end(), cone);
}

Fan validate_fan(std::size_t ambient_rank, const std::vector<Cone>& cones) {
  std::set<Cone> inputs;
  for (const auto& c : cones) {
    if (c.ambient_rank() != ambient_rank)
      throw std::invalid_argument("fan cone " + c.to_string() + " is not in rank " +
                                  std::to_string(ambient_rank));
    if (!c.is_strongly_convex()) throw NotStronglyConvexError(c.lineality_basis().front());
    inputs.insert(c);
  }
  // Faces of pairwise-compatible cones are compatible, so the inputs are
  // the only pairs to check.
  const std::vector<Cone> list(inputs.begin(), inputs.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      Cone meet = intersect(list[i], list[j]);
      if (!is_face(meet, list[i]) || !is_face(meet, list[j]))
        throw FanError(list[i], list[j], std::move(meet));
    }
  std::set<Cone> closed;
  for (const auto& c : list)
    for (auto& f : faces(c)) closed.insert(std::move(f));
  if (closed.empty()) closed.insert(new_cone({}, ambient_rank));

  Fan fan;
  fan.rank_ = ambient_rank;
  fan.cones_.assign(closed.begin(), closed.end());
  return fan;
}

std::vector<Cone> skeleton(const Fan& fan, std::size_t dim) {
  std::vector<Cone> out;
  for (const auto& c : fan.cones())
    if (c.dim() == dim) out.push_back(c);
  return out;
}

Fan codim_le1_subfan(const Fan& fan) {
  Fan sub;
  sub.rank_ = fan.rank_;
  for (const auto& c : fan.cones())
    if (c.dim() <= 1) sub.cones_.push_back(c);
  return sub;
}

std::vector<Cone> maximal_cones(const Fan& fan) {
  std::vector<Cone> out;
  const auto& cs = fan.cones();
  for (const auto& c : cs) {
    bool maximal = std::none_of(cs.begin(), cs.end(), [&](const Cone& other) {
      if (other.dim() <= c.dim()) return false;
      const auto& big = other.extreme_rays();
      return std::all_of(c.extreme_rays().begin(), c.extreme_rays().end(), [&](const auto& r) {
        return std::find(big.begin(), big.end(), r) != big.end();
      });
    });
    if (maximal) out.push_back(c);
  }
  return out;
}

std::vector<Ray> fan_rays(const Fan& fan) {
  std::vector<Ray> out;
  for (const auto& c : skeleton(fan, 1)) out.emplace_back(c.extreme_rays().front());
  return out;
}

}  // namespace toric
