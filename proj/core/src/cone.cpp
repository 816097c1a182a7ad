#include "toric/cone.hpp"

#include <algorithm>
#include <set>

#include "double_description.hpp"
#include "toric/normal_form.hpp"

namespace toric {

using detail::IntRow;

namespace {

template <class Space>
std::vector<IntVector<Space>> to_vectors(const std::vector<IntRow>& rows) {
  std::vector<IntVector<Space>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

template <class Space>
std::vector<IntRow> to_rows(const std::vector<IntVector<Space>>& vectors) {
  std::vector<IntRow> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.coords());
  return out;
}

std::vector<IntRow> kernel_rows(std::size_t rank, const std::vector<IntRow>& rows) {
  return integer_kernel(IntMatrix::from_rows(rank, rows));
}

// Primitive representatives orthogonal to `lineality`, sorted and unique.
std::vector<IntRow> canonical_pointed(const std::vector<IntRow>& gens,
                                      const std::vector<IntRow>& lineality) {
  std::set<IntRow> out;
  for (const auto& g : gens) {
    IntRow p = detail::project_off(g, lineality);
    if (!p.empty()) out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

void require_strongly_convex(const Cone& cone, const char* what) {
  if (!cone.is_strongly_convex())
    throw std::invalid_argument(std::string(what) + ": cone is not strongly convex");
}

}  // namespace

template <class Space>
PolyhedralCone<Space> PolyhedralCone<Space>::from_generators(std::size_t rank,
                                                             const std::vector<Vector>& generators) {
  if (rank == 0) throw std::invalid_argument("ambient rank must be at least 1");
  std::set<IntRow> unique;
  for (const auto& g : generators) {
    if (g.rank() != rank)
      throw std::invalid_argument("generator " + g.to_string() + " has wrong length for rank " +
                                  std::to_string(rank));
    if (!g.is_zero()) unique.insert(primitive(g).coords());
  }
  const std::vector<IntRow> gens(unique.begin(), unique.end());

  PolyhedralCone c;
  c.rank_ = rank;
  c.dim_ = detail::row_rank(rank, gens);

  const std::vector<IntRow> perp = gens.empty() ? kernel_rows(rank, {IntRow(rank)}) : kernel_rows(rank, gens);
  const detail::GeneratorDescription dual = detail::solve_inequalities(rank, gens);
  const std::vector<IntRow> facets = canonical_pointed(dual.rays, perp);

  std::vector<IntRow> dual_gens = facets;
  dual_gens.insert(dual_gens.end(), perp.begin(), perp.end());
  const std::vector<IntRow> lineality =
      dual_gens.empty() ? kernel_rows(rank, {IntRow(rank)}) : kernel_rows(rank, dual_gens);

  if (lineality.empty()) {
    // An input generator spans an extreme ray iff its tight constraints
    // have rank n - 1.
    for (const auto& g : gens) {
      std::vector<IntRow> tight = perp;
      for (const auto& f : facets)
        if (detail::dot(f, g) == 0) tight.push_back(f);
      if (detail::row_rank(rank, tight) + 1 == rank) c.rays_.emplace_back(g);
    }
  } else {
    std::vector<IntRow> inequalities = dual_gens;
    for (const auto& p : perp) {
      IntRow neg = p;
      for (auto& x : neg) x = -x;
      inequalities.push_back(std::move(neg));
    }
    const detail::GeneratorDescription primal = detail::solve_inequalities(rank, inequalities);
    c.rays_ = to_vectors<Space>(canonical_pointed(primal.rays, lineality));
    c.lineality_ = to_vectors<Space>(lineality);
  }
  std::sort(c.rays_.begin(), c.rays_.end());
  c.facets_ = to_vectors<DualSpace<Space>>(facets);
  c.perp_ = to_vectors<DualSpace<Space>>(perp);
  return c;
}

template <class Space>
std::vector<IntVector<Space>> PolyhedralCone<Space>::generators() const {
  std::vector<Vector> out = rays_;
  for (const auto& l : lineality_) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

template <class Space>
bool PolyhedralCone<Space>::contains(const Vector& v) const {
  for (const auto& f : facets_)
    if (pairing(f, v) < 0) return false;
  for (const auto& p : perp_)
    if (pairing(p, v) != 0) return false;
  return true;
}

template <class Space>
bool PolyhedralCone<Space>::contains(const PolyhedralCone& other) const {
  if (other.rank_ != rank_) return false;
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

template <class Space>
std::string PolyhedralCone<Space>::to_string() const {
  std::string s = "Cone[";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ",";
    s += rays_[i].to_string();
  }
  if (!lineality_.empty()) {
    s += "; lineality ";
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (i) s += ",";
      s += lineality_[i].to_string();
    }
  }
  if (rays_.empty() && lineality_.empty()) s += "0 in rank " + std::to_string(rank_);
  return s + "]";
}

template class PolyhedralCone<NSpace>;
template class PolyhedralCone<MSpace>;

Ray::Ray(LatticeVector generator) : generator_(std::move(generator)) {
  if (!is_primitive(generator_))
    throw std::invalid_argument("ray generator " + generator_.to_string() + " is not primitive");
}

Cone new_cone(const std::vector<LatticeVector>& generators, std::size_t ambient_rank) {
  Cone c = Cone::from_generators(ambient_rank, generators);
  if (!c.is_strongly_convex()) throw NotStronglyConvexError(c.lineality_basis().front());
  return c;
}

template <class Space>
PolyhedralCone<DualSpace<Space>> dual_cone(const PolyhedralCone<Space>& cone) {
  std::vector<IntVector<DualSpace<Space>>> gens = cone.facet_normals();
  for (const auto& p : cone.perp_basis()) {
    gens.push_back(p);
    gens.push_back(-p);
  }
  return PolyhedralCone<DualSpace<Space>>::from_generators(cone.ambient_rank(), gens);
}

template DualCone dual_cone<NSpace>(const Cone&);
template Cone dual_cone<MSpace>(const DualCone&);

std::vector<Ray> rays(const Cone& cone) {
  require_strongly_convex(cone, "rays");
  std::vector<Ray> out;
  out.reserve(cone.extreme_rays().size());
  for (const auto& r : cone.extreme_rays()) out.emplace_back(r);
  return out;
}

namespace {

// Index sets of rays lying on each facet.
std::vector<std::set<std::size_t>> facet_ray_sets(const Cone& cone) {
  const auto& rs = cone.extreme_rays();
  std::vector<std::set<std::size_t>> sets;
  for (const auto& f : cone.facet_normals()) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (pairing(f, rs[i]) == 0) s.insert(i);
    sets.push_back(std::move(s));
  }
  return sets;
}

}  // namespace

std::vector<Cone> faces(const Cone& cone) {
  require_strongly_convex(cone, "faces");
  const auto& rs = cone.extreme_rays();
  const auto facet_sets = facet_ray_sets(cone);
  std::set<std::set<std::size_t>> seen;
  std::vector<std::set<std::size_t>> queue;
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < rs.size(); ++i) all.insert(i);
  seen.insert(all);
  queue.push_back(all);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : facet_sets) {
      std::set<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), f.begin(), f.end(),
                            std::inserter(meet, meet.end()));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<Cone> out;
  out.reserve(queue.size());
  for (const auto& s : queue) {
    std::vector<LatticeVector> gens;
    for (auto i : s) gens.push_back(rs[i]);
    out.push_back(new_cone(gens, cone.ambient_rank()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_face(const Cone& candidate, const Cone& cone) {
  require_strongly_convex(cone, "is_face");
  if (candidate.ambient_rank() != cone.ambient_rank() || !candidate.is_strongly_convex()) return false;
  const auto& rs = cone.extreme_rays();
  std::set<std::size_t> mine;
  for (const auto& r : candidate.extreme_rays()) {
    auto it = std::find(rs.begin(), rs.end(), r);
    if (it == rs.end()) return false;
    mine.insert(static_cast<std::size_t>(it - rs.begin()));
  }
  // The smallest face containing the candidate: rays on every facet that
  // contains all of the candidate's rays.
  std::set<std::size_t> closure;
  for (std::size_t i = 0; i < rs.size(); ++i) closure.insert(i);
  for (const auto& f : facet_ray_sets(cone)) {
    if (!std::includes(f.begin(), f.end(), mine.begin(), mine.end())) continue;
    std::set<std::size_t> meet;
    std::set_intersection(closure.begin(), closure.end(), f.begin(), f.end(),
                          std::inserter(meet, meet.end()));
    closure = std::move(meet);
  }
  return closure == mine;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("intersect: rank mismatch");
  std::vector<Weight> gens;
  for (const Cone* c : {&a, &b}) {
    gens.insert(gens.end(), c->facet_normals().begin(), c->facet_normals().end());
    for (const auto& p : c->perp_basis()) {
      gens.push_back(p);
      gens.push_back(-p);
    }
  }
  return dual_cone(DualCone::from_generators(a.ambient_rank(), gens));
}

std::vector<Weight> perp_sublattice(const Cone& cone) { return cone.perp_basis(); }

Weight weight_class(const Weight& m, const Cone& cone) {
  if (m.rank() != cone.ambient_rank()) throw std::invalid_argument("weight_class: rank mismatch");
  Weight r = m;
  for (const auto& b : cone.perp_basis()) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    Integer q = floor_div(r[p], b[p]);
    if (q != 0) r -= q * b;
  }
  return r;
}

bool linearly_independent_rays(const Cone& cone) {
  require_strongly_convex(cone, "linearly_independent_rays");
  return cone.extreme_rays().size() == cone.dim();
}

Cone transform(const IntMatrix& u, const Cone& cone) {
  if (u.rows() != cone.ambient_rank() || u.cols() != cone.ambient_rank())
    throw std::invalid_argument("transform: matrix does not act on the cone's lattice");
  std::vector<LatticeVector> gens;
  for (const auto& g : cone.generators()) gens.emplace_back(u * g.coords());
  return new_cone(gens, cone.ambient_rank());
}

}  // namespace toric
