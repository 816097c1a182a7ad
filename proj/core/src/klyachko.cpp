#include "toric/klyachko.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/normal_form.hpp"

namespace toric {

Filtration::Filtration(std::size_t rank, std::vector<Breakpoint> breakpoints)
    : rank_(rank), full_(RationalSubspace::full(rank)) {
  const RationalSubspace* previous = &full_;
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    const Breakpoint& b = breakpoints[k];
    if (b.subspace.ambient_rank() != rank)
      throw std::invalid_argument("filtration subspace has the wrong ambient rank");
    if (k > 0 && b.index <= breakpoints[k - 1].index)
      throw std::invalid_argument("filtration breakpoints must have increasing indices");
    if (!b.subspace.is_subspace_of(*previous))
      throw std::invalid_argument("filtration is not decreasing at index " + std::to_string(b.index));
    if (b.subspace == *previous) continue;
    breakpoints_.push_back(b);
    previous = &breakpoints_.back().subspace;
  }
  if (breakpoints_.empty() || !breakpoints_.back().subspace.is_zero())
    throw std::invalid_argument("filtration must reach the zero subspace");
}

const RationalSubspace& Filtration::at(long long i) const {
  const RationalSubspace* value = &full_;
  for (const auto& b : breakpoints_) {
    if (b.index > i) break;
    value = &b.subspace;
  }
  return *value;
}

FiltrationFamily FiltrationFamily::tangent(const Cone& cone) {
  FiltrationFamily family(cone.ambient_rank());
  for (const auto& r : rays(cone)) family.insert(r, tangent_filtration(r, cone.ambient_rank()));
  return family;
}

FiltrationFamily FiltrationFamily::tangent(const Fan& fan) {
  FiltrationFamily family(fan.ambient_rank());
  for (const auto& r : fan_rays(fan)) family.insert(r, tangent_filtration(r, fan.ambient_rank()));
  return family;
}

void FiltrationFamily::insert(const Ray& ray, Filtration filtration) {
  if (ray.ambient_rank() != rank_ || filtration.ambient_rank() != rank_)
    throw std::invalid_argument("filtration family rank mismatch");
  filtrations_.insert_or_assign(ray, std::move(filtration));
}

const Filtration& FiltrationFamily::at(const Ray& ray) const {
  auto it = filtrations_.find(ray);
  if (it == filtrations_.end())
    throw std::invalid_argument("no filtration for ray " + ray.to_string());
  return it->second;
}

Filtration tangent_filtration(const Ray& ray, std::size_t rank) {
  if (ray.ambient_rank() != rank) throw std::invalid_argument("tangent_filtration: rank mismatch");
  return Filtration(rank, {{1, RationalSubspace::span(rank, std::vector<LatticeVector>{ray.generator()})},
                           {2, RationalSubspace::zero(rank)}});
}

namespace {

// Clamp an exact level into the range where the filtration can change.
long long clamp_level(const Filtration& f, const Integer& level) {
  if (level < f.first_level()) return f.first_level();
  if (level > f.last_level()) return f.last_level();
  return static_cast<long long>(level);
}

}  // namespace

std::size_t sections_dimension(const Filtration& filtration, const Ray& ray, const Weight& m) {
  Integer level = -pairing(m, ray.generator());
  return filtration.at(clamp_level(filtration, level)).dim();
}

std::size_t sections_dimension(const Ray& ray, const Weight& m, std::size_t rank) {
  return sections_dimension(tangent_filtration(ray, rank), ray, m);
}

CertificateCheck verify_certificate(const Cone& cone, const FiltrationFamily& family,
                                    const DecompositionCertificate& certificate) {
  if (!(certificate.cone() == cone))
    throw std::invalid_argument("certificate is for " + certificate.cone().to_string() +
                                ", not " + cone.to_string());
  const std::size_t n = cone.ambient_rank();
  if (family.ambient_rank() != n) throw std::invalid_argument("filtration family rank mismatch");
  const std::vector<Ray> cone_rays = rays(cone);
  for (const auto& r : cone_rays)
    if (!family.contains(r)) throw std::invalid_argument("no filtration for ray " + r.to_string());

  const auto& entries = certificate.entries();
  std::vector<Weight> classes;
  for (const auto& e : entries) {
    if (e.weight.rank() != n || e.subspace.ambient_rank() != n)
      throw std::invalid_argument("certificate entry has the wrong rank");
    if (e.subspace.is_zero())
      return {false, "piece for weight " + e.weight.to_string() + " is zero"};
    Weight c = weight_class(e.weight, cone);
    if (std::find(classes.begin(), classes.end(), c) != classes.end())
      return {false, "weight class " + c.to_string() + " appears twice"};
    classes.push_back(std::move(c));
  }

  RationalSubspace total = RationalSubspace::zero(n);
  std::size_t dim_sum = 0;
  for (const auto& e : entries) {
    total = total.sum(e.subspace);
    dim_sum += e.subspace.dim();
  }
  if (dim_sum != total.dim()) return {false, "pieces do not form a direct sum"};
  if (!total.is_full()) return {false, "pieces do not span the whole space"};

  for (const auto& r : cone_rays) {
    const Filtration& f = family.at(r);
    std::vector<Integer> levels;
    for (const auto& e : entries) levels.push_back(pairing(e.weight, r.generator()));
    for (long long i = f.first_level(); i <= f.last_level(); ++i) {
      RationalSubspace induced = RationalSubspace::zero(n);
      for (std::size_t k = 0; k < entries.size(); ++k)
        if (levels[k] >= i) induced = induced.sum(entries[k].subspace);
      if (!(induced == f.at(i)))
        return {false, "ray " + r.to_string() + ", level " + std::to_string(i) + ": pieces give " +
                           induced.to_string() + " but the filtration has " + f.at(i).to_string()};
    }
  }
  return {true, {}};
}

std::string LocalFreenessFailure::describe() const {
  switch (kind) {
    case Kind::DependentRays:
      return "dependent rays";
    case Kind::NoIntegralDualWeight:
      return "no integral dual weight for ray " + (ray ? ray->to_string() : std::string("?"));
  }
  return {};
}

LocalFreenessReport decide_tangent_locally_free(const Cone& cone) {
  const std::size_t n = cone.ambient_rank();
  const std::vector<Ray> cone_rays = rays(cone);
  LocalFreenessReport report;

  if (!linearly_independent_rays(cone)) {
    report.failure = LocalFreenessFailure{LocalFreenessFailure::Kind::DependentRays, std::nullopt};
    return report;
  }

  const IntMatrix a = IntMatrix::from_vectors(n, cone.extreme_rays());
  for (std::size_t i = 0; i < cone_rays.size(); ++i) {
    std::vector<Integer> delta(cone_rays.size());
    delta[i] = 1;
    auto m = solve_integer_system(a, delta);
    if (!m) {
      report.witnesses.clear();
      report.failure = LocalFreenessFailure{LocalFreenessFailure::Kind::NoIntegralDualWeight, cone_rays[i]};
      return report;
    }
    report.witnesses.emplace_back(cone_rays[i], weight_class(Weight(std::move(*m)), cone));
  }

  std::vector<DecompositionCertificate::Entry> entries;
  for (const auto& [ray, m] : report.witnesses)
    entries.push_back({m, RationalSubspace::span(n, std::vector<LatticeVector>{ray.generator()})});
  if (cone.dim() < n) {
    RationalSubspace span = RationalSubspace::span(n, cone.extreme_rays());
    entries.push_back({Weight::zero(n), span.complement()});
  }
  DecompositionCertificate certificate(cone, std::move(entries));
  CertificateCheck check = verify_certificate(cone, FiltrationFamily::tangent(cone), certificate);
  if (!check)
    throw std::logic_error("emitted certificate for " + cone.to_string() +
                           " does not verify: " + check.diagnostic);
  report.locally_free = true;
  report.certificate = std::move(certificate);
  return report;
}

FanLocalFreeness decide_tangent_locally_free_on_fan(const Fan& fan) {
  FanLocalFreeness out;
  for (const auto& c : fan.cones()) {
    LocalFreenessReport r = decide_tangent_locally_free(c);
    out.locally_free = out.locally_free && r.locally_free;
    out.cones.emplace(c, std::move(r));
  }
  return out;
}

}  // namespace toric
