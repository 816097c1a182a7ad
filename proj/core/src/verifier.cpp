#include "toric/verifier.hpp"

#include <algorithm>
#include <chrono>

#include "toric/klyachko.hpp"
#include "toric/smoothness.hpp"

namespace toric {

AgreementRecord check_zariski_lipman(const Cone& cone) {
  return {cone, is_smooth_cone(cone).smooth, decide_tangent_locally_free(cone).locally_free};
}

SweepSummary sweep(const std::vector<Cone>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary s;
  for (const auto& c : corpus) {
    AgreementRecord r = check_zariski_lipman(c);
    ++s.count;
    if (r.smooth) ++s.smooth_count;
    if (r.locally_free) ++s.locally_free_count;
    if (r.agree())
      ++s.agreements;
    else
      s.disagreements.push_back(std::move(r));
  }
  std::sort(s.disagreements.begin(), s.disagreements.end(),
            [](const AgreementRecord& a, const AgreementRecord& b) { return a.cone < b.cone; });
  s.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace toric
