#pragma once

// Cross-check of the two independent deciders: smoothness from lattice
// data, and local freeness of the tangent sheaf from filtrations.

#include <vector>

#include "toric/cone.hpp"

namespace toric {

struct AgreementRecord {
  Cone cone;
  bool smooth = false;
  bool locally_free = false;
  bool agree() const { return smooth == locally_free; }
};

AgreementRecord check_zariski_lipman(const Cone& cone);

struct SweepSummary {
  std::size_t count = 0;
  std::size_t agreements = 0;
  std::size_t smooth_count = 0;
  std::size_t locally_free_count = 0;
  std::vector<AgreementRecord> disagreements;  // sorted by cone
  double elapsed_seconds = 0.0;

  double smooth_rate() const { return count ? double(smooth_count) / double(count) : 0.0; }
};

SweepSummary sweep(const std::vector<Cone>& corpus);

}  // namespace toric
