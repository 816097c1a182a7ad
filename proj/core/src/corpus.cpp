#include "toric/corpus.hpp"

#include <limits>
#include <stdexcept>

namespace toric {

void GeneratorConfig::validate() const {
  if (rank < 2 || rank > 6) throw std::invalid_argument("generator rank must be in 2..6");
  if (bound < 1) throw std::invalid_argument("coordinate bound must be at least 1");
  if (bound > (1LL << 40)) throw std::invalid_argument("coordinate bound is too large");
  if (effective_max_generators() < min_generators)
    throw std::invalid_argument("generator count range is empty");
}

long long uniform_integer(std::mt19937_64& engine, long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("uniform_integer: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(engine());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return static_cast<long long>(static_cast<std::uint64_t>(lo) + x % span);
}

ConeGenerator::ConeGenerator(GeneratorConfig config) : config_(config), engine_(config.seed) {
  config_.validate();
}

long long ConeGenerator::uniform(long long lo, long long hi) { return uniform_integer(engine_, lo, hi); }

Cone ConeGenerator::next() {
  const long long lo = config_.nonnegative ? 0 : -config_.bound;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto count = static_cast<std::size_t>(
        uniform(static_cast<long long>(config_.min_generators),
                static_cast<long long>(config_.effective_max_generators())));
    std::vector<LatticeVector> gens;
    while (gens.size() < count) {
      LatticeVector v = LatticeVector::zero(config_.rank);
      for (std::size_t i = 0; i < config_.rank; ++i) v[i] = uniform(lo, config_.bound);
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
    Cone c = Cone::from_generators(config_.rank, gens);
    if (c.is_strongly_convex()) return c;
  }
  throw std::runtime_error("cone generator exceeded " + std::to_string(kMaxAttempts) +
                           " rejected draws");
}

std::vector<Cone> ConeGenerator::take(std::size_t count) {
  std::vector<Cone> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

Cone random_cone(const GeneratorConfig& config) { return ConeGenerator(config).next(); }

IntMatrix random_unimodular(std::size_t rank, std::mt19937_64& engine, int max_depth) {
  IntMatrix u = IntMatrix::identity(rank);
  if (rank < 2 || max_depth < 1) return u;
  const long long depth = uniform_integer(engine, 1, max_depth);
  for (long long step = 0; step < depth; ++step) {
    const auto i = static_cast<std::size_t>(uniform_integer(engine, 0, static_cast<long long>(rank) - 1));
    auto j = static_cast<std::size_t>(uniform_integer(engine, 0, static_cast<long long>(rank) - 2));
    if (j >= i) ++j;
    long long c = uniform_integer(engine, -3, 2);
    if (c >= 0) ++c;
    IntMatrix e = IntMatrix::identity(rank);
    e(i, j) = c;
    u = e * u;
  }
  return u;
}

namespace {

Cone cone_of(std::size_t rank, std::initializer_list<LatticeVector> gens) {
  return new_cone(std::vector<LatticeVector>(gens), rank);
}

Fan fan_of(std::size_t rank, std::initializer_list<Cone> cones) {
  return validate_fan(rank, std::vector<Cone>(cones));
}

std::vector<NamedExample> build_examples() {
  std::vector<NamedExample> ex;
  ex.push_back({"orthant2", cone_of(2, {{1, 0}, {0, 1}}), true, true});
  ex.push_back({"orthant3", cone_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), true, true});
  for (long long k = 1; k <= 5; ++k)
    ex.push_back({"A" + std::to_string(k), cone_of(2, {{1, 0}, {1, k + 1}}), false, false});
  ex.push_back({"conifold", cone_of(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}), false, false});
  ex.push_back({"P1", fan_of(1, {cone_of(1, {{1}}), cone_of(1, {{-1}})}), true, true});
  ex.push_back({"P2",
                fan_of(2, {cone_of(2, {{1, 0}, {0, 1}}), cone_of(2, {{0, 1}, {-1, -1}}),
                           cone_of(2, {{-1, -1}, {1, 0}})}),
                true, true});
  ex.push_back({"P1xP1",
                fan_of(2, {cone_of(2, {{1, 0}, {0, 1}}), cone_of(2, {{0, 1}, {-1, 0}}),
                           cone_of(2, {{-1, 0}, {0, -1}}), cone_of(2, {{0, -1}, {1, 0}})}),
                true, true});
  ex.push_back({"P112",
                fan_of(2, {cone_of(2, {{1, 0}, {0, 1}}), cone_of(2, {{0, 1}, {-1, -2}}),
                           cone_of(2, {{-1, -2}, {1, 0}})}),
                false, false});
  ex.push_back({"ray_1_0", cone_of(2, {{1, 0}}), true, true});
  ex.push_back({"ray_1_2", cone_of(2, {{1, 2}}), true, true});
  ex.push_back({"ray_rank3", cone_of(3, {{2, 3, 5}}), true, true});
  ex.push_back({"zero2", cone_of(2, {}), true, true});
  ex.push_back({"zero3", cone_of(3, {}), true, true});
  return ex;
}

}  // namespace

const std::vector<NamedExample>& named_examples() {
  static const std::vector<NamedExample> examples = build_examples();
  return examples;
}

std::optional<NamedExample> find_named_example(std::string_view name) {
  for (const auto& e : named_examples())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace toric
