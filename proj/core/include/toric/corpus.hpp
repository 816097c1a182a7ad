#pragma once

// Reproducible random cones and a library of named examples.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "toric/cone.hpp"
#include "toric/fan.hpp"

namespace toric {

struct GeneratorConfig {
  std::size_t rank = 2;            // 2..6
  std::size_t min_generators = 1;
  std::size_t max_generators = 0;  // 0 means rank + 2
  long long bound = 5;             // coordinates drawn from [-bound, bound]
  bool nonnegative = false;        // draw from [0, bound] instead
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
  std::size_t effective_max_generators() const {
    return max_generators ? max_generators : rank + 2;
  }
};

/// Deterministic stream of strongly convex cones. Each cone: draw a
/// generator count uniformly from the configured range, draw that many
/// nonzero integer vectors uniformly from the coordinate box, and reject
/// the draw if the cone contains a line. Uses std::mt19937_64 (fully
/// specified by the standard) with a rejection-sampled integer range
/// reduction, so the stream is identical on every platform.
class ConeGenerator {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";
  static constexpr int kMaxAttempts = 10000;

  explicit ConeGenerator(GeneratorConfig config);

  /// Throws std::runtime_error after kMaxAttempts rejected draws.
  Cone next();
  std::vector<Cone> take(std::size_t count);
  const GeneratorConfig& config() const { return config_; }

 private:
  long long uniform(long long lo, long long hi);

  GeneratorConfig config_;
  std::mt19937_64 engine_;
};

/// The first cone of the stream for `config`.
Cone random_cone(const GeneratorConfig& config);

/// Uniform integer in [lo, hi] from a 64-bit engine, platform independent.
long long uniform_integer(std::mt19937_64& engine, long long lo, long long hi);

/// Product of 1..max_depth elementary matrices I + c·e_ij with c in
/// [-3, 3] \ {0}; always unimodular.
IntMatrix random_unimodular(std::size_t rank, std::mt19937_64& engine, int max_depth = 8);

struct NamedExample {
  std::string name;
  std::variant<Cone, Fan> object;
  bool smooth;
  bool locally_free;
};

const std::vector<NamedExample>& named_examples();
std::optional<NamedExample> find_named_example(std::string_view name);

}  // namespace toric
