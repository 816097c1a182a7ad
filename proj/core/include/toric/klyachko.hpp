#pragma once

// Filtrations of N_Q describing equivariant reflexive sheaves, certificates
// for the compatibility condition that characterizes local freeness, and
// the decision procedure for the tangent sheaf.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/subspace.hpp"

namespace toric {

/// A decreasing Z-indexed filtration E(i) of Q^n. With breakpoints
/// (i_0, V_0), ..., (i_k, V_k): E(i) = Q^n for i < i_0, E(i) = V_j for
/// i_j <= i < i_{j+1}, and V_k = {0}. Breakpoints that do not change the
/// value are dropped on construction.
class Filtration {
 public:
  struct Breakpoint {
    long long index;
    RationalSubspace subspace;
  };

  /// Throws std::invalid_argument unless indices increase, each subspace
  /// is contained in the previous one, and the last one is zero.
  Filtration(std::size_t rank, std::vector<Breakpoint> breakpoints);

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  /// E(i).
  const RationalSubspace& at(long long i) const;
  /// Every level in [first_level(), last_level()] has to be checked to pin
  /// down the filtration; outside it E is constant (full below, zero above).
  long long first_level() const { return breakpoints_.front().index - 1; }
  long long last_level() const { return breakpoints_.back().index; }

 private:
  std::size_t rank_;
  RationalSubspace full_;
  std::vector<Breakpoint> breakpoints_;
};

/// One filtration per ray.
class FiltrationFamily {
 public:
  explicit FiltrationFamily(std::size_t rank) : rank_(rank) {}

  /// The tangent sheaf family on the rays of a cone or of a fan.
  static FiltrationFamily tangent(const Cone& cone);
  static FiltrationFamily tangent(const Fan& fan);

  void insert(const Ray& ray, Filtration filtration);
  bool contains(const Ray& ray) const { return filtrations_.count(ray) != 0; }
  const Filtration& at(const Ray& ray) const;
  std::size_t ambient_rank() const { return rank_; }
  const std::map<Ray, Filtration>& filtrations() const { return filtrations_; }

 private:
  std::size_t rank_;
  std::map<Ray, Filtration> filtrations_;
};

/// E^ρ(i) for the tangent sheaf: Q^n for i <= 0, Q·u_ρ for i = 1, {0} for
/// i >= 2.
Filtration tangent_filtration(const Ray& ray, std::size_t rank);

/// dim E^ρ(-<m, u_ρ>), the dimension of the degree-m piece of the
/// sections over U_ρ.
std::size_t sections_dimension(const Filtration& filtration, const Ray& ray, const Weight& m);
/// The same for the tangent sheaf in rank n.
std::size_t sections_dimension(const Ray& ray, const Weight& m, std::size_t rank);

/// A weight-graded splitting Q^n = ⊕ E_[m] proposed as a witness of the
/// compatibility condition on `cone`. Not validated on construction.
class DecompositionCertificate {
 public:
  struct Entry {
    Weight weight;  // any representative of the class in M / (M ∩ σ^⊥)
    RationalSubspace subspace;
  };

  DecompositionCertificate(Cone cone, std::vector<Entry> entries)
      : cone_(std::move(cone)), entries_(std::move(entries)) {}

  const Cone& cone() const { return cone_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  Cone cone_;
  std::vector<Entry> entries_;
};

struct CertificateCheck {
  bool valid = false;
  std::string diagnostic;  // empty when valid
  explicit operator bool() const { return valid; }
};

/// Checks that the certificate's pieces (a) sum directly to Q^n, and (b)
/// for every ray ρ of the cone and every level i, the pieces with
/// <m, u_ρ> >= i sum to E^ρ(i). Works for arbitrary families. Throws
/// std::invalid_argument if the certificate is for another cone, the
/// family misses a ray of the cone, or ranks disagree.
CertificateCheck verify_certificate(const Cone& cone, const FiltrationFamily& family,
                                    const DecompositionCertificate& certificate);

struct LocalFreenessFailure {
  enum class Kind { DependentRays, NoIntegralDualWeight };
  Kind kind;
  std::optional<Ray> ray;  // the offending ray for NoIntegralDualWeight

  std::string describe() const;
};

struct LocalFreenessReport {
  bool locally_free = false;
  /// (u_ρ, m_ρ) with <m_ρ, u_ρ'> = δ_ρρ', m_ρ reduced mod M ∩ σ^⊥.
  std::vector<std::pair<Ray, Weight>> witnesses;
  std::optional<LocalFreenessFailure> failure;
  std::optional<DecompositionCertificate> certificate;
};

/// Decides whether the tangent sheaf of U_σ is locally free. Free exactly
/// when the rays are linearly independent and each ray has an integral
/// dual weight pairing to 1 with it and to 0 with every other ray. On
/// success the certificate [m_ρ] ↦ Q·u_ρ (plus [0] ↦ a complement of
/// span σ when σ is not full-dimensional) is emitted and re-verified.
LocalFreenessReport decide_tangent_locally_free(const Cone& cone);

struct FanLocalFreeness {
  bool locally_free = true;
  std::map<Cone, LocalFreenessReport> cones;
};

/// Runs the decision on every cone of the fan, faces included.
FanLocalFreeness decide_tangent_locally_free_on_fan(const Fan& fan);

}  // namespace toric
