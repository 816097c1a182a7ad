#pragma once

#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using RationalVector = std::vector<Rational>;

/// A linear subspace of Q^n stored by its reduced row echelon basis
/// (pivots equal to 1, pivot columns increasing, zeros above and below
/// each pivot). Canonical, so == compares subspaces.
class RationalSubspace {
 public:
  static RationalSubspace zero(std::size_t rank);
  static RationalSubspace full(std::size_t rank);
  static RationalSubspace span(std::size_t rank, const std::vector<RationalVector>& vectors);
  template <class Space>
  static RationalSubspace span(std::size_t rank, const std::vector<IntVector<Space>>& vectors) {
    std::vector<RationalVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(to_rational(v.coords()));
    return span(rank, rows);
  }
  static RationalSubspace span_integer_rows(std::size_t rank,
                                            const std::vector<std::vector<Integer>>& rows);

  std::size_t ambient_rank() const { return rank_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == rank_; }
  const std::vector<RationalVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  template <class Space>
  bool contains(const IntVector<Space>& v) const {
    return contains(to_rational(v.coords()));
  }
  bool is_subspace_of(const RationalSubspace& other) const;

  RationalSubspace sum(const RationalSubspace& other) const;
  RationalSubspace intersection(const RationalSubspace& other) const;
  /// The coordinate complement spanned by e_j for the non-pivot columns j.
  RationalSubspace complement() const;
  /// {x : <b, x> = 0 for every basis vector b} under the standard pairing.
  RationalSubspace annihilator() const;

  /// Basis rows rescaled to primitive integer vectors.
  std::vector<std::vector<Integer>> integer_basis() const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.rank_ == b.rank_ && a.basis_ == b.basis_;
  }

  std::string to_string() const;

  static RationalVector to_rational(const std::vector<Integer>& v);

 private:
  RationalSubspace(std::size_t rank, std::vector<RationalVector> basis,
                   std::vector<std::size_t> pivots)
      : rank_(rank), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_rank(const RationalSubspace& other) const;

  std::size_t rank_ = 0;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Primitive integer vector on the same ray as a nonzero rational vector.
std::vector<Integer> clear_denominators(const RationalVector& v);

}  // namespace toric
