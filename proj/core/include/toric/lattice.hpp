#pragma once

// Lattice vectors in N, weights in M, and dense integer matrices.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

/// Tag for the lattice N of one-parameter subgroups.
struct NSpace;
/// Tag for the character lattice M = Hom(N, Z).
struct MSpace;

template <class Space>
struct DualOf;
template <>
struct DualOf<NSpace> {
  using type = MSpace;
};
template <>
struct DualOf<MSpace> {
  using type = NSpace;
};
template <class Space>
using DualSpace = typename DualOf<Space>::type;

/// An exact integer vector of fixed length living in the lattice `Space`.
template <class Space>
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
  }

  static IntVector zero(std::size_t rank) {
    return IntVector(std::vector<Integer>(rank));
  }
  static IntVector unit(std::size_t rank, std::size_t i) {
    IntVector v = zero(rank);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  IntVector operator-() const {
    IntVector r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  IntVector& operator+=(const IntVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& k, IntVector v) {
    for (auto& c : v.coords_) c *= k;
    return v;
  }

  friend bool operator==(const IntVector& a, const IntVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic order on coordinates (shorter vectors first).
  friend bool operator<(const IntVector& a, const IntVector& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
    }
    return false;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const IntVector& v) {
    return os << v.to_string();
  }

 private:
  void check_rank(const IntVector& o) const;

  std::vector<Integer> coords_;
};

using LatticeVector = IntVector<NSpace>;
using Weight = IntVector<MSpace>;

/// Duality pairing <m, u> = sum m_i u_i. Throws on rank mismatch.
template <class Space>
Integer pairing(const IntVector<DualSpace<Space>>& m, const IntVector<Space>& u);

/// gcd of the coordinates (0 for the zero vector).
template <class Space>
Integer content(const IntVector<Space>& v);

/// v / gcd(v). Throws std::invalid_argument on the zero vector.
template <class Space>
IntVector<Space> primitive(const IntVector<Space>& v);

template <class Space>
bool is_primitive(const IntVector<Space>& v) {
  return !v.is_zero() && content(v) == 1;
}

/// Reinterpret coordinates in another lattice (used when a matrix row of
/// weights is read as a vector of N or vice versa).
template <class To, class From>
IntVector<To> recast(const IntVector<From>& v) {
  return IntVector<To>(v.coords());
}

/// Dense row-major integer matrix with fixed dimensions.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols,
                             const std::vector<std::vector<Integer>>& rows);
  template <class Space>
  static IntMatrix from_vectors(std::size_t cols,
                                const std::vector<IntVector<Space>>& rows) {
    std::vector<std::vector<Integer>> r;
    r.reserve(rows.size());
    for (const auto& v : rows) r.push_back(v.coords());
    return from_rows(cols, r);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> column(std::size_t c) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a,
                                        const std::vector<Integer>& x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    return os << m.to_string();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const IntMatrix& a);

}  // namespace toric
