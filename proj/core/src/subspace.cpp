#include "toric/subspace.hpp"

#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace toric {
namespace {

struct Echelon {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
};

Echelon reduced_echelon(std::size_t rank, std::vector<RationalVector> rows) {
  for (const auto& r : rows)
    if (r.size() != rank) throw std::invalid_argument("subspace: vector length mismatch");
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < rank && pivot_row < rows.size(); ++col) {
    std::size_t p = pivot_row;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    RationalVector& pr = rows[pivot_row];
    Rational inv = 1 / pr[col];
    for (auto& x : pr) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t j = col; j < rank; ++j) rows[r][j] -= f * pr[j];
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return {std::move(rows), std::move(pivots)};
}

}  // namespace

RationalVector RationalSubspace::to_rational(const std::vector<Integer>& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

std::vector<Integer> clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    Integer d = boost::multiprecision::denominator(x);
    l = l / gcd(l, d) * d;
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer c = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
    g = gcd(g, c);
    out.push_back(std::move(c));
  }
  if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
  for (auto& c : out) c /= g;
  return out;
}

RationalSubspace RationalSubspace::zero(std::size_t rank) { return {rank, {}, {}}; }

RationalSubspace RationalSubspace::full(std::size_t rank) {
  std::vector<RationalVector> basis(rank, RationalVector(rank));
  std::vector<std::size_t> pivots(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    basis[i][i] = 1;
    pivots[i] = i;
  }
  return {rank, std::move(basis), std::move(pivots)};
}

RationalSubspace RationalSubspace::span(std::size_t rank,
                                        const std::vector<RationalVector>& vectors) {
  Echelon e = reduced_echelon(rank, vectors);
  return {rank, std::move(e.rows), std::move(e.pivots)};
}

RationalSubspace RationalSubspace::span_integer_rows(
    std::size_t rank, const std::vector<std::vector<Integer>>& rows) {
  std::vector<RationalVector> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.push_back(to_rational(row));
  return span(rank, r);
}

void RationalSubspace::check_rank(const RationalSubspace& other) const {
  if (other.rank_ != rank_) throw std::invalid_argument("subspace ambient rank mismatch");
}

bool RationalSubspace::contains(const RationalVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("subspace ambient rank mismatch");
  // Reduce against the echelon basis; v is inside iff nothing remains.
  RationalVector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational f = r[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) r[j] -= f * basis_[k][j];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool RationalSubspace::is_subspace_of(const RationalSubspace& other) const {
  check_rank(other);
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

RationalSubspace RationalSubspace::sum(const RationalSubspace& other) const {
  check_rank(other);
  std::vector<RationalVector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(rank_, rows);
}

RationalSubspace RationalSubspace::annihilator() const {
  std::vector<bool> is_pivot(rank_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RationalVector> rows;
  for (std::size_t f = 0; f < rank_; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(rank_);
    v[f] = 1;
    for (std::size_t k = 0; k < basis_.size(); ++k) v[pivots_[k]] = -basis_[k][f];
    rows.push_back(std::move(v));
  }
  return span(rank_, rows);
}

RationalSubspace RationalSubspace::intersection(const RationalSubspace& other) const {
  check_rank(other);
  return annihilator().sum(other.annihilator()).annihilator();
}

RationalSubspace RationalSubspace::complement() const {
  std::vector<bool> is_pivot(rank_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RationalVector> rows;
  for (std::size_t j = 0; j < rank_; ++j) {
    if (is_pivot[j]) continue;
    RationalVector e(rank_);
    e[j] = 1;
    rows.push_back(std::move(e));
  }
  return span(rank_, rows);
}

std::vector<std::vector<Integer>> RationalSubspace::integer_basis() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(clear_denominators(b));
  return out;
}

std::string RationalSubspace::to_string() const {
  std::string s = "span{";
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k) s += ",";
    s += "(";
    for (std::size_t j = 0; j < rank_; ++j) {
      if (j) s += ",";
      s += basis_[k][j].str();
    }
    s += ")";
  }
  return s + "}";
}

}  // namespace toric
