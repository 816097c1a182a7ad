#include "toric/lattice.hpp"

#include <stdexcept>

namespace toric {

template <class Space>
void IntVector<Space>::check_rank(const IntVector& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("vector rank mismatch");
}

template <class Space>
Integer pairing(const IntVector<DualSpace<Space>>& m, const IntVector<Space>& u) {
  if (m.rank() != u.rank()) throw std::invalid_argument("pairing: rank mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < u.rank(); ++i) s += m[i] * u[i];
  return s;
}

template <class Space>
Integer content(const IntVector<Space>& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

template <class Space>
IntVector<Space> primitive(const IntVector<Space>& v) {
  Integer g = content(v);
  if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
  if (g == 1) return v;
  std::vector<Integer> c = v.coords();
  for (auto& x : c) x /= g;
  return IntVector<Space>(std::move(c));
}

template class IntVector<NSpace>;
template class IntVector<MSpace>;
template Integer pairing<NSpace>(const Weight&, const LatticeVector&);
template Integer pairing<MSpace>(const LatticeVector&, const Weight&);
template Integer content<NSpace>(const LatticeVector&);
template Integer content<MSpace>(const Weight&);
template LatticeVector primitive<NSpace>(const LatticeVector&);
template Weight primitive<MSpace>(const Weight&);

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols,
                               const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("matrix row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Integer> y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ",";
      s += (*this)(r, c).str();
    }
    s += "]";
  }
  return s + "]";
}

namespace {

// Fraction-free forward elimination in place; returns the rank and
// tracks the sign of row swaps.
std::size_t bareiss(IntMatrix& m, int& sign) {
  sign = 1;
  std::size_t rank = 0;
  Integer prev = 1;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(rank, j));
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  if (bareiss(m, sign) < m.rows()) return 0;
  Integer d = m(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? Integer(-d) : d;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  int sign = 1;
  return bareiss(m, sign);
}

}  // namespace toric
