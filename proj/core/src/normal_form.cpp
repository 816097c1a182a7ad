#include "toric/normal_form.hpp"

#include <stdexcept>
#include <utility>

namespace toric {
namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// row_dst -= q * row_src
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

// Replace rows (p, r) by [[x, y], [-b/g, a/g]] * (row_p, row_r); det 1.
void combine_rows(IntMatrix& m, std::size_t p, std::size_t r, const Integer& x,
                  const Integer& y, const Integer& s, const Integer& t) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer top = x * m(p, j) + y * m(r, j);
    Integer bottom = s * m(p, j) + t * m(r, j);
    m(p, j) = std::move(top);
    m(r, j) = std::move(bottom);
  }
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    for (std::size_t r = pivot + 1; r < h.rows(); ++r) {
      if (h(r, col) == 0) continue;
      Integer pa = h(pivot, col), rb = h(r, col);
      ExtendedGcd e = extended_gcd(pa, rb);
      Integer s = -rb / e.g, t = pa / e.g;
      combine_rows(h, pivot, r, e.x, e.y, s, t);
      combine_rows(u, pivot, r, e.x, e.y, s, t);
    }
    if (h(pivot, col) == 0) continue;
    if (h(pivot, col) < 0) {
      negate_row(h, pivot);
      negate_row(u, pivot);
    }
    for (std::size_t r = 0; r < pivot; ++r) {
      Integer q = floor_div(h(r, col), h(pivot, col));
      add_row_multiple(h, r, pivot, q);
      add_row_multiple(u, r, pivot, q);
    }
    out.pivot_columns.push_back(col);
    ++pivot;
  }
  out.rank = pivot;
  return out;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(d(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), 0};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t m = d.rows(), n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Integer v_abs = abs(d(i, j));
          if (!found || v_abs < best) {
            found = true;
            best = v_abs;
            pi = i;
            pj = j;
          }
        }
      if (!found) return out;
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = d(i, t) / d(t, t);
        add_row_multiple(d, i, t, q);
        add_row_multiple(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = d(t, j) / d(t, t);
        add_col_multiple(d, j, t, q);
        add_col_multiple(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every entry of the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row_multiple(d, t, i, Integer(-1));
            add_row_multiple(u, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    out.rank = t + 1;
  }
  return out;
}

std::optional<std::vector<Integer>> solve_integer_system(const IntMatrix& a,
                                                         const std::vector<Integer>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer_system: dimension mismatch");
  // x^T a^T = b^T. With h = u a^T and x^T = y^T u this is y^T h = b^T.
  HermiteForm hf = hermite_normal_form(a.transpose());
  const IntMatrix& h = hf.h;
  std::vector<Integer> y(h.rows());
  for (std::size_t k = 0; k < hf.rank; ++k) {
    std::size_t p = hf.pivot_columns[k];
    Integer rest = b[p];
    for (std::size_t l = 0; l < k; ++l) rest -= y[l] * h(l, p);
    if (rest % h(k, p) != 0) return std::nullopt;
    y[k] = rest / h(k, p);
  }
  for (std::size_t j = 0; j < h.cols(); ++j) {
    Integer s = 0;
    for (std::size_t k = 0; k < hf.rank; ++k) s += y[k] * h(k, j);
    if (s != b[j]) return std::nullopt;
  }
  std::vector<Integer> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < hf.rank; ++k) x[i] += y[k] * hf.u(k, i);
  return x;
}

std::vector<std::vector<Integer>> lattice_basis(const IntMatrix& a) {
  HermiteForm hf = hermite_normal_form(a);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t k = 0; k < hf.rank; ++k) basis.push_back(hf.h.row(k));
  return basis;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a) {
  // Rows of u sitting against zero rows of h = u a^T span the kernel.
  HermiteForm hf = hermite_normal_form(a.transpose());
  std::vector<std::vector<Integer>> rows;
  for (std::size_t k = hf.rank; k < hf.u.rows(); ++k) rows.push_back(hf.u.row(k));
  if (rows.empty()) return rows;
  return lattice_basis(IntMatrix::from_rows(a.cols(), rows));
}

template <class Space>
bool extends_to_lattice_basis(const std::vector<IntVector<Space>>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t n = vectors.front().rank();
  SmithForm s = smith_normal_form(IntMatrix::from_vectors(n, vectors));
  if (s.rank != vectors.size()) return false;
  for (const auto& f : s.invariant_factors())
    if (f != 1) return false;
  return true;
}

template bool extends_to_lattice_basis<NSpace>(const std::vector<LatticeVector>&);
template bool extends_to_lattice_basis<MSpace>(const std::vector<Weight>&);

}  // namespace toric
