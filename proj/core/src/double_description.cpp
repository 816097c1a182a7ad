#include "double_description.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/lattice.hpp"
#include "toric/subspace.hpp"

namespace toric::detail {

Integer dot(const IntRow& a, const IntRow& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntRow make_primitive(IntRow v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

std::size_t row_rank(std::size_t cols, const std::vector<IntRow>& rows) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(cols, rows));
}

IntRow project_off(const IntRow& v, const std::vector<IntRow>& basis) {
  if (basis.empty()) return make_primitive(v);
  // v - B^T (B B^T)^{-1} B v, solved in exact rationals.
  const std::size_t k = basis.size();
  std::vector<RationalVector> gram(k, RationalVector(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
    gram[i][k] = Rational(dot(basis[i], v));
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && gram[p][c] == 0) ++p;
    if (p == k) throw std::logic_error("project_off: dependent basis");
    std::swap(gram[p], gram[c]);
    Rational inv = 1 / gram[c][c];
    for (auto& x : gram[c]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || gram[r][c] == 0) continue;
      Rational f = gram[r][c];
      for (std::size_t j = c; j <= k; ++j) gram[r][j] -= f * gram[c][j];
    }
  }
  RationalVector w = RationalSubspace::to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[j] -= gram[i][k] * Rational(basis[i][j]);
  bool nonzero = std::any_of(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
  if (!nonzero) return {};
  return clear_denominators(w);
}

GeneratorDescription solve_inequalities(std::size_t rank,
                                        const std::vector<IntRow>& inequalities) {
  GeneratorDescription g;
  for (std::size_t i = 0; i < rank; ++i) {
    IntRow e(rank);
    e[i] = 1;
    g.lineality.push_back(std::move(e));
  }
  std::vector<IntRow> processed;
  for (const auto& a : inequalities) {
    if (a.size() != rank) throw std::invalid_argument("inequality length mismatch");
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; })) continue;
    processed.push_back(a);

    auto lin = std::find_if(g.lineality.begin(), g.lineality.end(),
                            [&](const IntRow& l) { return dot(a, l) != 0; });
    if (lin != g.lineality.end()) {
      // A lineality direction leaves the hyperplane: it becomes a ray and
      // everything else is projected into a^perp along it.
      IntRow l = *lin;
      g.lineality.erase(lin);
      Integer s = dot(a, l);
      if (s < 0) {
        for (auto& c : l) c = -c;
        s = -s;
      }
      for (auto& other : g.lineality) {
        Integer t = dot(a, other);
        for (std::size_t j = 0; j < rank; ++j) other[j] = s * other[j] - t * l[j];
        other = make_primitive(std::move(other));
      }
      for (auto& r : g.rays) {
        Integer t = dot(a, r);
        for (std::size_t j = 0; j < rank; ++j) r[j] = s * r[j] - t * l[j];
        r = make_primitive(std::move(r));
      }
      g.rays.push_back(make_primitive(std::move(l)));
      continue;
    }

    std::vector<IntRow> pos, neg, next;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : g.rays) {
      Integer t = dot(a, r);
      if (t > 0) {
        pos.push_back(r);
        pos_val.push_back(t);
      } else if (t < 0) {
        neg.push_back(r);
        neg_val.push_back(t);
      } else {
        next.push_back(r);
      }
    }
    if (neg.empty()) continue;
    const std::size_t full_rank = row_rank(rank, processed);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t k = 0; k < neg.size(); ++k) {
        IntRow c(rank);
        for (std::size_t j = 0; j < rank; ++j) c[j] = pos_val[i] * neg[k][j] - neg_val[k] * pos[i][j];
        c = make_primitive(std::move(c));
        std::vector<IntRow> tight;
        for (const auto& q : processed)
          if (dot(q, c) == 0) tight.push_back(q);
        if (row_rank(rank, tight) + 1 != full_rank) continue;
        if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(std::move(c));
      }
    }
    next.insert(next.end(), pos.begin(), pos.end());
    g.rays = std::move(next);
  }
  return g;
}

}  // namespace toric::detail
