#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "random.hpp"
#include "toric/normal_form.hpp"
#include "toric/subspace.hpp"

namespace toric {
namespace {

bool is_row_hermite(const HermiteForm& f) {
  const IntMatrix& h = f.h;
  for (std::size_t k = 0; k < f.rank; ++k) {
    std::size_t p = f.pivot_columns[k];
    if (h(k, p) <= 0) return false;
    for (std::size_t j = 0; j < p; ++j)
      if (h(k, j) != 0) return false;
    for (std::size_t i = k + 1; i < h.rows(); ++i)
      if (h(i, p) != 0) return false;
    for (std::size_t i = 0; i < k; ++i)
      if (h(i, p) < 0 || h(i, p) >= h(k, p)) return false;
    if (k > 0 && p <= f.pivot_columns[k - 1]) return false;
  }
  for (std::size_t i = f.rank; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) return false;
  return true;
}

bool is_smith_diagonal(const SmithForm& s) {
  const IntMatrix& d = s.d;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (i < s.rank && d(i, i) <= 0) return false;
    if (i >= s.rank && d(i, i) != 0) return false;
    if (i + 1 < s.rank && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(LatticeVector{2, 4, 6}), (LatticeVector{1, 2, 3}));
  EXPECT_EQ(primitive(LatticeVector{1, 0}), (LatticeVector{1, 0}));
  EXPECT_EQ(primitive(LatticeVector{-3, 6}), (LatticeVector{-1, 2}));
}

TEST(Primitive, ZeroVectorIsAnError) {
  try {
    primitive(LatticeVector{0, 0});
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "zero vector has no primitive representative");
  }
}

TEST(Primitive, IdempotentAndScaleInvariant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto v = testing::random_vector<NSpace>(rng, 4, 30);
    if (v.is_zero()) continue;
    auto p = primitive(v);
    EXPECT_EQ(primitive(p), p);
    EXPECT_EQ(content(p), 1);
    Integer k = uniform_integer(rng, 1, 50);
    EXPECT_EQ(primitive(k * v), p);
  }
}

TEST(Pairing, RankMismatchThrows) {
  EXPECT_THROW(pairing(Weight{1, 2}, LatticeVector{1, 2, 3}), std::invalid_argument);
  EXPECT_EQ(pairing(Weight{1, -2}, LatticeVector{3, 5}), -7);
}

TEST(Hermite, Identity) {
  auto f = hermite_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(f.h, IntMatrix::identity(3));
  EXPECT_EQ(f.u, IntMatrix::identity(3));
}

TEST(Hermite, ZeroMatrix) {
  auto f = hermite_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(f.h, IntMatrix(2, 3));
  EXPECT_EQ(f.u, IntMatrix::identity(2));
  EXPECT_EQ(f.rank, 0u);
}

TEST(Hermite, TwoByTwo) {
  IntMatrix a{{2, 4}, {1, 3}};
  auto f = hermite_normal_form(a);
  EXPECT_EQ(f.h, f.u * a);
  EXPECT_EQ(abs(oracle::leibniz_determinant(f.u)), 1);
  EXPECT_EQ(f.h(1, 0), 0);
  EXPECT_TRUE(is_row_hermite(f));
  // det a = 2 and the row lattice has index 2: H = [[1,1],[0,2]].
  EXPECT_EQ(f.h, (IntMatrix{{1, 1}, {0, 2}}));
}

TEST(Hermite, RandomIdentities) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto rows = static_cast<std::size_t>(uniform_integer(rng, 1, 6));
    auto cols = static_cast<std::size_t>(uniform_integer(rng, 1, 6));
    IntMatrix a = testing::random_matrix(rng, rows, cols, 20);
    auto f = hermite_normal_form(a);
    ASSERT_EQ(f.h, f.u * a);
    ASSERT_EQ(abs(oracle::leibniz_determinant(f.u)), 1);
    ASSERT_TRUE(is_row_hermite(f)) << a;
  }
}

TEST(Smith, Examples) {
  const IntMatrix diag23{{2, 0}, {0, 3}};
  auto s = smith_normal_form(diag23);
  EXPECT_EQ(s.d, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(s.d, s.u * diag23 * s.v);

  auto id = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(id.d, IntMatrix::identity(3));
  EXPECT_EQ(id.u, IntMatrix::identity(3));
  EXPECT_EQ(id.v, IntMatrix::identity(3));

  auto t = smith_normal_form(IntMatrix{{1, 0}, {1, 2}});
  EXPECT_EQ(t.invariant_factors(), (std::vector<Integer>{1, 2}));
}

TEST(Smith, RandomIdentities) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto rows = static_cast<std::size_t>(uniform_integer(rng, 1, 6));
    auto cols = static_cast<std::size_t>(uniform_integer(rng, 1, 6));
    IntMatrix a = testing::random_matrix(rng, rows, cols, 20);
    auto s = smith_normal_form(a);
    ASSERT_EQ(s.d, s.u * a * s.v);
    ASSERT_EQ(abs(oracle::leibniz_determinant(s.u)), 1);
    ASSERT_EQ(abs(oracle::leibniz_determinant(s.v)), 1);
    ASSERT_TRUE(is_smith_diagonal(s)) << a;
    if (rows == cols) {
      Integer prod = 1;
      for (const auto& f : s.invariant_factors()) prod *= f;
      if (s.rank < rows) prod = 0;
      ASSERT_EQ(prod, abs(oracle::leibniz_determinant(a))) << a;
    }
  }
}

TEST(SolveIntegerSystem, Examples) {
  auto x = solve_integer_system(IntMatrix{{1, 0}, {0, 1}}, {1, 0});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (std::vector<Integer>{1, 0}));
  EXPECT_FALSE(solve_integer_system(IntMatrix{{1, 0}, {1, 2}}, {1, 0}));
  EXPECT_FALSE(solve_integer_system(IntMatrix{{1, 0}, {1, 2}}, {0, 1}));
}

TEST(SolveIntegerSystem, DimensionMismatch) {
  EXPECT_THROW(solve_integer_system(IntMatrix{{1, 0}}, {1, 0}), std::invalid_argument);
}

TEST(SolveIntegerSystem, UnderdeterminedAndInconsistent) {
  // 2x + 4y = 6 has integer solutions; 2x + 4y = 3 does not.
  auto x = solve_integer_system(IntMatrix{{2, 4}}, {6});
  ASSERT_TRUE(x);
  EXPECT_EQ(2 * (*x)[0] + 4 * (*x)[1], 6);
  EXPECT_FALSE(solve_integer_system(IntMatrix{{2, 4}}, {3}));
  // x = 1 and x = 2 together are inconsistent.
  EXPECT_FALSE(solve_integer_system(IntMatrix{{1}, {1}}, {1, 2}));
}

TEST(SolveIntegerSystem, AgreesWithRationalCramer) {
  std::mt19937_64 rng(13);
  int solved = 0, unsolvable = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto n = static_cast<std::size_t>(uniform_integer(rng, 1, 4));
    IntMatrix a = testing::random_matrix(rng, n, n, 5);
    std::vector<Integer> b(n);
    for (auto& x : b) x = uniform_integer(rng, -5, 5);
    auto x = solve_integer_system(a, b);
    if (x) {
      ASSERT_EQ(a * *x, b);
      ++solved;
    }
    std::vector<oracle::Vec> columns;
    for (std::size_t c = 0; c < n; ++c) columns.push_back(oracle::to_ll(a.column(c)));
    auto cr = oracle::cramer(columns, oracle::to_ll(b), n);
    if (!cr) continue;  // singular: no rational cross-check
    bool integral = true;
    for (auto num : cr->numerators)
      if (num % cr->denominator != 0) integral = false;
    ASSERT_EQ(integral, x.has_value()) << a;
    if (!x) ++unsolvable;
  }
  EXPECT_GT(solved, 0);
  EXPECT_GT(unsolvable, 0);
}

TEST(IntegerKernel, SaturatedBasis) {
  // Kernel of (1,2): Z·(2,-1), already in Hermite form.
  auto k = integer_kernel(IntMatrix{{1, 2}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<Integer>{2, -1}));
  // Kernel of (2,4) is the same saturated lattice.
  EXPECT_EQ(integer_kernel(IntMatrix{{2, 4}}), k);
  EXPECT_TRUE(integer_kernel(IntMatrix::identity(3)).empty());
}

TEST(ExtendsToLatticeBasis, Examples) {
  EXPECT_TRUE(extends_to_lattice_basis(std::vector<LatticeVector>{{1, 0}, {0, 1}}));
  EXPECT_FALSE(extends_to_lattice_basis(std::vector<LatticeVector>{{1, 0}, {1, 2}}));
  EXPECT_TRUE(extends_to_lattice_basis(std::vector<LatticeVector>{{1, 0, 0}}));
  EXPECT_FALSE(extends_to_lattice_basis(std::vector<LatticeVector>{{2, 0, 0}}));
  EXPECT_FALSE(extends_to_lattice_basis(std::vector<LatticeVector>{{1, 0}, {0, 1}, {1, 1}}));
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = static_cast<std::size_t>(uniform_integer(rng, 1, 5));
    IntMatrix a = testing::random_matrix(rng, n, n, 9);
    ASSERT_EQ(determinant(a), oracle::leibniz_determinant(a)) << a;
  }
}

// --- rational subspaces -----------------------------------------------------

RationalSubspace span2(std::initializer_list<LatticeVector> vs) {
  return RationalSubspace::span(2, std::vector<LatticeVector>(vs));
}

TEST(Subspace, Examples) {
  EXPECT_TRUE(span2({{1, 0}}).intersection(span2({{0, 1}})).is_zero());
  EXPECT_TRUE(span2({{1, 0}}).sum(span2({{1, 2}})).is_full());
  auto c = span2({{1, 0}}).complement();
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_TRUE(c.intersection(span2({{1, 0}})).is_zero());
  EXPECT_TRUE(c.sum(span2({{1, 0}})).is_full());
}

TEST(Subspace, RankMismatchThrows) {
  EXPECT_THROW(RationalSubspace::zero(2).sum(RationalSubspace::zero(3)), std::invalid_argument);
  EXPECT_THROW(RationalSubspace::full(2).intersection(RationalSubspace::full(3)),
               std::invalid_argument);
}

TEST(Subspace, MembershipAndIntegerBasis) {
  auto s = RationalSubspace::span(3, std::vector<LatticeVector>{{2, 4, 6}});
  EXPECT_TRUE(s.contains(LatticeVector{-1, -2, -3}));
  EXPECT_FALSE(s.contains(LatticeVector{1, 2, 4}));
  EXPECT_EQ(s.integer_basis(), (std::vector<std::vector<Integer>>{{1, 2, 3}}));
}

TEST(Subspace, CanonicalFormAndDimensionFormula) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    auto n = static_cast<std::size_t>(uniform_integer(rng, 1, 5));
    auto draw = [&](std::size_t count) {
      std::vector<LatticeVector> vs;
      for (std::size_t i = 0; i < count; ++i) vs.push_back(testing::random_vector<NSpace>(rng, n, 3));
      return vs;
    };
    auto va = draw(static_cast<std::size_t>(uniform_integer(rng, 0, 4)));
    auto vb = draw(static_cast<std::size_t>(uniform_integer(rng, 0, 4)));
    auto a = RationalSubspace::span(n, va);
    auto b = RationalSubspace::span(n, vb);

    // Same vectors in another order and with rescaling give the same form.
    auto shuffled = va;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& v : shuffled) v = Integer(uniform_integer(rng, 1, 4)) * v;
    ASSERT_EQ(RationalSubspace::span(n, shuffled), a);

    ASSERT_EQ(a.dim() + b.dim(), a.sum(b).dim() + a.intersection(b).dim());
    ASSERT_TRUE(a.intersection(b).is_subspace_of(a));
    ASSERT_TRUE(a.intersection(b).is_subspace_of(b));
    auto c = a.complement();
    ASSERT_TRUE(a.sum(c).is_full());
    ASSERT_TRUE(a.intersection(c).is_zero());
    ASSERT_EQ(a.annihilator().dim() + a.dim(), n);
    ASSERT_EQ(oracle::rank_of(oracle::to_ll(va), n), a.dim());
  }
}

}  // namespace
}  // namespace toric
