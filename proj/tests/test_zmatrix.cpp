#include "schur/zmatrix.hpp"

#include <gtest/gtest.h>

#include <random>

namespace schur {
namespace {

SparseIntMatrix dense_to_sparse(const DenseMat& d) {
  return SparseIntMatrix::from_dense(d);
}

// independent determinant by cofactor expansion (small matrices only)
Int cofactor_det(const DenseMat& a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int det = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    DenseMat minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Int term = a[0][j] * cofactor_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

DenseMat matmul(const DenseMat& a, const DenseMat& b) {
  size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  DenseMat c(m, std::vector<Int>(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

DenseMat random_dense(std::mt19937& rng, int maxdim, int lo, int hi,
                      double density = 1.0) {
  std::uniform_int_distribution<int> dim(0, maxdim);
  std::uniform_int_distribution<int> val(lo, hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int m = dim(rng), n = dim(rng);
  DenseMat a(m, std::vector<Int>(n, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng) <= density) a[i][j] = val(rng);
  return a;
}

TEST(Smith, Identity3) {
  SmithForm s = smith_normal_form(SparseIntMatrix::identity(3));
  ASSERT_EQ(s.rank, 3);
  EXPECT_EQ(s.diagonal, (std::vector<Int>{1, 1, 1}));
}

TEST(Smith, TwoByTwo) {
  SmithForm s = smith_normal_form(dense_to_sparse({{2, 4}, {6, 8}}));
  ASSERT_EQ(s.rank, 2);
  EXPECT_EQ(s.diagonal, (std::vector<Int>{2, 4}));
}

TEST(Smith, ZeroMatrix) {
  SmithForm s = smith_normal_form(SparseIntMatrix(3, 4));
  EXPECT_EQ(s.rank, 0);
  EXPECT_TRUE(s.diagonal.empty());
}

TEST(Smith, EmptyMatrix) {
  SmithForm s = smith_normal_form(SparseIntMatrix(0, 0));
  EXPECT_EQ(s.rank, 0);
}

TEST(Smith, IdempotentOnDiagonal) {
  SmithForm s = smith_normal_form(dense_to_sparse({{12, 4, 7}, {0, 5, -3}}));
  std::vector<std::tuple<int, int, Int>> trip;
  for (int i = 0; i < s.rank; ++i) trip.emplace_back(i, i, s.diagonal[i]);
  SmithForm again =
      smith_normal_form(SparseIntMatrix::from_triplets(2, 3, std::move(trip)));
  EXPECT_EQ(again.diagonal, s.diagonal);
}

TEST(Smith, RandomPropertySuite) {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 1000; ++iter) {
    DenseMat a = random_dense(rng, 12, -9, 9);
    SparseIntMatrix m = dense_to_sparse(a);
    SmithForm s = smith_normal_form(m, /*want_transforms=*/true);
    // divisibility chain, positive entries
    for (size_t i = 0; i < s.diagonal.size(); ++i) {
      EXPECT_GT(s.diagonal[i], 0);
      if (i) {
        EXPECT_EQ(s.diagonal[i] % s.diagonal[i - 1], 0);
      }
    }
    // U * A * V equals the diagonal embedding
    ASSERT_TRUE(s.U && s.V && s.Uinv && s.Vinv);
    DenseMat prod = matmul(matmul(*s.U, a), *s.V);
    for (size_t i = 0; i < prod.size(); ++i) {
      for (size_t j = 0; j < prod[i].size(); ++j) {
        Int want = (i == j && static_cast<int>(i) < s.rank) ? s.diagonal[i]
                                                            : Int(0);
        ASSERT_EQ(prod[i][j], want) << "at " << i << "," << j;
      }
    }
    // transforms are unimodular and the inverses really invert
    if (a.size() <= 8) {
      Int du = cofactor_det(*s.U);
      EXPECT_TRUE(du == 1 || du == -1);
    }
    if (!a.empty() && a[0].size() <= 8) {
      Int dv = cofactor_det(*s.V);
      EXPECT_TRUE(dv == 1 || dv == -1);
    }
    DenseMat uu = matmul(*s.U, *s.Uinv);
    DenseMat vv = matmul(*s.V, *s.Vinv);
    for (size_t i = 0; i < uu.size(); ++i)
      for (size_t j = 0; j < uu.size(); ++j)
        ASSERT_EQ(uu[i][j], i == j ? 1 : 0);
    for (size_t i = 0; i < vv.size(); ++i)
      for (size_t j = 0; j < vv.size(); ++j)
        ASSERT_EQ(vv[i][j], i == j ? 1 : 0);
  }
}

TEST(Smith, DiagonalProductMatchesDeterminant) {
  std::mt19937 rng(987);
  int checked = 0;
  while (checked < 60) {
    std::uniform_int_distribution<int> dim(1, 8);
    int n = dim(rng);
    std::uniform_int_distribution<int> val(-6, 6);
    DenseMat a(n, std::vector<Int>(n));
    for (auto& row : a)
      for (auto& x : row) x = val(rng);
    Int det = cofactor_det(a);
    if (det == 0) continue;
    ++checked;
    SmithForm s = smith_normal_form(dense_to_sparse(a));
    ASSERT_EQ(s.rank, n);
    Int prod = 1;
    for (const Int& d : s.diagonal) prod *= d;
    EXPECT_EQ(prod, abs(det));
  }
}

TEST(Smith, FirstInvariantIsGcdOfEntries) {
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 200; ++iter) {
    DenseMat a = random_dense(rng, 10, -20, 20, 0.5);
    SparseIntMatrix m = dense_to_sparse(a);
    SmithForm s = smith_normal_form(m);
    Int g = 0;
    for (const auto& e : m.entries()) g = int_gcd(g, e.value);
    if (s.rank > 0)
      EXPECT_EQ(s.diagonal[0], g);
    else
      EXPECT_EQ(g, 0);
  }
}

TEST(Cokernel, SingleRelation) {
  auto c = cokernel_invariants(dense_to_sparse({{5}}));
  EXPECT_EQ(c.free_rank, 0);
  EXPECT_EQ(c.invariants.str(), "[5]");
}

TEST(Cokernel, ZeroMatrixTwoCols) {
  auto c = cokernel_invariants(SparseIntMatrix(2, 2));
  EXPECT_EQ(c.free_rank, 2);
  EXPECT_TRUE(c.invariants.trivial());
}

// Z2 x Z4 presented with a redundant relation; oracle: brute-force quotient
// of (Z/8)^2 by the image of the row lattice.
TEST(Cokernel, RedundantRelations) {
  auto c = cokernel_invariants(dense_to_sparse({{2, 0}, {0, 4}, {2, 4}}));
  EXPECT_EQ(c.free_rank, 0);
  EXPECT_EQ(c.invariants.str(), "[2,4]");

  // independent reconstruction: enumerate (Z/8)^2 and merge cosets of the
  // subgroup generated by the rows (8Z^2 lies inside the row lattice)
  std::vector<int> parent(64);
  for (int i = 0; i < 64; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto enc = [](int x, int y) { return ((x % 8 + 8) % 8) * 8 + ((y % 8 + 8) % 8); };
  const int rows[3][2] = {{2, 0}, {0, 4}, {2, 4}};
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (const auto& r : rows) unite(enc(x, y), enc(x + r[0], y + r[1]));
  std::set<int> reps;
  for (int i = 0; i < 64; ++i) reps.insert(find(i));
  EXPECT_EQ(reps.size(), 8u);  // |Z2 x Z4|
}

TEST(SmithMod, MatchesExactValuations) {
  std::mt19937 rng(31337);
  for (long p : {2L, 3L, 5L}) {
    for (int iter = 0; iter < 60; ++iter) {
      DenseMat a = random_dense(rng, 8, -9, 9, 0.7);
      SparseIntMatrix m = dense_to_sparse(a);
      SmithForm s = smith_normal_form(m);
      long maxval = 0;
      for (const Int& d : s.diagonal) {
        long v = 0;
        Int x = d;
        while (x % p == 0) {
          x /= p;
          ++v;
        }
        maxval = std::max(maxval, v);
      }
      long E = maxval + 2;
      ModSmithDiagonal md = smith_diagonal_mod_p(m, p, E);
      ASSERT_EQ(static_cast<int>(md.exponents.size()), s.rank);
      EXPECT_EQ(md.columns_without_pivot, m.ncols() - s.rank);
      std::vector<long> expected;
      for (const Int& d : s.diagonal) {
        long v = 0;
        Int x = d;
        while (x % p == 0) {
          x /= p;
          ++v;
        }
        expected.push_back(v);
      }
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(md.exponents, expected);
    }
  }
}

TEST(Sparse, TransposeAndMultiply) {
  auto a = dense_to_sparse({{1, 2}, {3, 4}, {5, 6}});
  auto at = a.transpose();
  EXPECT_EQ(at.nrows(), 2);
  EXPECT_EQ(at.ncols(), 3);
  EXPECT_EQ(at.at(1, 2), 6);
  auto prod = at.multiply(a);  // 2x2 = A^T A
  EXPECT_EQ(prod.at(0, 0), 35);
  EXPECT_EQ(prod.at(0, 1), 44);
  EXPECT_EQ(prod.at(1, 1), 56);
}

TEST(Sparse, DuplicateTripletsAccumulate) {
  auto a = SparseIntMatrix::from_triplets(
      2, 2, {{0, 0, Int(2)}, {0, 0, Int(-2)}, {1, 1, Int(3)}});
  EXPECT_EQ(a.nnz(), 1u);
  EXPECT_EQ(a.at(1, 1), 3);
}

TEST(Sparse, IndexValidation) {
  EXPECT_THROW(SparseIntMatrix::from_triplets(1, 1, {{0, 1, Int(1)}}),
               structural_error);
}

}  // namespace
}  // namespace schur
