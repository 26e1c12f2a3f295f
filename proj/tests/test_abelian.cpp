#include "schur/abelian.hpp"

#include <gtest/gtest.h>

#include <random>

#include "schur/zmatrix.hpp"

namespace schur {
namespace {

AbelianInvariants inv(std::vector<long> v) {
  std::vector<Int> f;
  for (long x : v) f.push_back(x);
  return AbelianInvariants::from_orders(std::move(f));
}

// independent route: present (+)_i Z_{a_i} (x) (+)_j Z_{b_j} by generators
// x_ij with relations a_i x_ij = b_j x_ij = 0 and read the cokernel.
AbelianInvariants tensor_by_presentation(const AbelianInvariants& a,
                                         const AbelianInvariants& b) {
  int na = static_cast<int>(a.rank()), nb = static_cast<int>(b.rank());
  std::vector<std::tuple<int, int, Int>> trip;
  int row = 0;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      trip.emplace_back(row++, i * nb + j, a.factors()[i]);
      trip.emplace_back(row++, i * nb + j, b.factors()[j]);
    }
  auto m = SparseIntMatrix::from_triplets(row, na * nb, std::move(trip));
  auto c = cokernel_invariants(m);
  EXPECT_EQ(c.free_rank, 0);
  return c.invariants;
}

TEST(Abelian, NormalizeChain) {
  EXPECT_EQ(inv({4, 2}).str(), "[2,4]");
  EXPECT_EQ(inv({6, 4}).str(), "[2,12]");
  EXPECT_EQ(inv({1, 1, 3}).str(), "[3]");
  EXPECT_EQ(inv({}).str(), "1");
  EXPECT_EQ(inv({2, 6, 4, 12}).str(), "[2,2,12,12]");
}

TEST(Abelian, OrderAndExponent) {
  auto a = inv({2, 4, 8});
  EXPECT_EQ(a.order(), 64);
  EXPECT_EQ(a.p_exponent(2), 6);
  EXPECT_TRUE(a.is_p_group(2));
  EXPECT_FALSE(a.is_elementary(2));
  EXPECT_TRUE(inv({3, 3}).is_elementary(3));
  EXPECT_THROW(inv({6}).p_exponent(2), internal_error);
}

TEST(Tensor, KnownValues) {
  EXPECT_EQ(abelian_tensor(inv({2}), inv({4})).str(), "[2]");
  EXPECT_EQ(abelian_tensor(inv({}), inv({2, 4, 8})).str(), "1");
  EXPECT_EQ(abelian_tensor(inv({3, 3}), inv({3, 3})).str(), "[3,3,3,3]");
}

TEST(Tensor, AgainstPresentationOracle) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> rank(0, 3);
  std::uniform_int_distribution<int> choice(0, 5);
  const long pool[] = {2, 3, 4, 5, 8, 9};
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Int> av, bv;
    for (int i = rank(rng); i > 0; --i) av.push_back(pool[choice(rng)]);
    for (int i = rank(rng); i > 0; --i) bv.push_back(pool[choice(rng)]);
    auto a = AbelianInvariants::from_orders(av);
    auto b = AbelianInvariants::from_orders(bv);
    EXPECT_EQ(abelian_tensor(a, b), tensor_by_presentation(a, b))
        << a.str() << " (x) " << b.str();
  }
}

TEST(Tensor, CommutativeAssociative) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> rank(0, 3);
  std::uniform_int_distribution<int> choice(0, 5);
  const long pool[] = {2, 3, 4, 6, 9, 12};
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Int> av, bv, cv;
    for (int i = rank(rng); i > 0; --i) av.push_back(pool[choice(rng)]);
    for (int i = rank(rng); i > 0; --i) bv.push_back(pool[choice(rng)]);
    for (int i = rank(rng); i > 0; --i) cv.push_back(pool[choice(rng)]);
    auto a = AbelianInvariants::from_orders(av);
    auto b = AbelianInvariants::from_orders(bv);
    auto c = AbelianInvariants::from_orders(cv);
    EXPECT_EQ(abelian_tensor(a, b), abelian_tensor(b, a));
    EXPECT_EQ(abelian_tensor(abelian_tensor(a, b), c),
              abelian_tensor(a, abelian_tensor(b, c)));
  }
}

TEST(Abelian, RejectsNonPositiveOrders) {
  EXPECT_THROW(AbelianInvariants::from_orders({Int(0)}), structural_error);
  EXPECT_THROW(AbelianInvariants::from_orders({Int(-3)}), structural_error);
}

}  // namespace
}  // namespace schur
