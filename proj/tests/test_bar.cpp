#include "schur/bar.hpp"

#include <gtest/gtest.h>

#include "schur/families.hpp"
#include "schur/multiplier.hpp"
#include "schur/pc_structure.hpp"
#include "schur/perm.hpp"
#include "schur/todd_coxeter.hpp"

namespace schur {
namespace {

TEST(MulTable, CanonicalAndVerified) {
  MulTable t = multiplication_table(pc_cyclic(2, 1));
  EXPECT_EQ(t.n, 2);
  EXPECT_EQ(t.id, 0);
  EXPECT_EQ(t.at(1, 1), 0);

  // D8 from pc and from its regular permutation representation agree
  MulTable a = multiplication_table(pc_dihedral(8));
  auto tc = todd_coxeter(parse_presentation(
      "gens a,b; rels a^4=b^2=1, b^-1*a*b=a^-1;"));
  MulTable b = multiplication_table(regular_rep(tc));
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(bar_h2(a), bar_h2(b));

  MulTable e = multiplication_table(pc_e1(3));
  EXPECT_EQ(e.n, 27);
  // center recomputable from the table
  int central = 0;
  for (int x = 0; x < e.n; ++x) {
    bool ok = true;
    for (int y = 0; y < e.n && ok; ++y)
      if (e.at(x, y) != e.at(y, x)) ok = false;
    central += ok;
  }
  EXPECT_EQ(central, 3);
}

TEST(MulTable, CapEnforced) {
  EXPECT_THROW(multiplication_table(pc_dihedral(8), 4), capacity_error);
}

TEST(Boundary, OrderTwoDegenerate) {
  MulTable t = abelian_group_table({2});
  SparseIntMatrix d3 = boundary_matrix(t, 3);
  EXPECT_EQ(d3.nrows(), 1);
  EXPECT_EQ(d3.ncols(), 1);
  EXPECT_TRUE(d3.is_zero());
}

TEST(Boundary, ChainComplexIdentity) {
  for (const PcPresentation& g :
       {pc_quaternion8(), pc_dihedral(8), pc_cyclic(3, 1), pc_e1(3)}) {
    MulTable t = multiplication_table(g);
    SparseIntMatrix d2 = boundary_matrix(t, 2);
    SparseIntMatrix d3 = boundary_matrix(t, 3);
    EXPECT_TRUE(d2.multiply(d3).is_zero()) << g.name();
    // at most four entries per column of d3
    std::map<int, int> col_nnz;
    for (const auto& e : d3.entries()) ++col_nnz[e.col];
    for (const auto& [c, k] : col_nnz) EXPECT_LE(k, 4);
  }
}

TEST(Boundary, H1CrossCheck) {
  // cokernel of d2 is the abelianization
  for (const PcPresentation& g :
       {pc_quaternion8(), pc_dihedral(8), pc_e1(3), pc_cyclic(2, 2)}) {
    MulTable t = multiplication_table(g);
    auto c = cokernel_invariants(boundary_matrix(t, 2).transpose());
    EXPECT_EQ(c.free_rank, 0);
    EXPECT_EQ(c.invariants, abelianization(g)) << g.name();
  }
}

TEST(BarH2, SmallKnownValues) {
  EXPECT_TRUE(bar_h2(abelian_group_table({1})).trivial());
  EXPECT_EQ(bar_h2(multiplication_table(pc_dihedral(8))).str(), "[2]");
  EXPECT_EQ(bar_h2(abelian_group_table({2, 2})).str(), "[2]");
  EXPECT_TRUE(bar_h2(multiplication_table(pc_quaternion8())).trivial());
}

TEST(BarH2, CyclicGroupsAreTrivial) {
  for (int n = 2; n <= 16; ++n)
    EXPECT_TRUE(bar_h2(abelian_group_table({n})).trivial()) << n;
}

// every abelian group of order N as multisets of prime-power cyclic factors
void enumerate_abelian(long n, long from, std::vector<long>& cur,
                       std::vector<std::vector<long>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (long q = std::max(from, 2L); q <= n; ++q) {
    if (n % q != 0) continue;
    // q must be a prime power
    long base = 0;
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        base = d;
        break;
      }
    if (base == 0) base = q;
    long t = q;
    while (t > 1 && t % base == 0) t /= base;
    if (t != 1) continue;
    cur.push_back(q);
    enumerate_abelian(n / q, q, cur, out);
    cur.pop_back();
  }
}

TEST(BarH2, AbelianAgreement) {
  // all abelian groups of order <= 32
  std::vector<std::vector<long>> groups;
  for (long n = 2; n <= 32; ++n) {
    std::vector<long> cur;
    enumerate_abelian(n, 2, cur, groups);
  }
  // orders 2..32 give 54 abelian groups up to isomorphism
  EXPECT_EQ(groups.size(), 54u);
  for (const auto& orders : groups) {
    std::vector<Int> f;
    for (long d : orders) f.push_back(d);
    AbelianInvariants inv = AbelianInvariants::from_orders(f);
    EXPECT_EQ(bar_h2(abelian_group_table(orders)), abelian_multiplier(inv))
        << "group " << inv.str();
  }
}

TEST(BarH2, AgreesWithTailsNonAbelian) {
  for (const PcPresentation& g :
       {pc_dihedral(8), pc_quaternion8(), pc_dihedral(16), pc_e1(3),
        pc_e2(3)}) {
    EXPECT_EQ(bar_h2(multiplication_table(g)),
              multiplier_tails(g).invariants)
        << g.name();
  }
}

TEST(BarH2, ModFastPathCrossCheck) {
  for (const PcPresentation& g :
       {pc_dihedral(8), pc_quaternion8(), pc_e1(3), pc_cyclic(2, 3),
        pc_dihedral(16)}) {
    MulTable t = multiplication_table(g);
    EXPECT_EQ(bar_h2(t, BarOptions{.mod_fast_path = true}), bar_h2(t))
        << g.name();
  }
  MulTable ab = abelian_group_table({2, 4});
  EXPECT_EQ(bar_h2(ab, BarOptions{.mod_fast_path = true}), bar_h2(ab));
  // the mod path needs a prime-power order
  EXPECT_THROW(bar_h2(abelian_group_table({6}), BarOptions{.mod_fast_path = true}),
               structural_error);
}

}  // namespace
}  // namespace schur
