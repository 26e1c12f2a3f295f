#include "schur/pc_products.hpp"

#include <gtest/gtest.h>

#include "schur/families.hpp"
#include "schur/pc_structure.hpp"

namespace schur {
namespace {

TEST(DirectProduct, OrdersMultiply) {
  auto d8 = pc_dihedral(8);
  auto g = direct_product(d8, pc_elem_abelian(2, 3));
  EXPECT_EQ(pc_order(g), 64);
  EXPECT_TRUE(g.has_product_record());
  EXPECT_TRUE(g.product_left().same_presentation(d8));

  auto e1 = pc_e1(3);
  EXPECT_EQ(pc_order(direct_product(e1, pc_elem_abelian(3, 4))), 2187);

  // G x 1 is G up to the trivial block
  auto gx1 = direct_product(d8, pc_trivial(2));
  EXPECT_EQ(pc_order(gx1), 8);
  EXPECT_EQ(pc_fingerprint(gx1), pc_fingerprint(d8));
}

TEST(DirectProduct, PrimeMismatchRejected) {
  EXPECT_THROW(direct_product(pc_dihedral(8), pc_e1(3)), structural_error);
}

TEST(DirectProduct, StructureSplits) {
  auto g = direct_product(pc_quaternion8(), pc_elem_abelian(2, 2));
  EXPECT_EQ(center(g).order(), 8);           // Z(Q8) x Z2^2
  EXPECT_EQ(derived_subgroup(g).order(), 2);
  EXPECT_EQ(abelianization(g).str(), "[2,2,2,2]");
}

TEST(CentralProduct, E4Spec) {
  auto e4 = pc_e4(3);
  EXPECT_EQ(pc_order(e4), 81);             // p^2 * p^3 / p
  EXPECT_EQ(center(e4).order(), 9);        // brute-force center
  EXPECT_EQ(derived_subgroup(e4).order(), 3);
  EXPECT_EQ(pc_exponent(e4), 9);
  auto e45 = pc_e4(5);
  EXPECT_EQ(pc_order(e45), 625);
  EXPECT_EQ(center(e45).order(), 25);
}

TEST(CentralProduct, TrivialIdentificationIsDirectProduct) {
  auto a = pc_quaternion8();
  auto b = pc_cyclic(2, 1);
  auto cp = central_product(a, b, {});
  auto dp = direct_product(a, b);
  EXPECT_EQ(pc_order(cp), pc_order(dp));
  EXPECT_EQ(pc_fingerprint(cp), pc_fingerprint(dp));
}

TEST(CentralProduct, RejectsNonCentralIdentification) {
  // the rotation of D8 is not central
  EXPECT_THROW(central_product(pc_dihedral(8), pc_cyclic(2, 1),
                               {{Word::gen(1), Word::gen(0)}}),
               structural_error);
}

TEST(CentralProduct, RejectsOrderMismatch) {
  // identify the order-4 subgroup of Z4 with the order-2 center of Q8
  EXPECT_THROW(central_product(pc_cyclic(2, 2), pc_quaternion8(),
                               {{Word::gen(0), Word::gen(2)}}),
               structural_error);
}

TEST(Extraspecial, TypesAndSizes) {
  for (long p : {3L, 5L}) {
    auto plus = pc_extraspecial(p, 2, ExtraspecialType::plus);
    auto minus = pc_extraspecial(p, 2, ExtraspecialType::minus);
    EXPECT_EQ(pc_order(plus), int_pow(p, 5));
    EXPECT_EQ(pc_order(minus), int_pow(p, 5));
    EXPECT_EQ(center(plus).order(), p);
    EXPECT_EQ(derived_subgroup(plus).order(), p);
    EXPECT_EQ(pc_exponent(plus), p);
    EXPECT_EQ(pc_exponent(minus), p * p);
    EXPECT_NE(pc_fingerprint(plus), pc_fingerprint(minus));
  }
  // p = 2: D8 o D8 vs D8 o Q8
  auto plus2 = pc_extraspecial(2, 2, ExtraspecialType::plus);
  auto minus2 = pc_extraspecial(2, 2, ExtraspecialType::minus);
  EXPECT_EQ(pc_order(plus2), 32);
  EXPECT_EQ(pc_order(minus2), 32);
  EXPECT_EQ(center(plus2).order(), 2);
  EXPECT_NE(pc_fingerprint(plus2), pc_fingerprint(minus2));
  // m = 1 degenerates to the blocks themselves
  EXPECT_EQ(pc_fingerprint(pc_extraspecial(2, 1, ExtraspecialType::plus)),
            pc_fingerprint(pc_dihedral(8)));
}

TEST(Realization, RoundTripThroughModel) {
  // realize a known group from its own model and compare fingerprints
  auto g = pc_dihedral(16);
  PcGroupModel m(g);
  auto real = pc_realization(m, 2, "D16x");
  EXPECT_EQ(pc_order(real.pres), 16);
  EXPECT_EQ(pc_fingerprint(real.pres), pc_fingerprint(g));
  // normal forms invert the generator map
  for (int i = 0; i < real.pres.ngens(); ++i) {
    PcExps e = real.exps_of(real.pc_gens[i]);
    EXPECT_EQ(PcElement(real.pres, e),
              PcElement::generator(real.pres, i));
  }
}

}  // namespace
}  // namespace schur
