#include "schur/pc.hpp"

#include <gtest/gtest.h>

#include <map>

#include "schur/families.hpp"
#include "schur/pc_io.hpp"
#include "schur/pc_structure.hpp"

namespace schur {
namespace {

// D8 presented on two reflections: g1^2 = g2^2 = g3^2 = 1, [g2,g1] = g3
// central.
PcPresentation d8_reflections() {
  auto p = PcPresentation::trivial_relations(2, 3, "D8r");
  return p.with_comm(1, 0, Word::gen(2));
}

// Z4 as a pc group: g1^2 = g2, g2^2 = 1.
PcPresentation z4_pc() {
  auto p = PcPresentation::trivial_relations(2, 2, "Z4");
  return p.with_power(0, Word::gen(1));
}

// tiny permutation arithmetic used as the independent oracle for collection
using P4 = std::array<int, 4>;
P4 pcomp(const P4& a, const P4& b) {  // x^(ab) = (x^a)^b
  P4 r{};
  for (int i = 0; i < 4; ++i) r[i] = b[a[i]];
  return r;
}

TEST(Collect, D8ReflectionOracle) {
  PcPresentation d8 = d8_reflections();
  // reflections of the square across a diagonal and an edge axis; their
  // commutator is the central rotation by pi
  P4 s1{0, 3, 2, 1}, s2{1, 0, 3, 2};
  P4 z = pcomp(pcomp(s1, s2), pcomp(s1, s2));  // (s1 s2)^2 = [s2, s1]
  // presentation says g2 * g1 = g1 * g2 * g3; check in the permutation model
  EXPECT_EQ(pcomp(s2, s1), pcomp(pcomp(s1, s2), z));
  PcElement r = collect(d8, Word::gen(1) * Word::gen(0));
  EXPECT_EQ(r.exponents()[0], 1);
  EXPECT_EQ(r.exponents()[1], 1);
  EXPECT_EQ(r.exponents()[2], 1);

  // full multiplication table matches the permutation model under the
  // correspondence (e1,e2,e3) -> s1^e1 s2^e2 z^e3
  auto to_perm = [&](const PcExps& e) {
    P4 x{0, 1, 2, 3};
    if (e[0]) x = pcomp(x, s1);
    if (e[1]) x = pcomp(x, s2);
    if (e[2]) x = pcomp(x, z);
    return x;
  };
  PcGroupModel m(d8);
  auto elems = m.enumerate(100);
  ASSERT_EQ(elems.size(), 8u);
  std::map<P4, PcExps> back;
  for (const auto& e : elems) back[to_perm(e)] = e;
  ASSERT_EQ(back.size(), 8u);  // faithful
  for (const auto& a : elems)
    for (const auto& b : elems)
      EXPECT_EQ(m.multiply(a, b), back.at(pcomp(to_perm(a), to_perm(b))));
}

TEST(Collect, EmptyWordIsIdentity) {
  PcPresentation d8 = d8_reflections();
  EXPECT_TRUE(collect(d8, Word::one()).is_identity());
}

TEST(Collect, Z4CrossCheckIntegers) {
  PcPresentation z4 = z4_pc();
  // g1 = 1, g2 = 2 in Z/4; g1^3 = 3 = 1 + 2
  PcElement r = collect(z4, Word::gen(0, 3));
  EXPECT_EQ(r.exponents()[0], 1);
  EXPECT_EQ(r.exponents()[1], 1);
  PcGroupModel m(z4);
  auto to_int = [](const PcExps& e) { return (e[0] * 1 + e[1] * 2) % 4; };
  for (const auto& a : m.enumerate(10))
    for (const auto& b : m.enumerate(10))
      EXPECT_EQ(to_int(m.multiply(a, b)), (to_int(a) + to_int(b)) % 4);
}

TEST(Collect, NegativeExponents) {
  PcPresentation z4 = z4_pc();
  EXPECT_TRUE(collect(z4, Word::gen(0, -1) * Word::gen(0)).is_identity());
  PcElement x = collect(z4, Word::gen(0, -1));
  EXPECT_EQ(x, collect(z4, Word::gen(0, 3)));
  PcPresentation q8 = pc_quaternion8();
  PcElement a = PcElement::generator(q8, 0);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.inverse(), a.pow(-1));
  EXPECT_EQ(a.order(), 4);
}

TEST(Collect, RejectsBadIndices) {
  PcPresentation z4 = z4_pc();
  EXPECT_THROW(collect(z4, Word::gen(5)), structural_error);
}

TEST(Collect, HugeExponents) {
  PcPresentation z4 = z4_pc();
  // 10^15 mod 4 == 0
  EXPECT_TRUE(collect(z4, Word::gen(0, 1'000'000'000'000'000L)).is_identity());
  EXPECT_EQ(collect(z4, Word::gen(0, 1'000'000'000'000'001L)),
            collect(z4, Word::gen(0)));
  PcPresentation q8 = pc_quaternion8();
  EXPECT_EQ(collect(q8, Word::gen(0, 123'456'789)),
            collect(q8, Word::gen(0, 123'456'789 % 4)));
}

TEST(Consistency, D8True) {
  EXPECT_TRUE(consistency_check(d8_reflections()).consistent);
}

TEST(Consistency, ForcedCollapseDetected) {
  // g1^2 = g2, g2^2 = g3, g3^2 = 1, [g2,g1] = g3: the overlap g1 * g1^2
  // vs g1^2 * g1 forces g3 = 1
  auto p = PcPresentation::trivial_relations(2, 3, "bad");
  p = p.with_power(0, Word::gen(1));
  p = p.with_power(1, Word::gen(2));
  p = p.with_comm(1, 0, Word::gen(2));
  ConsistencyResult r = consistency_check(p);
  ASSERT_FALSE(r.consistent);
  ASSERT_FALSE(r.violations.empty());
  // the violating sides differ exactly by the central g3
  EXPECT_THROW(pc_order(p), structural_error);
}

TEST(Consistency, EmptyPresentation) {
  EXPECT_TRUE(consistency_check(PcPresentation::trivial_relations(2, 0))
                  .consistent);
  EXPECT_EQ(pc_order(PcPresentation::trivial_relations(2, 0)), 1);
}

TEST(Consistency, ExhaustiveAssociativityOracle) {
  // collected multiplication tables are associative with unique identity and
  // inverses (exhaustive for small orders)
  for (const PcPresentation& pres :
       {d8_reflections(), pc_quaternion8(), pc_dihedral(16), pc_e1(3),
        pc_e2(3), pc_cyclic(2, 3)}) {
    PcGroupModel m(pres);
    auto elems = m.enumerate(256);
    int n = static_cast<int>(elems.size());
    std::map<PcExps, int> idx;
    for (int i = 0; i < n; ++i) idx[elems[i]] = i;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mul[i][j] = idx.at(m.multiply(elems[i], elems[j]));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          ASSERT_EQ(mul[mul[a][b]][c], mul[a][mul[b][c]]);
    int id = idx.at(m.identity());
    for (int a = 0; a < n; ++a) {
      ASSERT_EQ(mul[a][id], a);
      ASSERT_EQ(mul[id][a], a);
      int ninv = 0;
      for (int b = 0; b < n; ++b)
        if (mul[a][b] == id && mul[b][a] == id) ++ninv;
      ASSERT_EQ(ninv, 1);
    }
  }
}

TEST(Structure, Orders) {
  EXPECT_EQ(pc_order(d8_reflections()), 8);
  EXPECT_EQ(pc_order(PcPresentation::trivial_relations(5, 0)), 1);
  EXPECT_EQ(pc_order(pc_dihedral(16)), 16);
}

TEST(Structure, Center) {
  auto whole = center(pc_elem_abelian(3, 2));
  EXPECT_EQ(whole.order(), 9);
  EXPECT_EQ(center(pc_e1(3)).order(), 3);
  EXPECT_EQ(center(pc_dihedral(16)).order(), 2);
}

TEST(Structure, DerivedSubgroup) {
  EXPECT_EQ(derived_subgroup(pc_elem_abelian(5, 2)).order(), 1);
  EXPECT_EQ(derived_subgroup(pc_quaternion8()).order(), 2);
  // brute-force oracle for Q8: commutators in the model
  PcGroupModel m(pc_quaternion8());
  auto elems = m.enumerate(10);
  std::set<PcExps> comms;
  for (const auto& a : elems)
    for (const auto& b : elems)
      comms.insert(m.multiply(m.inverse(a),
                              m.multiply(m.inverse(b), m.multiply(a, b))));
  EXPECT_EQ(comms.size(), 2u);
}

TEST(Structure, Abelianization) {
  EXPECT_EQ(abelianization(z4_pc()).str(), "[4]");
  EXPECT_EQ(abelianization(pc_quaternion8()).str(), "[2,2]");
  EXPECT_EQ(abelianization(pc_e4(3)).str(), "[3,3,3]");
  // defining invariants of an abelian pc group come back unchanged
  auto a = direct_product(pc_cyclic(2, 2), pc_elem_abelian(2, 2));
  EXPECT_EQ(abelianization(a).str(), "[2,2,4]");
}

TEST(Structure, Exponent) {
  EXPECT_EQ(pc_exponent(pc_elem_abelian(3, 2)), 3);
  EXPECT_EQ(pc_exponent(pc_e2(3)), 9);
  EXPECT_EQ(pc_exponent(pc_dihedral(16)), 8);
}

TEST(Structure, FingerprintInvariance) {
  // two different pc encodings of D8 (reflection pair vs rotation chain)
  Fingerprint a = pc_fingerprint(d8_reflections());
  Fingerprint b = pc_fingerprint(pc_dihedral(8));
  EXPECT_EQ(a, b);
  EXPECT_NE(pc_fingerprint(pc_quaternion8()), a);  // element orders differ
  EXPECT_NE(pc_fingerprint(pc_e1(3)), pc_fingerprint(pc_e2(3)));
  // relabeled E1: [g2,g1] = g3^2 is an isomorphic encoding
  auto e1b = PcPresentation::trivial_relations(3, 3, "E1b")
                 .with_comm(1, 0, Word::gen(2, 2));
  EXPECT_EQ(pc_fingerprint(e1b), pc_fingerprint(pc_e1(3)));
  EXPECT_EQ(center(e1b).order(), center(pc_e1(3)).order());
  EXPECT_EQ(derived_subgroup(e1b).order(),
            derived_subgroup(pc_e1(3)).order());
}

TEST(Structure, SubgroupMaterializationVerifiesClosure) {
  PcPresentation q8 = pc_quaternion8();
  // {1, g1} is not closed (g1^2 = g3)
  std::vector<PcExps> not_closed = {pc_zero(),
                                    PcElement::generator(q8, 0).exponents()};
  EXPECT_THROW(Subgroup::from_exps(q8, not_closed), structural_error);
  // the center is closed and reconstructs fine
  Subgroup z = center(q8);
  Subgroup again = Subgroup::from_exps(q8, z.element_exps());
  EXPECT_EQ(again.order(), z.order());
  EXPECT_TRUE(z.contains(PcElement::generator(q8, 2)));
  EXPECT_FALSE(z.contains(PcElement::generator(q8, 0)));
}

TEST(Structure, StructuralOpsRejectInconsistent) {
  auto bad = PcPresentation::trivial_relations(2, 3)
                 .with_power(0, Word::gen(1))
                 .with_power(1, Word::gen(2))
                 .with_comm(1, 0, Word::gen(2));
  EXPECT_THROW(center(bad), structural_error);
  EXPECT_THROW(abelianization(bad), structural_error);
  EXPECT_THROW(pc_fingerprint(bad), structural_error);
}

TEST(Presentation, Validation) {
  // exponent out of range
  EXPECT_THROW(PcPresentation(2, 2, {Word::gen(1, 2), Word()}, {{}, {Word()}}),
               structural_error);
  // power word must use strictly later generators
  EXPECT_THROW(PcPresentation(2, 2, {Word::gen(0), Word()}, {{}, {Word()}}),
               structural_error);
  // p must be prime
  EXPECT_THROW(PcPresentation::trivial_relations(6, 1), structural_error);
  // comm word below the diagonal
  auto ok = PcPresentation::trivial_relations(3, 3);
  EXPECT_THROW(ok.with_comm(1, 0, Word::gen(1)), structural_error);
  EXPECT_THROW(ok.with_comm(0, 1, Word::gen(2)), structural_error);
}

TEST(PcIo, RoundTrip) {
  for (const PcPresentation& pres :
       {pc_dihedral(16), pc_quaternion8(), pc_e2(5), pc_e4(3),
        pc_cyclic(3, 2), pc_elem_abelian(2, 3)}) {
    PcPresentation again = parse_pc(print_pc(pres));
    EXPECT_TRUE(again.same_presentation(pres)) << pres.name();
    EXPECT_EQ(again.name(), pres.name());
  }
}

TEST(PcIo, DefaultsAndComments) {
  auto g = parse_pc(
      "pcgroup D8 {\n"
      "  p = 2; n = 3;\n"
      "  # rotations square to the central element\n"
      "  comm 2 1 = g3;\n"
      "}\n");
  EXPECT_EQ(g.prime(), 2);
  EXPECT_EQ(g.ngens(), 3);
  EXPECT_TRUE(g.power_rhs(0).empty());
  EXPECT_EQ(g.comm_rhs(1, 0), Word::gen(2));
}

TEST(PcIo, Errors) {
  EXPECT_THROW(parse_pc("pcgroup X { p = 4; n = 1; }"), structural_error);
  EXPECT_THROW(parse_pc("pcgroup X { p = 2; }"), parse_error);
  EXPECT_THROW(parse_pc("pcgroup X { p = 2; n = 2; pow 3 = g1; }"),
               parse_error);
  try {
    parse_pc("pcgroup X {\n  p = 2; n = 2;\n  pow 1 = h2;\n}");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line, 3);
  }
}

}  // namespace
}  // namespace schur
