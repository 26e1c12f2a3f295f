// Named pc constructions: cyclic and elementary abelian groups, dihedral and
// quaternion 2-groups, the extraspecial families E1/E2/E4 and their central
// products.
#pragma once

#include <string>
#include <vector>

#include "schur/pc.hpp"
#include "schur/pc_products.hpp"

namespace schur {

// Z_{p^e} with the chain g_i^p = g_{i+1}.
inline PcPresentation pc_cyclic(long p, int e) {
  if (e < 0) throw structural_error("cyclic exponent must be >= 0");
  PcPresentation pres = PcPresentation::trivial_relations(
      p, e, "Z" + int_pow(p, static_cast<unsigned long>(e)).get_str());
  for (int i = 0; i + 1 < e; ++i)
    pres = pres.with_power(i, Word::gen(i + 1));
  return pres;
}

inline PcPresentation pc_elem_abelian(long p, int r) {
  if (r < 0) throw structural_error("rank must be >= 0");
  std::string nm = "Z" + std::to_string(p) + "^" + std::to_string(r);
  if (r == 0) nm = "1";
  return PcPresentation::trivial_relations(p, r, nm);
}

inline PcPresentation pc_trivial(long p = 2) { return pc_elem_abelian(p, 0); }

// D_{2^k}, k >= 3: g1 the reflection, g2 the rotation, g_{i+1} = g_i^2.
inline PcPresentation pc_dihedral(long order) {
  int k = 0;
  long t = order;
  while (t > 1 && t % 2 == 0) {
    t /= 2;
    ++k;
  }
  if (t != 1 || k < 3)
    throw structural_error("dihedral order must be a power of 2, at least 8");
  PcPresentation pres =
      PcPresentation::trivial_relations(2, k, "D" + std::to_string(order));
  for (int i = 1; i + 1 < k; ++i) pres = pres.with_power(i, Word::gen(i + 1));
  // [g_i, g_1] = r^{-2^{i-1}} = g_{i+1} g_{i+2} ... g_k
  for (int i = 1; i + 1 < k; ++i) {
    std::vector<Factor> f;
    for (int j = i + 1; j < k; ++j) f.push_back({j, 1});
    pres = pres.with_comm(i, 0, Word(std::move(f)));
  }
  return pres;
}

inline PcPresentation pc_quaternion8() {
  PcPresentation pres = PcPresentation::trivial_relations(2, 3, "Q8");
  pres = pres.with_power(0, Word::gen(2));
  pres = pres.with_power(1, Word::gen(2));
  pres = pres.with_comm(1, 0, Word::gen(2));
  return pres;
}

// Extraspecial p^3 of exponent p (odd p).
inline PcPresentation pc_e1(long p) {
  if (p == 2) throw structural_error("E1 requires an odd prime");
  PcPresentation pres = PcPresentation::trivial_relations(
      p, 3, "E1(" + std::to_string(p) + ")");
  return pres.with_comm(1, 0, Word::gen(2));
}

// Extraspecial p^3 of exponent p^2 (odd p): g1^p = g3, [g2,g1] = g3^{p-1}.
inline PcPresentation pc_e2(long p) {
  if (p == 2) throw structural_error("E2 requires an odd prime");
  PcPresentation pres = PcPresentation::trivial_relations(
      p, 3, "E2(" + std::to_string(p) + ")");
  pres = pres.with_power(0, Word::gen(2));
  pres = pres.with_comm(1, 0, Word::gen(2, p - 1));
  return pres;
}

// E4 = Z_{p^2} o E1(p): the unique central product identifying the center of
// E1 with the order-p subgroup of Z_{p^2}.
inline PcPresentation pc_e4(long p) {
  PcPresentation zp2 = pc_cyclic(p, 2);
  PcPresentation e1 = pc_e1(p);
  return central_product(zp2, e1, {{Word::gen(1), Word::gen(2)}},
                         "E4(" + std::to_string(p) + ")");
}

enum class ExtraspecialType { plus, minus };  // exponent p / p^2 for odd p

// Extraspecial group of order p^{2m+1} as an iterated central product of the
// order-p^3 (or order-8) building blocks, identifying all centers.
inline PcPresentation pc_extraspecial(long p, int m, ExtraspecialType type) {
  if (m < 1) throw structural_error("extraspecial m must be >= 1");
  auto block_plus = [&] { return p == 2 ? pc_dihedral(8) : pc_e1(p); };
  auto block_minus = [&] { return p == 2 ? pc_quaternion8() : pc_e2(p); };
  PcPresentation g = type == ExtraspecialType::plus ? block_plus()
                                                    : block_minus();
  // center of every block and of every partial product is its last generator
  for (int i = 1; i < m; ++i) {
    PcPresentation blk = block_plus();
    g = central_product(g, blk, {{Word::gen(g.ngens() - 1), Word::gen(2)}});
  }
  std::string nm = "ES(" + std::to_string(p) + "," + std::to_string(m) + "," +
                   (type == ExtraspecialType::plus ? "+" : "-") + ")";
  return g.with_name(nm);
}

}  // namespace schur
