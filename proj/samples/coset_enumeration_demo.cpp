// Enumerate the cosets of a finitely presented 2-group, realize it as a
// permutation group, and recover a pc presentation from the regular
// representation.

#include <iostream>

#include "schur/fp.hpp"
#include "schur/pc_io.hpp"
#include "schur/perm.hpp"
#include "schur/todd_coxeter.hpp"

int main() {
  using namespace schur;

  FpPresentation fp = parse_presentation(
      "gens a, b, c; rels a^2 = b^2 = c^2 = 1, abc = bca = cab;");
  CosetTable tc = todd_coxeter(fp);
  std::cout << "cosets: " << tc.coset_count << "\n";

  PermGroup rr = regular_rep(tc);
  std::cout << "regular representation degree " << rr.degree << ", order "
            << perm_group_order(rr) << "\n";

  PermGroupModel model(rr);
  auto real = pc_realization(model, 2, "demo");
  std::cout << print_pc(real.pres);

  SatisfiesReport cert = satisfies(fp, real.pres, [&] {
    std::vector<PcElement> images;
    for (const Perm& g : rr.gens) images.push_back(real.element_of(g));
    return images;
  }());
  std::cout << "relators hold: " << (cert.relators_hold ? "yes" : "no")
            << ", images generate: " << (cert.generates ? "yes" : "no")
            << "\n";
  return 0;
}
