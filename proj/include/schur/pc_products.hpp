// Direct and central products of pc groups.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "schur/group_algorithms.hpp"
#include "schur/pc.hpp"
#include "schur/pc_structure.hpp"

namespace schur {

namespace detail {

inline Word shift_word(const Word& w, int offset) {
  std::vector<Factor> f;
  f.reserve(w.factors().size());
  for (const Factor& x : w.factors()) f.push_back({x.gen + offset, x.exp});
  return Word(std::move(f));
}

}  // namespace detail

// Block presentation on a's generators followed by b's; records the factors
// so the Kunneth fast path can recognize the product later.
inline PcPresentation direct_product(const PcPresentation& a,
                                     const PcPresentation& b) {
  if (a.prime() != b.prime())
    throw structural_error("direct product requires equal primes");
  require_consistent(a);
  require_consistent(b);
  int na = a.ngens(), nb = b.ngens();
  if (na + nb > kMaxPcGens)
    throw capacity_error("direct product exceeds generator cap");
  auto d = std::make_shared<detail::PcData>();
  d->p = a.prime();
  d->n = na + nb;
  d->power.resize(d->n);
  d->comm.resize(d->n);
  for (int j = 0; j < d->n; ++j) d->comm[j].resize(j);
  for (int i = 0; i < na; ++i) d->power[i] = a.power_rhs(i);
  for (int i = 0; i < nb; ++i)
    d->power[na + i] = detail::shift_word(b.power_rhs(i), na);
  for (int j = 0; j < na; ++j)
    for (int i = 0; i < j; ++i) d->comm[j][i] = a.comm_rhs(j, i);
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < j; ++i)
      d->comm[na + j][na + i] = detail::shift_word(b.comm_rhs(j, i), na);
  std::string an = a.name().empty() ? "?" : a.name();
  std::string bn = b.name().empty() ? "?" : b.name();
  d->name = an + "x" + bn;
  d->product = detail::ProductRecord{a.shared_data(), b.shared_data()};
  d->validate();
  PcPresentation prod{std::shared_ptr<const detail::PcData>(std::move(d))};
  ConsistencyResult cr = consistency_check(prod);
  if (!cr.consistent)
    throw internal_error("direct product of consistent factors inconsistent");
  return prod;
}

// Central product: quotient of a x b by the anti-diagonal of the pairing
// u_k -> v_k between central subgroups, re-expressed as a pc presentation.
inline PcPresentation central_product(
    const PcPresentation& a, const PcPresentation& b,
    const std::vector<std::pair<Word, Word>>& identification,
    std::string name = "", long long cap = kBruteForceCap) {
  require_consistent(a);
  require_consistent(b);
  if (a.prime() != b.prime())
    throw structural_error("central product requires equal primes");
  long p = a.prime();

  // centrality of each identified element in its own factor
  auto check_central = [](const PcPresentation& pres, const Word& w,
                          const char* side) {
    PcElement x = collect(pres, w);
    for (int i = 0; i < pres.ngens(); ++i) {
      PcElement g = PcElement::generator(pres, i);
      if (x * g != g * x)
        throw structural_error(std::string("identified subgroup is not "
                                           "central in the ") +
                               side + " factor");
    }
  };
  for (const auto& [u, v] : identification) {
    check_central(a, u, "left");
    check_central(b, v, "right");
  }

  PcPresentation prod = direct_product(a, b);
  PcGroupModel dm(prod);

  // anti-diagonal N = <(u_k, v_k^{-1})> and the two projections
  std::vector<PcExps> n_seeds, u_seeds, v_seeds;
  for (const auto& [u, v] : identification) {
    PcElement ue = collect(prod, u);  // a-words keep their indices
    PcElement ve = collect(prod, detail::shift_word(v, a.ngens()));
    n_seeds.push_back((ue * ve.inverse()).exponents());
    u_seeds.push_back(ue.exponents());
    v_seeds.push_back(ve.exponents());
  }
  auto n_elems = subgroup_closure(dm, n_seeds, cap);
  auto u_elems = subgroup_closure(dm, u_seeds, cap);
  auto v_elems = subgroup_closure(dm, v_seeds, cap);
  if (n_elems.size() != u_elems.size() || n_elems.size() != v_elems.size())
    throw structural_error(
        "identification does not define an isomorphism of the central "
        "subgroups");

  QuotientModel<PcGroupModel> q(dm, n_elems);
  if (name.empty()) {
    std::string an = a.name().empty() ? "?" : a.name();
    std::string bn = b.name().empty() ? "?" : b.name();
    name = an + "o" + bn;
  }
  auto real = pc_realization(q, p, name, cap);
  return real.pres;
}

}  // namespace schur
