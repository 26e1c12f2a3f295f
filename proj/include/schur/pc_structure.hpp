// Structural queries on consistent pc groups: order, center, derived
// subgroup, abelianization, exponent, fingerprints.
#pragma once

#include <string>
#include <vector>

#include "schur/group_algorithms.hpp"
#include "schur/pc.hpp"
#include "schur/zmatrix.hpp"

namespace schur {

inline constexpr long long kBruteForceCap = 1'000'000;

// Group model over a pc presentation; elements are exponent vectors.
class PcGroupModel {
 public:
  using Element = PcExps;

  explicit PcGroupModel(PcPresentation pres) : pres_(std::move(pres)) {}

  const PcPresentation& presentation() const { return pres_; }

  Element identity() const { return pc_zero(); }
  Element multiply(const Element& a, const Element& b) const {
    return detail::pc_multiply(pres_.data(), a, b);
  }
  Element inverse(const Element& a) const {
    return detail::pc_inverse(pres_.data(), a);
  }
  std::vector<Element> generators() const {
    std::vector<Element> g;
    for (int i = 0; i < pres_.ngens(); ++i)
      g.push_back(detail::pc_generator(pres_.data(), i));
    return g;
  }
  bool less(const Element& a, const Element& b) const { return a < b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::size_t hash(const Element& e) const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < pres_.ngens(); ++i) {
      h ^= e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
  // All p^n exponent vectors are elements of a consistent presentation.
  std::vector<Element> enumerate(long long cap) const {
    Int total = int_pow(pres_.prime(), static_cast<unsigned long>(pres_.ngens()));
    if (total > make_int(cap))
      throw capacity_error("group order " + total.get_str() +
                           " exceeds brute-force cap " + std::to_string(cap));
    std::vector<Element> out;
    out.reserve(static_cast<size_t>(total.get_ui()));
    Element e = pc_zero();
    int n = pres_.ngens();
    long p = pres_.prime();
    for (;;) {
      out.push_back(e);
      int i = n - 1;
      while (i >= 0) {
        if (++e[i] < p) break;
        e[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
    return out;
  }

 private:
  PcPresentation pres_;
};

// Subgroup with materialized elements; generators reduced greedily.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup from_exps(const PcPresentation& pres,
                            std::vector<PcExps> elems) {
    PcGroupModel m(pres);
    std::sort(elems.begin(), elems.end());
    auto gens = small_generating_set(m, elems);
    // materialization check: the set must be closed under the operation
    if (subgroup_closure(m, gens).size() != elems.size())
      throw structural_error("element set is not closed under the operation");
    Subgroup s;
    s.pres_ = pres;
    for (const auto& g : gens) s.generators_.push_back(PcElement(pres, g));
    s.exps_ = std::move(elems);
    return s;
  }

  static Subgroup generated_by(const PcPresentation& pres,
                               const std::vector<PcElement>& gens,
                               long long cap = kBruteForceCap) {
    PcGroupModel m(pres);
    std::vector<PcExps> ge;
    for (const auto& g : gens) ge.push_back(g.exponents());
    auto elems = subgroup_closure(m, ge, cap);
    Subgroup s;
    s.pres_ = pres;
    s.generators_ = gens;
    s.exps_ = std::move(elems);
    return s;
  }

  const PcPresentation& presentation() const { return pres_; }
  const std::vector<PcElement>& generators() const { return generators_; }
  const std::vector<PcExps>& element_exps() const { return exps_; }
  std::vector<PcElement> elements() const {
    std::vector<PcElement> v;
    v.reserve(exps_.size());
    for (const auto& e : exps_) v.push_back(PcElement(pres_, e));
    return v;
  }
  Int order() const { return Int(static_cast<long>(exps_.size())); }
  bool contains(const PcElement& x) const {
    return std::binary_search(exps_.begin(), exps_.end(), x.exponents());
  }

 private:
  PcPresentation pres_;
  std::vector<PcElement> generators_;
  std::vector<PcExps> exps_;  // sorted
};

inline Subgroup center(const PcPresentation& pres,
                       long long cap = kBruteForceCap) {
  require_consistent(pres);
  PcGroupModel m(pres);
  return Subgroup::from_exps(pres, center_elements(m, cap));
}

inline Subgroup derived_subgroup(const PcPresentation& pres,
                                 long long cap = kBruteForceCap) {
  require_consistent(pres);
  PcGroupModel m(pres);
  return Subgroup::from_exps(pres, derived_elements(m, cap));
}

// Invariant factors of G/G' from the Smith form of the exponent-relation
// matrix (rows: p*e_i - w_i for powers, e(w_ji) for commutators).
inline AbelianInvariants abelianization(const PcPresentation& pres) {
  require_consistent(pres);
  int n = pres.ngens();
  long p = pres.prime();
  std::vector<std::tuple<int, int, Int>> trip;
  int row = 0;
  auto add_word = [&](const Word& w, int r, Int scale) {
    for (const Factor& f : w.factors())
      trip.emplace_back(r, f.gen, scale * f.exp);
  };
  for (int i = 0; i < n; ++i, ++row) {
    trip.emplace_back(row, i, p);
    add_word(pres.power_rhs(i), row, -1);
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      add_word(pres.comm_rhs(j, i), row, 1);
      ++row;
    }
  auto a = SparseIntMatrix::from_triplets(row, n, std::move(trip));
  Cokernel c = cokernel_invariants(a);
  if (c.free_rank != 0)
    throw internal_error("abelianization of a finite group came out infinite");
  return c.invariants;
}

inline Int pc_exponent(const PcPresentation& pres,
                       long long cap = kBruteForceCap) {
  require_consistent(pres);
  PcGroupModel m(pres);
  Int e = 1;
  for (const auto& x : m.enumerate(cap))
    e = int_lcm(e, detail::pc_element_order(pres.data(), x));
  return e;
}

inline Fingerprint pc_fingerprint(const PcPresentation& pres,
                                  long long cap = kBruteForceCap) {
  require_consistent(pres);
  PcGroupModel m(pres);
  return fingerprint_of_model(m, cap);
}

inline bool is_abelian(const PcPresentation& pres) {
  for (int j = 0; j < pres.ngens(); ++j)
    for (int i = 0; i < j; ++i)
      if (!pres.comm_rhs(j, i).empty()) return false;
  return true;
}

}  // namespace schur
