// Bound checks on multiplier orders: the (n,k) upper bound with its
// equality-case recognizer, and the multiplier-times-derived inequality with
// abelianized tensor factors.
#pragma once

#include <string>

#include "schur/families.hpp"
#include "schur/multiplier.hpp"
#include "schur/pc_products.hpp"
#include "schur/pc_structure.hpp"

namespace schur {

// Subgroup as a model of its own: elements and generators live in the base.
template <GroupModel M>
class SubgroupModel {
 public:
  using Element = typename M::Element;

  SubgroupModel(const M& base, std::vector<Element> elems)
      : base_(&base), elems_(std::move(elems)) {
    gens_ = small_generating_set(base, elems_);
    if (gens_.empty()) gens_.push_back(base.identity());
  }

  Element identity() const { return base_->identity(); }
  Element multiply(const Element& a, const Element& b) const {
    return base_->multiply(a, b);
  }
  Element inverse(const Element& a) const { return base_->inverse(a); }
  std::vector<Element> generators() const { return gens_; }
  bool less(const Element& a, const Element& b) const {
    return base_->less(a, b);
  }
  bool equal(const Element& a, const Element& b) const {
    return base_->equal(a, b);
  }
  std::size_t hash(const Element& x) const { return base_->hash(x); }
  std::vector<Element> enumerate(long long cap) const {
    if (static_cast<long long>(elems_.size()) > cap)
      throw capacity_error("subgroup enumeration exceeds cap");
    return elems_;
  }

 private:
  const M* base_;
  std::vector<Element> elems_;
  std::vector<Element> gens_;
};

// Invariant factors of the abelianization of any concrete model.
template <GroupModel M>
AbelianInvariants model_abelianization(const M& m, long long cap) {
  auto derived = derived_elements(m, cap);
  QuotientModel<M> q(m, derived);
  auto counts = element_order_counts(q, q.enumerate(cap));
  return abelian_invariants_from_order_counts(counts);
}

struct MultiplierBoundReport {
  long n = 0;
  long k = 0;                 // log_p |G'|
  long bound_exponent = 0;    // (n+k-2)(n-k-1)/2 + 1
  long multiplier_exponent = 0;
  bool holds = false;
  bool equality = false;
  bool equality_case_recognized = false;  // fingerprint of E1(p) x Zp^(n-3)
};

inline MultiplierBoundReport multiplier_bound_check(const PcPresentation& pres,
                                             long long cap = kBruteForceCap) {
  require_consistent(pres);
  if (is_abelian(pres))
    throw structural_error("bound check requires a non-abelian group");
  long p = pres.prime();
  MultiplierBoundReport r;
  r.n = pres.ngens();
  r.k = p_power_exponent(derived_subgroup(pres, cap).order(), p);
  r.bound_exponent = (r.n + r.k - 2) * (r.n - r.k - 1) / 2 + 1;
  r.multiplier_exponent = multiplier(pres).p_exponent;
  r.holds = r.multiplier_exponent <= r.bound_exponent;
  if (p > 2 && r.n >= 3) {
    PcPresentation ref =
        r.n == 3 ? pc_e1(p)
                 : direct_product(pc_e1(p),
                                  pc_elem_abelian(p, static_cast<int>(r.n) - 3));
    r.equality_case_recognized =
        pc_fingerprint(pres, cap) == pc_fingerprint(ref, cap);
  }
  r.equality = r.multiplier_exponent == r.bound_exponent;
  return r;
}

struct DerivedInequalityReport {
  Int lhs = 0;  // |M(G)| * |G'|
  Int rhs = 0;  // |M(G/G')| * |G'_ab (x) (G/Z)_ab|
  bool holds = false;
  // the tensor factors are abelianizations of G' and G/Z(G)
  std::string interpretation = "abelianized";
};

inline DerivedInequalityReport derived_inequality_check(const PcPresentation& pres,
                                          long long cap = kBruteForceCap) {
  require_consistent(pres);
  if (is_abelian(pres))
    throw structural_error("inequality check requires a non-abelian group");
  DerivedInequalityReport r;
  Int mult_order = multiplier(pres).invariants.order();
  PcGroupModel m(pres);
  auto derived = derived_elements(m, cap);
  r.lhs = mult_order * make_int(static_cast<long long>(derived.size()));

  Int m_ab = abelian_multiplier(abelianization(pres)).order();
  SubgroupModel<PcGroupModel> dsub(m, derived);
  AbelianInvariants d_ab = model_abelianization(dsub, cap);
  auto zc = center_elements(m, cap);
  std::vector<PcExps> zg_gens = small_generating_set(m, zc, cap);
  for (const auto& x : small_generating_set(m, derived, cap))
    zg_gens.push_back(x);
  auto zg = subgroup_closure(m, zg_gens, cap);
  QuotientModel<PcGroupModel> gz(m, zg);  // G / (Z(G) G') = (G/Z)_ab
  AbelianInvariants gz_ab = abelian_invariants_from_order_counts(
      element_order_counts(gz, gz.enumerate(cap)));
  r.rhs = m_ab * abelian_tensor(d_ab, gz_ab).order();
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace schur
