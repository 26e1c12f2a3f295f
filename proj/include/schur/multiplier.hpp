// Schur multiplier computations: the tails algorithm on pc presentations
// (Hopf's formula), the Kunneth product formula, closed forms for
// extraspecial groups, the t invariant, and the cross-checking dispatcher.
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/bar.hpp"
#include "schur/pc.hpp"
#include "schur/pc_structure.hpp"
#include "schur/zmatrix.hpp"

namespace schur {

struct MultiplierReport {
  std::string group;
  std::string method;  // tails | kunneth | extraspecial | oracle
  std::vector<std::string> agreed_methods;  // extra methods that were run
  AbelianInvariants invariants;
  long p_exponent = 0;  // log_p |M(G)|
  long t_value = 0;     // n(n-1)/2 - p_exponent
  std::optional<long> tails_free_rank;
  double elapsed_ms = 0.0;
};

namespace detail {

inline long t_from_exponent(int n, long mult_exp) {
  return static_cast<long>(n) * (n - 1) / 2 - mult_exp;
}

}  // namespace detail

// Tails algorithm: append a central tail to every pc relation, push every
// consistency test word through tailed collection, and present R/[F,R] by
// the harvested integer relations. Its torsion is M(G); its free rank must
// equal the generator count (Hopf).
inline MultiplierReport multiplier_tails(const PcPresentation& pres) {
  auto t0 = std::chrono::steady_clock::now();
  require_consistent(pres);
  const auto& d = pres.data();
  int n = d.n;
  if (n > 16) throw capacity_error("tails computation capped at 16 generators");
  int m = detail::tail_count(n);

  std::vector<std::tuple<int, int, Int>> trip;
  int nrows = 0;
  detail::for_each_consistency_test(d, [&](const std::string&, const auto& lhs,
                                           const auto& rhs) {
    if (lhs.e != rhs.e)
      throw internal_error("non-tail residue of a consistency word");
    for (int k = 0; k < m; ++k) {
      long long diff = lhs.tails[k] - rhs.tails[k];
      if (diff) trip.emplace_back(nrows, k, make_int(diff));
    }
    ++nrows;
  });
  auto a = SparseIntMatrix::from_triplets(nrows, m, std::move(trip));
  Cokernel cok = cokernel_invariants(a);
  if (cok.free_rank != n)
    throw internal_error("tails free rank " + std::to_string(cok.free_rank) +
                         " differs from generator count " + std::to_string(n));
  MultiplierReport r;
  r.group = pres.name();
  r.method = "tails";
  r.invariants = cok.invariants;
  r.p_exponent = r.invariants.p_exponent(pres.prime());
  r.t_value = detail::t_from_exponent(n, r.p_exponent);
  r.tails_free_rank = cok.free_rank;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

// M(H x K) = M(H) + M(K) + H/H' (x) K/K'
inline AbelianInvariants kunneth_product(const AbelianInvariants& mh,
                                         const AbelianInvariants& mk,
                                         const AbelianInvariants& abh,
                                         const AbelianInvariants& abk) {
  std::vector<Int> orders;
  for (const Int& x : mh.factors()) orders.push_back(x);
  for (const Int& x : mk.factors()) orders.push_back(x);
  AbelianInvariants tens = abelian_tensor(abh, abk);
  for (const Int& x : tens.factors()) orders.push_back(x);
  return AbelianInvariants::from_orders(std::move(orders));
}

// M(Z_{d1} x ... x Z_{dr}) = (+)_{i<j} Z_{gcd(d_i,d_j)} = (+)_{i<j} Z_{d_i}
// for a divisibility chain.
inline AbelianInvariants abelian_multiplier(const AbelianInvariants& inv) {
  std::vector<Int> orders;
  const auto& f = inv.factors();
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      orders.push_back(int_gcd(f[i], f[j]));
  return AbelianInvariants::from_orders(std::move(orders));
}

enum class EsKind { d8, q8, e1, e2, generic };

// |M(G)| for an extraspecial p-group of order p^{2m+1}.
inline Int extraspecial_multiplier_order(long p, int m, EsKind kind) {
  if (m < 1) throw structural_error("extraspecial m must be >= 1");
  if (m >= 2) {
    if (kind != EsKind::generic)
      throw structural_error("use kind=generic for m >= 2");
    return int_pow(p, static_cast<unsigned long>(2L * m * m - m - 1));
  }
  switch (kind) {
    case EsKind::d8:
      if (p != 2) throw structural_error("D8 requires p = 2");
      return 2;
    case EsKind::q8:
      if (p != 2) throw structural_error("Q8 requires p = 2");
      return 1;
    case EsKind::e1:
      if (p == 2) throw structural_error("E1 requires odd p");
      return Int(p) * p;
    case EsKind::e2:
      if (p == 2) throw structural_error("E2 requires odd p");
      return 1;
    case EsKind::generic:
      throw structural_error("m = 1 needs an explicit kind");
  }
  throw structural_error("invalid extraspecial kind");
}

enum class MultiplierMethod { automatic, tails, kunneth, oracle };

struct MultiplierOptions {
  long long oracle_cap = kOracleCap;
  bool cross_check = false;  // in automatic mode, also run the oracle
};

inline MultiplierReport multiplier(const PcPresentation& pres,
                                   MultiplierMethod method =
                                       MultiplierMethod::automatic,
                                   const MultiplierOptions& opts = {});

namespace detail {

inline MultiplierReport multiplier_kunneth(const PcPresentation& pres,
                                           const MultiplierOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  if (!pres.has_product_record())
    throw structural_error(
        "kunneth method needs a recorded direct product");
  PcPresentation a = pres.product_left();
  PcPresentation b = pres.product_right();
  MultiplierReport ma = multiplier(a, MultiplierMethod::automatic, opts);
  MultiplierReport mb = multiplier(b, MultiplierMethod::automatic, opts);
  MultiplierReport r;
  r.group = pres.name();
  r.method = "kunneth";
  r.invariants = kunneth_product(ma.invariants, mb.invariants,
                                 abelianization(a), abelianization(b));
  r.p_exponent = r.invariants.p_exponent(pres.prime());
  r.t_value = t_from_exponent(pres.ngens(), r.p_exponent);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

inline MultiplierReport multiplier_oracle(const PcPresentation& pres,
                                          const MultiplierOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Int order = pc_order(pres);
  if (order > make_int(opts.oracle_cap))
    throw capacity_error("group order exceeds the oracle cap");
  MulTable t = multiplication_table(pres, opts.oracle_cap);
  MultiplierReport r;
  r.group = pres.name();
  r.method = "oracle";
  r.invariants = bar_h2(t);
  r.p_exponent = r.invariants.p_exponent(pres.prime());
  r.t_value = t_from_exponent(pres.ngens(), r.p_exponent);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

}  // namespace detail

// Dispatcher. automatic = tails, plus Kunneth on recorded direct products,
// plus the bar oracle when under the cap and cross-checking is on; when
// several run their invariant lists must agree.
inline MultiplierReport multiplier(const PcPresentation& pres,
                                   MultiplierMethod method,
                                   const MultiplierOptions& opts) {
  switch (method) {
    case MultiplierMethod::tails:
      return multiplier_tails(pres);
    case MultiplierMethod::kunneth:
      return detail::multiplier_kunneth(pres, opts);
    case MultiplierMethod::oracle:
      return detail::multiplier_oracle(pres, opts);
    case MultiplierMethod::automatic:
      break;
  }
  MultiplierReport r = multiplier_tails(pres);
  if (pres.has_product_record()) {
    MultiplierReport k = detail::multiplier_kunneth(pres, opts);
    if (k.invariants != r.invariants)
      throw internal_error("tails and kunneth disagree on " + pres.name() +
                           ": " + r.invariants.str() + " vs " +
                           k.invariants.str());
    r.agreed_methods.push_back("kunneth");
  }
  if (opts.cross_check && pc_order(pres) <= make_int(opts.oracle_cap)) {
    MultiplierReport o = detail::multiplier_oracle(pres, opts);
    if (o.invariants != r.invariants)
      throw internal_error("tails and oracle disagree on " + pres.name() +
                           ": " + r.invariants.str() + " vs " +
                           o.invariants.str());
    r.agreed_methods.push_back("oracle");
  }
  return r;
}

// t(G) defined by |M(G)| = p^{n(n-1)/2 - t}; always a non-negative integer.
inline long t_invariant(const PcPresentation& pres) {
  MultiplierReport r = multiplier(pres);
  if (r.t_value < 0)
    throw internal_error("negative t value for " + pres.name() +
                         " contradicts Green's bound");
  return r.t_value;
}

}  // namespace schur
