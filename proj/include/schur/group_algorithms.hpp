// Generic algorithms over small concrete groups. A model provides element
// arithmetic, a canonical order and enumeration; everything else (center,
// derived subgroup, classes, fingerprints, quotients, pc realization) is
// derived here and shared between the pc and permutation worlds.
#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/error.hpp"
#include "schur/int.hpp"
#include "schur/pc.hpp"

namespace schur {

template <class M>
concept GroupModel = requires(const M& m, const typename M::Element& x,
                              const typename M::Element& y) {
  { m.identity() } -> std::convertible_to<typename M::Element>;
  { m.multiply(x, y) } -> std::convertible_to<typename M::Element>;
  { m.inverse(x) } -> std::convertible_to<typename M::Element>;
  { m.generators() } -> std::convertible_to<std::vector<typename M::Element>>;
  { m.less(x, y) } -> std::convertible_to<bool>;
  { m.equal(x, y) } -> std::convertible_to<bool>;
  { m.hash(x) } -> std::convertible_to<std::size_t>;
  { m.enumerate(1000000LL) } -> std::convertible_to<std::vector<typename M::Element>>;
};

template <class M>
struct ModelHash {
  const M* m;
  std::size_t operator()(const typename M::Element& x) const {
    return m->hash(x);
  }
};
template <class M>
struct ModelEq {
  const M* m;
  bool operator()(const typename M::Element& a,
                  const typename M::Element& b) const {
    return m->equal(a, b);
  }
};

template <class M>
using ElemSet =
    std::unordered_set<typename M::Element, ModelHash<M>, ModelEq<M>>;

template <GroupModel M>
ElemSet<M> make_elem_set(const M& m) {
  return ElemSet<M>(16, ModelHash<M>{&m}, ModelEq<M>{&m});
}

// Subgroup generated by `gens` (finite groups: closure under products).
template <GroupModel M>
std::vector<typename M::Element> subgroup_closure(
    const M& m, const std::vector<typename M::Element>& gens,
    long long cap = 1'000'000) {
  ElemSet<M> seen = make_elem_set(m);
  std::vector<typename M::Element> out, queue;
  auto add = [&](const typename M::Element& x) {
    if (seen.insert(x).second) {
      out.push_back(x);
      queue.push_back(x);
      if (static_cast<long long>(out.size()) > cap)
        throw capacity_error("subgroup closure exceeds cap");
    }
  };
  add(m.identity());
  for (const auto& g : gens) add(g);
  for (size_t i = 0; i < queue.size(); ++i) {
    auto x = queue[i];
    for (const auto& g : gens) add(m.multiply(x, g));
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return m.less(a, b); });
  return out;
}

// Smallest normal subgroup containing `seeds`: closure under products and
// conjugation by the group generators.
template <GroupModel M>
std::vector<typename M::Element> normal_closure(
    const M& m, const std::vector<typename M::Element>& seeds,
    long long cap = 1'000'000) {
  auto gens = m.generators();
  std::vector<typename M::Element> gen_inv;
  gen_inv.reserve(gens.size());
  for (const auto& g : gens) gen_inv.push_back(m.inverse(g));

  ElemSet<M> seen = make_elem_set(m);
  std::vector<typename M::Element> out;
  auto add = [&](const typename M::Element& x) {
    if (seen.insert(x).second) {
      out.push_back(x);
      if (static_cast<long long>(out.size()) > cap)
        throw capacity_error("normal closure exceeds cap");
      return true;
    }
    return false;
  };
  add(m.identity());
  for (const auto& s : seeds) add(s);
  // sweep until a full pass adds nothing; loop bounds are live so products
  // and conjugates of new members are picked up within the same pass
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < out.size(); ++i) {
      auto x = out[i];
      for (size_t k = 0; k < gens.size(); ++k)
        if (add(m.multiply(gen_inv[k], m.multiply(x, gens[k])))) grew = true;
    }
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = 0; j < out.size(); ++j)
        if (add(m.multiply(out[i], out[j]))) grew = true;
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return m.less(a, b); });
  return out;
}

template <GroupModel M>
std::vector<typename M::Element> all_elements(const M& m,
                                              long long cap = 1'000'000) {
  auto v = m.enumerate(cap);
  std::sort(v.begin(), v.end(),
            [&](const auto& a, const auto& b) { return m.less(a, b); });
  return v;
}

template <GroupModel M>
std::vector<typename M::Element> center_elements(const M& m,
                                                 long long cap = 1'000'000) {
  auto gens = m.generators();
  std::vector<typename M::Element> z;
  for (const auto& x : all_elements(m, cap)) {
    bool central = true;
    for (const auto& g : gens) {
      if (!m.equal(m.multiply(x, g), m.multiply(g, x))) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return z;
}

template <GroupModel M>
std::vector<typename M::Element> derived_elements(const M& m,
                                                  long long cap = 1'000'000) {
  auto gens = m.generators();
  std::vector<typename M::Element> seeds;
  for (const auto& a : gens)
    for (const auto& b : gens)
      seeds.push_back(m.multiply(m.inverse(a),
                                 m.multiply(m.inverse(b), m.multiply(a, b))));
  return normal_closure(m, seeds, cap);
}

template <GroupModel M>
Int element_order(const M& m, const typename M::Element& x) {
  auto id = m.identity();
  if (m.equal(x, id)) return 1;
  auto y = x;
  Int k = 1;
  while (!m.equal(y, id)) {
    y = m.multiply(y, x);
    ++k;
    if (k > make_int(2'000'000)) throw capacity_error("element order exceeds cap");
  }
  return k;
}

template <GroupModel M>
std::map<long long, long long> element_order_counts(
    const M& m, const std::vector<typename M::Element>& elems) {
  std::map<long long, long long> counts;
  for (const auto& x : elems) ++counts[to_int64(element_order(m, x))];
  return counts;
}

inline Int exponent_from_order_counts(
    const std::map<long long, long long>& counts) {
  Int e = 1;
  for (const auto& [o, c] : counts) e = int_lcm(e, make_int(o));
  return e;
}

// Conjugacy class sizes via orbit sweeps under conjugation by generators.
template <GroupModel M>
std::map<long long, long long> conjugacy_class_size_counts(
    const M& m, const std::vector<typename M::Element>& elems) {
  auto gens = m.generators();
  std::vector<typename M::Element> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(m.inverse(g));
  ElemSet<M> visited = make_elem_set(m);
  std::map<long long, long long> counts;
  for (const auto& start : elems) {
    if (visited.count(start)) continue;
    std::vector<typename M::Element> orbit{start};
    visited.insert(start);
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (size_t k = 0; k < gens.size(); ++k) {
        auto y = m.multiply(gen_inv[k], m.multiply(orbit[i], gens[k]));
        if (visited.insert(y).second) orbit.push_back(y);
      }
    }
    ++counts[static_cast<long long>(orbit.size())];
  }
  return counts;
}

// Invariant factors of a finite abelian group from its element-order
// multiset: for each prime q, #{x : x^{q^k} = 1} = q^{sum min(lambda_i, k)}
// recovers the q-partition lambda.
inline AbelianInvariants abelian_invariants_from_order_counts(
    const std::map<long long, long long>& counts) {
  long long n = 0;
  for (const auto& [o, c] : counts) n += c;
  if (n <= 0) throw internal_error("empty order multiset");

  std::vector<long long> primes;
  for (const auto& [o, c] : counts) {
    long long x = o;
    for (long long q = 2; q * q <= x; ++q)
      if (x % q == 0) {
        primes.push_back(q);
        while (x % q == 0) x /= q;
      }
    if (x > 1) primes.push_back(x);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  // parts[qi] = partition of the q-part, largest part first
  std::vector<std::vector<long>> parts;
  for (long long q : primes) {
    std::vector<long> ge_k;  // ge_k[k-1] = #{i : lambda_i >= k}
    long long prev = 1;      // #{x : ord(x) | q^0} = 1
    long long qk = 1;
    for (;;) {
      qk *= q;
      long long cnt = 0;
      for (const auto& [o, c] : counts)
        if (qk % o == 0) cnt += c;
      if (cnt == prev) break;
      if (cnt % prev != 0)
        throw internal_error("order multiset is not an abelian group");
      long long ratio = cnt / prev;
      long mk = 0;
      while (ratio > 1) {
        if (ratio % q != 0)
          throw internal_error("order multiset is not an abelian group");
        ratio /= q;
        ++mk;
      }
      ge_k.push_back(mk);
      prev = cnt;
    }
    std::vector<long> lambda;
    long nparts = ge_k.empty() ? 0 : ge_k[0];
    for (long i = 0; i < nparts; ++i) {
      long height = 0;
      for (size_t k = 0; k < ge_k.size(); ++k)
        if (ge_k[k] > i) height = static_cast<long>(k) + 1;
      lambda.push_back(height);
    }
    parts.push_back(std::move(lambda));
  }
  size_t maxlen = 0;
  for (const auto& l : parts) maxlen = std::max(maxlen, l.size());
  std::vector<Int> factors;
  for (size_t i = 0; i < maxlen; ++i) {
    Int f = 1;
    for (size_t qi = 0; qi < primes.size(); ++qi)
      if (i < parts[qi].size())
        f *= int_pow(primes[qi], static_cast<unsigned long>(parts[qi][i]));
    factors.push_back(f);
  }
  return AbelianInvariants::from_orders(std::move(factors));
}

// --- quotient model ---------------------------------------------------------

// G/N for a normal subgroup given by its element list; elements are the
// lexicographically least coset representatives.
template <GroupModel M>
class QuotientModel {
 public:
  using Element = typename M::Element;

  QuotientModel(const M& base, std::vector<Element> normal_elems)
      : base_(&base), n_elems_(std::move(normal_elems)) {}

  Element canon(const Element& x) const {
    Element best = base_->multiply(x, n_elems_[0]);
    for (size_t i = 1; i < n_elems_.size(); ++i) {
      Element y = base_->multiply(x, n_elems_[i]);
      if (base_->less(y, best)) best = y;
    }
    return best;
  }

  Element identity() const { return canon(base_->identity()); }
  Element multiply(const Element& a, const Element& b) const {
    return canon(base_->multiply(a, b));
  }
  Element inverse(const Element& a) const { return canon(base_->inverse(a)); }
  std::vector<Element> generators() const {
    std::vector<Element> g;
    for (const auto& x : base_->generators()) g.push_back(canon(x));
    return g;
  }
  bool less(const Element& a, const Element& b) const {
    return base_->less(a, b);
  }
  bool equal(const Element& a, const Element& b) const {
    return base_->equal(a, b);
  }
  std::size_t hash(const Element& x) const { return base_->hash(x); }
  std::vector<Element> enumerate(long long cap) const {
    ElemSet<QuotientModel> seen(16, ModelHash<QuotientModel>{this},
                                ModelEq<QuotientModel>{this});
    std::vector<Element> out;
    for (const auto& x : base_->enumerate(cap * static_cast<long long>(
                                                    n_elems_.size()))) {
      Element c = canon(x);
      if (seen.insert(c).second) {
        out.push_back(c);
        if (static_cast<long long>(out.size()) > cap)
          throw capacity_error("quotient enumeration exceeds cap");
      }
    }
    return out;
  }

 private:
  const M* base_;
  std::vector<Element> n_elems_;
};

// --- fingerprints ------------------------------------------------------------

// Isomorphism-invariant summary used to compare realizations across
// representations. Not a certificate of isomorphism.
struct Fingerprint {
  long long order = 1;
  long long exponent = 1;
  long long derived_order = 1;
  long long center_order = 1;
  std::vector<long long> abelianization;  // invariant factors ascending
  std::vector<std::pair<long long, long long>> class_sizes;
  std::vector<std::pair<long long, long long>> element_orders;

  bool operator==(const Fingerprint&) const = default;

  std::string str() const {
    std::string s = "order=" + std::to_string(order) +
                    " exp=" + std::to_string(exponent) +
                    " |G'|=" + std::to_string(derived_order) +
                    " |Z|=" + std::to_string(center_order) + " ab=[";
    for (size_t i = 0; i < abelianization.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(abelianization[i]);
    }
    s += "] classes={";
    for (size_t i = 0; i < class_sizes.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(class_sizes[i].first) + ":" +
           std::to_string(class_sizes[i].second);
    }
    s += "} orders={";
    for (size_t i = 0; i < element_orders.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(element_orders[i].first) + ":" +
           std::to_string(element_orders[i].second);
    }
    return s + "}";
  }
};

template <GroupModel M>
Fingerprint fingerprint_of_model(const M& m, long long cap = 1'000'000) {
  Fingerprint f;
  auto elems = all_elements(m, cap);
  f.order = static_cast<long long>(elems.size());
  auto order_counts = element_order_counts(m, elems);
  f.exponent = to_int64(exponent_from_order_counts(order_counts));
  for (const auto& [o, c] : order_counts) f.element_orders.emplace_back(o, c);
  auto classes = conjugacy_class_size_counts(m, elems);
  for (const auto& [s, c] : classes) f.class_sizes.emplace_back(s, c);
  auto derived = derived_elements(m, cap);
  f.derived_order = static_cast<long long>(derived.size());
  f.center_order = static_cast<long long>(center_elements(m, cap).size());
  QuotientModel<M> ab(m, derived);
  auto ab_elems = ab.enumerate(cap);
  auto ab_counts = element_order_counts(ab, ab_elems);
  AbelianInvariants inv = abelian_invariants_from_order_counts(ab_counts);
  for (const Int& d : inv.factors()) f.abelianization.push_back(to_int64(d));
  return f;
}

// --- pc realization of a concrete group -------------------------------------

// Small generating set extracted greedily from a sorted element list.
template <GroupModel M>
std::vector<typename M::Element> small_generating_set(
    const M& m, const std::vector<typename M::Element>& elems,
    long long cap = 1'000'000) {
  std::vector<typename M::Element> gens;
  ElemSet<M> have = make_elem_set(m);
  have.insert(m.identity());
  for (const auto& x : elems) {
    if (have.count(x)) continue;
    gens.push_back(x);
    have.clear();
    for (const auto& y : subgroup_closure(m, gens, cap)) have.insert(y);
  }
  return gens;
}

// Derives a consistent pc presentation from any concrete p-group model by
// refining the descending chain G_{k+1} = [G, G_k] G_k^p into steps of
// order p.
template <GroupModel M>
struct PcRealization {
  PcPresentation pres;
  std::vector<typename M::Element> pc_gens;
  // chain_sets[i] = elements of <g_{i+1}, ..., g_n>; chain_sets[n] = {1}
  std::vector<ElemSet<M>> chain_sets;
  const M* model = nullptr;

  PcExps exps_of(const typename M::Element& x) const {
    const M& m = *model;
    int n = pres.ngens();
    PcExps e = pc_zero();
    auto cur = x;
    for (int i = 0; i < n; ++i) {
      auto gi_inv = m.inverse(pc_gens[i]);
      long ei = 0;
      auto probe = cur;
      while (!chain_sets[i + 1].count(probe)) {
        probe = m.multiply(gi_inv, probe);
        ++ei;
        if (ei >= pres.prime())
          throw internal_error("normal form search failed");
      }
      e[i] = static_cast<std::uint16_t>(ei);
      cur = probe;
    }
    if (!m.equal(cur, m.identity()))
      throw internal_error("normal form residue is not the identity");
    return e;
  }

  PcElement element_of(const typename M::Element& x) const {
    return PcElement(pres, exps_of(x));
  }
};

template <GroupModel M>
PcRealization<M> pc_realization(const M& m, long p, std::string name = "",
                                long long cap = 1'000'000) {
  auto elems = all_elements(m, cap);
  long long order = static_cast<long long>(elems.size());
  {
    long long t = order;
    while (t > 1) {
      if (t % p != 0)
        throw structural_error("group order is not a power of the prime");
      t /= p;
    }
  }
  auto group_gens = m.generators();

  std::vector<std::vector<typename M::Element>> chain;  // descending
  std::vector<typename M::Element> pc_gens;
  chain.push_back(elems);
  std::vector<typename M::Element> current = elems;
  std::vector<typename M::Element> current_gens = group_gens;
  while (current.size() > 1) {
    // next term of the descending p-central chain: [G, G_k] G_k^p.
    // Generator seeds suffice: modulo [G, G_k] the p-th power map is a
    // homomorphism, and [G, <X>] is normally generated by [gens(G), X].
    std::vector<typename M::Element> seeds;
    for (const auto& x : current_gens) {
      auto xp = x;
      for (long i = 1; i < p; ++i) xp = m.multiply(xp, x);
      seeds.push_back(xp);
      for (const auto& g : group_gens)
        seeds.push_back(m.multiply(
            m.inverse(g), m.multiply(m.inverse(x), m.multiply(g, x))));
    }
    auto next = normal_closure(m, seeds, cap);
    if (next.size() >= current.size())
      throw internal_error("p-central chain did not descend");
    auto next_gens = small_generating_set(m, next, cap);
    // refine current/next (central elementary abelian quotient) into
    // index-p steps
    ElemSet<M> have = make_elem_set(m);
    for (const auto& y : next) have.insert(y);
    std::vector<typename M::Element> step_gens;
    std::vector<std::vector<typename M::Element>> partial;  // ascending
    std::vector<typename M::Element> sub_gens = next_gens;
    size_t sub_size = next.size();
    while (sub_size < current.size()) {
      const typename M::Element* pick = nullptr;
      for (const auto& c : current)
        if (!have.count(c)) {
          pick = &c;
          break;
        }
      if (!pick) throw internal_error("chain refinement failed");
      step_gens.push_back(*pick);
      sub_gens.push_back(*pick);
      auto sub = subgroup_closure(m, sub_gens, cap);
      sub_size = sub.size();
      have.clear();
      for (const auto& y : sub) have.insert(y);
      partial.push_back(std::move(sub));
    }
    // descending insertion: generators from the top of this slice
    for (int t = static_cast<int>(step_gens.size()) - 1; t >= 0; --t) {
      pc_gens.push_back(step_gens[t]);
      if (t > 0)
        chain.push_back(partial[t - 1]);
      else
        chain.push_back(next);
    }
    current = std::move(next);
    current_gens = std::move(next_gens);
  }

  int n = static_cast<int>(pc_gens.size());
  if (n > kMaxPcGens) throw capacity_error("pc realization needs too many generators");

  PcRealization<M> real;
  real.pc_gens = pc_gens;
  real.model = &m;
  real.chain_sets.reserve(chain.size());
  for (const auto& level : chain) {
    ElemSet<M> s = make_elem_set(m);
    for (const auto& y : level) s.insert(y);
    real.chain_sets.push_back(std::move(s));
  }
  // bootstrap with trivial relations so exps_of can run, then fill them in
  real.pres = PcPresentation::trivial_relations(p, n, name);

  auto word_of = [&](const PcExps& e, int above) {
    std::vector<Factor> f;
    for (int i = 0; i < n; ++i)
      if (e[i]) {
        if (i <= above)
          throw internal_error("relation word not in the deeper subgroup");
        f.push_back({i, static_cast<long>(e[i])});
      }
    return Word(std::move(f));
  };

  std::vector<Word> power(n);
  std::vector<std::vector<Word>> comm(n);
  for (int j = 0; j < n; ++j) comm[j].resize(j);
  for (int i = 0; i < n; ++i) {
    auto gp = pc_gens[i];
    for (long k = 1; k < p; ++k) gp = m.multiply(gp, pc_gens[i]);
    power[i] = word_of(real.exps_of(gp), i);
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      auto c = m.multiply(
          m.inverse(pc_gens[j]),
          m.multiply(m.inverse(pc_gens[i]),
                     m.multiply(pc_gens[j], pc_gens[i])));
      comm[j][i] = word_of(real.exps_of(c), j);
    }
  real.pres = PcPresentation(p, n, std::move(power), std::move(comm), name);
  ConsistencyResult cr = consistency_check(real.pres);
  if (!cr.consistent)
    throw internal_error("derived pc presentation is inconsistent");
  return real;
}

}  // namespace schur
