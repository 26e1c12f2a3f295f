// Permutation groups: regular representations of coset tables and the
// fingerprint computed by permutation arithmetic.
#pragma once

#include <cstdint>
#include <vector>

#include "schur/error.hpp"
#include "schur/group_algorithms.hpp"
#include "schur/todd_coxeter.hpp"

namespace schur {

// Images of 0..degree-1; x^(a*b) = (x^a)^b.
using Perm = std::vector<std::int32_t>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::int32_t>(i);
  return r;
}

struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
};

class PermGroupModel {
 public:
  using Element = Perm;

  explicit PermGroupModel(const PermGroup& g) : g_(&g) {}

  Element identity() const { return perm_identity(g_->degree); }
  Element multiply(const Element& a, const Element& b) const {
    return perm_compose(a, b);
  }
  Element inverse(const Element& a) const { return perm_inverse(a); }
  std::vector<Element> generators() const { return g_->gens; }
  bool less(const Element& a, const Element& b) const { return a < b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::size_t hash(const Element& a) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : a) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
  std::vector<Element> enumerate(long long cap) const {
    return subgroup_closure(*this, g_->gens, cap);
  }

 private:
  const PermGroup* g_;
};

// One permutation per generator acting on the cosets of a complete table.
inline PermGroup regular_rep(const CosetTable& t) {
  if (!t.complete)
    throw structural_error("regular representation needs a complete table");
  PermGroup g;
  g.degree = static_cast<int>(t.coset_count);
  for (int gen = 0; gen < t.ngens; ++gen) {
    Perm p(g.degree);
    for (int c = 0; c < g.degree; ++c) p[c] = t.table[c][2 * gen];
    g.gens.push_back(std::move(p));
  }
  return g;
}

inline Int perm_group_order(const PermGroup& g, long long cap = 1'000'000) {
  PermGroupModel m(g);
  return make_int(static_cast<long long>(m.enumerate(cap).size()));
}

inline Fingerprint perm_fingerprint(const PermGroup& g,
                                    long long cap = 1'000'000) {
  PermGroupModel m(g);
  return fingerprint_of_model(m, cap);
}

}  // namespace schur
