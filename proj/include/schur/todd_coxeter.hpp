// Todd-Coxeter coset enumeration over the trivial subgroup: HLT scanning
// with immediate coincidence handling and first-undefined definition order.
#pragma once

#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/fp.hpp"

namespace schur {

struct CosetTable {
  int ngens = 0;
  bool complete = false;
  long long coset_count = 0;  // valid when complete
  // live, compressed table: table[c][2*g] = c * g, table[c][2*g+1] = c * g^-1
  std::vector<std::vector<int>> table;
};

namespace detail {

class Enumerator {
 public:
  Enumerator(const FpPresentation& fp, long long max_cosets)
      : ngens_(static_cast<int>(fp.generators.size())),
        cols_(2 * ngens_),
        max_cosets_(max_cosets) {
    for (const Word& w : fp.relators) {
      std::vector<int> r;
      for (const Factor& f : w.factors()) {
        long e = f.exp;
        int fwd = 2 * f.gen, bwd = 2 * f.gen + 1;
        for (long k = 0; k < (e > 0 ? e : -e); ++k)
          r.push_back(e > 0 ? fwd : bwd);
      }
      if (!r.empty()) rels_.push_back(std::move(r));
    }
    tab_.push_back({});           // dummy index 0
    p_.push_back(0);
    new_coset();                  // coset 1
  }

  CosetTable run() {
    for (long long a = 1; a < static_cast<long long>(tab_.size()); ++a) {
      if (rep(a) != a) continue;
      for (const auto& r : rels_) {
        scan_and_fill(a, r);
        if (!ok_) return incomplete();
        if (rep(a) != a) break;
      }
      if (rep(a) != a) continue;
      for (int x = 0; x < cols_; ++x) {
        if (look(a, x) == 0) {
          long long b = new_coset();
          if (!ok_) return incomplete();
          set(a, x, b);
          set(b, inv(x), a);
        }
      }
    }
    return finish();
  }

 private:
  static int inv(int x) { return x ^ 1; }

  long long rep(long long c) {
    while (p_[c] != c) {
      p_[c] = p_[p_[c]];
      c = p_[c];
    }
    return c;
  }

  long long look(long long c, int x) {
    long long d = tab_[c][x];
    if (d && p_[d] != d) {
      d = rep(d);
      tab_[c][x] = static_cast<int>(d);
    }
    return d;
  }

  void set(long long c, int x, long long d) {
    tab_[c][x] = static_cast<int>(d);
  }

  long long new_coset() {
    if (static_cast<long long>(tab_.size()) > max_cosets_) {
      ok_ = false;
      return 0;
    }
    tab_.push_back(std::vector<int>(cols_, 0));
    p_.push_back(static_cast<long long>(tab_.size()) - 1);
    return static_cast<long long>(tab_.size()) - 1;
  }

  void merge(long long a, long long b, std::vector<long long>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    q.push_back(b);
  }

  void coincidence(long long a, long long b) {
    std::vector<long long> q;
    merge(a, b, q);
    for (size_t qi = 0; qi < q.size(); ++qi) {
      long long dead = q[qi];
      for (int x = 0; x < cols_; ++x) {
        long long d = tab_[dead][x];
        if (!d) continue;
        tab_[d][inv(x)] = 0;
        long long mu = rep(dead);
        long long nu = rep(d);
        long long mx = look(mu, x);
        if (mx)
          merge(nu, mx, q);
        else {
          long long ni = look(nu, inv(x));
          if (ni)
            merge(mu, ni, q);
          else {
            set(mu, x, nu);
            set(nu, inv(x), mu);
          }
        }
      }
    }
  }

  void scan_and_fill(long long a, const std::vector<int>& w) {
    long long f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && look(f, w[i]) != 0) f = look(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && look(b, inv(w[j])) != 0) b = look(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        set(b, inv(w[i]), f);
        return;
      }
      long long n = new_coset();
      if (!ok_) return;
      set(f, w[i], n);
      set(n, inv(w[i]), f);
      f = n;
      ++i;
    }
  }

  CosetTable incomplete() const {
    CosetTable t;
    t.ngens = ngens_;
    t.complete = false;
    t.coset_count = 0;
    return t;
  }

  CosetTable finish() {
    // compress live cosets in increasing order
    std::vector<long long> live;
    std::vector<long long> index(tab_.size(), -1);
    for (long long c = 1; c < static_cast<long long>(tab_.size()); ++c)
      if (rep(c) == c) {
        index[c] = static_cast<long long>(live.size());
        live.push_back(c);
      }
    CosetTable t;
    t.ngens = ngens_;
    t.complete = true;
    t.coset_count = static_cast<long long>(live.size());
    t.table.assign(live.size(), std::vector<int>(cols_, -1));
    for (size_t c = 0; c < live.size(); ++c)
      for (int x = 0; x < cols_; ++x) {
        long long d = look(live[c], x);
        if (d == 0)
          throw internal_error("complete coset table has an empty entry");
        t.table[c][x] = static_cast<int>(index[d]);
      }
    // every relator must trace back to its start at every coset
    for (size_t c = 0; c < live.size(); ++c)
      for (const auto& r : rels_) {
        size_t cur = c;
        for (int x : r) cur = static_cast<size_t>(t.table[cur][x]);
        if (cur != c)
          throw internal_error("coset table does not satisfy a relator");
      }
    return t;
  }

  int ngens_;
  int cols_;
  long long max_cosets_;
  bool ok_ = true;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> tab_;
  std::vector<long long> p_;
};

}  // namespace detail

inline CosetTable todd_coxeter(const FpPresentation& fp,
                               long long max_cosets = 100'000) {
  if (fp.generators.empty()) {
    CosetTable t;
    t.ngens = 0;
    t.complete = true;
    t.coset_count = 1;
    t.table.assign(1, {});
    return t;
  }
  return detail::Enumerator(fp, max_cosets).run();
}

}  // namespace schur
