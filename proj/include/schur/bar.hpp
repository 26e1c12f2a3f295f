// Ground-truth H2(G, Z) for small groups: normalized bar resolution
// boundaries over the multiplication table, reduced by exact Smith form.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "schur/error.hpp"
#include "schur/group_algorithms.hpp"
#include "schur/pc_structure.hpp"
#include "schur/perm.hpp"
#include "schur/zmatrix.hpp"

namespace schur {

inline constexpr long long kOracleCap = 64;

// Exact multiplication table with canonical element indexing.
struct MulTable {
  int n = 1;
  int id = 0;
  std::vector<std::int32_t> mul;  // n*n row-major
  std::vector<std::int32_t> inv;

  int at(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
};

namespace detail {

inline void verify_table(MulTable& t) {
  int n = t.n;
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      int r = t.at(a, b), c = t.at(b, a);
      if (r < 0 || r >= n || c < 0 || c >= n || seen_row[r] || seen_col[c])
        throw internal_error("multiplication table is not a Latin square");
      seen_row[r] = seen_col[c] = 1;
    }
  }
  // identity and inverses
  t.id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (t.at(e, a) != a || t.at(a, e) != a) ok = false;
    if (ok) {
      t.id = e;
      break;
    }
  }
  if (t.id < 0) throw internal_error("multiplication table has no identity");
  t.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (t.at(a, b) == t.id && t.at(b, a) == t.id) {
        t.inv[a] = b;
        break;
      }
    if (t.inv[a] < 0)
      throw internal_error("multiplication table element has no inverse");
  }
  // associativity: exhaustive up to 32, sampled above
  if (n <= 32) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
            throw internal_error("multiplication table is not associative");
  } else {
    std::mt19937 rng(271828u);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int k = 0; k < 100'000; ++k) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
        throw internal_error("multiplication table is not associative");
    }
  }
}

template <GroupModel M>
MulTable table_from_model(const M& m, long long cap) {
  auto elems = all_elements(m, cap);
  int n = static_cast<int>(elems.size());
  std::map<std::size_t, std::vector<int>> buckets;  // hash -> indices
  for (int i = 0; i < n; ++i) buckets[m.hash(elems[i])].push_back(i);
  auto index_of = [&](const typename M::Element& x) {
    auto it = buckets.find(m.hash(x));
    if (it != buckets.end())
      for (int i : it->second)
        if (m.equal(elems[i], x)) return i;
    throw internal_error("product left the enumerated element set");
  };
  MulTable t;
  t.n = n;
  t.mul.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t.mul[static_cast<size_t>(a) * n + b] =
          index_of(m.multiply(elems[a], elems[b]));
  verify_table(t);
  return t;
}

}  // namespace detail

inline MulTable multiplication_table(const PcPresentation& pres,
                                     long long cap = kOracleCap) {
  require_consistent(pres);
  PcGroupModel m(pres);
  return detail::table_from_model(m, cap);
}

inline MulTable multiplication_table(const PermGroup& g,
                                     long long cap = kOracleCap) {
  PermGroupModel m(g);
  return detail::table_from_model(m, cap);
}

// Direct product of cyclic groups, indexed by mixed-radix tuples.
inline MulTable abelian_group_table(const std::vector<long>& orders) {
  long long n = 1;
  for (long d : orders) {
    if (d < 1) throw structural_error("cyclic order must be positive");
    n *= d;
    if (n > 4096) throw capacity_error("abelian table too large");
  }
  MulTable t;
  t.n = static_cast<int>(n);
  t.mul.assign(static_cast<size_t>(n) * n, 0);
  auto add = [&](int a, int b) {
    int r = 0, mult = 1;
    for (size_t i = orders.size(); i-- > 0;) {
      long d = orders[i];
      int xa = a % d, xb = b % d;
      a /= d;
      b /= d;
      r += static_cast<int>((xa + xb) % d) * mult;
      mult *= d;
    }
    return r;
  };
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      t.mul[static_cast<size_t>(a) * t.n + b] = add(a, b);
  detail::verify_table(t);
  return t;
}

// Boundary of the normalized bar resolution, as the matrix of the map
// C_k -> C_{k-1} on column vectors: rows are (k-1)-tuples, columns k-tuples
// of non-identity elements, at most four entries per column.
inline SparseIntMatrix boundary_matrix(const MulTable& t, int k) {
  if (k != 2 && k != 3) throw structural_error("boundary degree must be 2 or 3");
  int n = t.n;
  int nn = n - 1;  // non-identity elements
  auto nid = [&](int e) { return e < t.id ? e : e - 1; };
  std::vector<std::tuple<int, int, Int>> trip;
  if (k == 2) {
    // d2(g1,g2) = (g2) - (g1 g2) + (g1)
    for (int a = 0; a < n; ++a) {
      if (a == t.id) continue;
      for (int b = 0; b < n; ++b) {
        if (b == t.id) continue;
        int col = nid(a) * nn + nid(b);
        trip.emplace_back(nid(b), col, 1);
        trip.emplace_back(nid(a), col, 1);
        int ab = t.at(a, b);
        if (ab != t.id) trip.emplace_back(nid(ab), col, -1);
      }
    }
    return SparseIntMatrix::from_triplets(nn, nn * nn, std::move(trip));
  }
  // d3(g1,g2,g3) = (g2,g3) - (g1g2,g3) + (g1,g2g3) - (g1,g2)
  auto pair_row = [&](int x, int y) { return nid(x) * nn + nid(y); };
  for (int a = 0; a < n; ++a) {
    if (a == t.id) continue;
    for (int b = 0; b < n; ++b) {
      if (b == t.id) continue;
      int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        if (c == t.id) continue;
        int col = (nid(a) * nn + nid(b)) * nn + nid(c);
        int bc = t.at(b, c);
        trip.emplace_back(pair_row(b, c), col, 1);
        if (ab != t.id) trip.emplace_back(pair_row(ab, c), col, -1);
        if (bc != t.id) trip.emplace_back(pair_row(a, bc), col, 1);
        trip.emplace_back(pair_row(a, b), col, -1);
      }
    }
  }
  return SparseIntMatrix::from_triplets(nn * nn, nn * nn * nn, std::move(trip));
}

struct BarOptions {
  bool mod_fast_path = false;  // reduce mod p^E; cross-checked in tests
};

// H2(G, Z) as invariant factors: integer kernel basis of d2 from the Smith
// transforms, express im(d3) in those coordinates, take the cokernel.
inline AbelianInvariants bar_h2(const MulTable& t, const BarOptions& opts = {}) {
  int n = t.n;
  if (n == 1) return AbelianInvariants{};
  int nn = n - 1;
  long p = 0;
  int logp = 0;
  if (opts.mod_fast_path) {
    for (long q = 2; q <= n; ++q)
      if (n % q == 0) {
        p = q;
        break;
      }
    long long t2 = n;
    while (t2 > 1) {
      if (t2 % p != 0)
        throw structural_error("mod fast path requires a p-group table");
      t2 /= p;
      ++logp;
    }
  }

  SparseIntMatrix d2 = boundary_matrix(t, 2);
  SparseIntMatrix d3 = boundary_matrix(t, 3);
  SmithForm s2 = smith_normal_form_ex(d2, TransformRequest::right_inverse);
  const int dim2 = nn * nn;
  const int r = s2.rank;
  const int k0 = dim2 - r;

  // sparse columns of Vinv for fast evaluation of y = Vinv * c
  const DenseMat& vinv = *s2.Vinv;
  std::vector<std::vector<std::pair<int, Int>>> vinv_cols(dim2);
  for (int i = 0; i < dim2; ++i)
    for (int j = 0; j < dim2; ++j)
      if (vinv[i][j] != 0) vinv_cols[j].emplace_back(i, vinv[i][j]);

  Int modulus = 0;
  long E = 0;
  if (opts.mod_fast_path) {
    E = static_cast<long>(logp) * (logp - 1) / 2 + 1;
    modulus = int_pow(p, static_cast<unsigned long>(E));
  }

  // group d3 entries by column
  std::vector<std::vector<std::pair<int, Int>>> d3cols;
  {
    long long total = static_cast<long long>(nn) * nn * nn;
    d3cols.assign(static_cast<size_t>(total), {});
    for (const auto& e : d3.entries())
      d3cols[e.col].emplace_back(e.row, e.value);
  }

  // express im(d3) in the kernel coordinates and contract on the fly:
  // whenever a relation row has a unit entry, that coordinate is substituted
  // away (an exact lattice reduction); later rows are cleaned through the
  // substitution table, so redundant relations collapse immediately
  std::vector<std::optional<std::map<int, Int>>> subst(k0);  // x_c -> expr
  std::vector<std::vector<std::pair<int, Int>>> residual;
  std::set<std::vector<std::pair<int, Int>>> residual_seen;

  auto reduce_val = [&](Int& v) {
    if (opts.mod_fast_path) {
      v %= modulus;
      if (v < 0) v += modulus;
    }
  };

  // replace contracted coordinates by their defining expressions; the
  // recursion is well-founded because an expression can only mention
  // coordinates contracted after it was created, and it is compressed in
  // place as it is cleaned
  std::function<void(std::map<int, Int>&)> clean =
      [&](std::map<int, Int>& row) {
        for (;;) {
          int c = -1;
          Int coeff;
          for (const auto& [i, v] : row)
            if (subst[i]) {
              c = i;
              coeff = v;
              break;
            }
          if (c < 0) return;
          clean(*subst[c]);
          row.erase(c);
          for (const auto& [i, v] : *subst[c]) {
            Int& slot = row[i];
            slot += coeff * v;
            reduce_val(slot);
            if (slot == 0) row.erase(i);
          }
        }
      };

  auto is_unit = [&](const Int& v) {
    return opts.mod_fast_path ? (v % p != 0) : (cmp_abs(v, Int(1)) == 0);
  };

  long contracted = 0;
  std::function<void(std::map<int, Int>&&)> feed =
      [&](std::map<int, Int>&& row) {
        clean(row);
        if (row.empty()) return;
        // contract on the first unit entry if there is one
        for (const auto& [c0, v] : row) {
          if (!is_unit(v)) continue;
          Int vinv_unit;
          if (opts.mod_fast_path) {
            if (mpz_invert(vinv_unit.get_mpz_t(), v.get_mpz_t(),
                           modulus.get_mpz_t()) == 0)
              throw internal_error("unit inversion failed in contraction");
          } else {
            vinv_unit = v;  // +-1 is its own inverse
          }
          std::map<int, Int> expr;
          for (const auto& [i, w] : row) {
            if (i == c0) continue;
            Int e = -w * vinv_unit;
            reduce_val(e);
            if (e != 0) expr.emplace(i, std::move(e));
          }
          subst[c0] = std::move(expr);
          ++contracted;
          // previously stored residuals may mention the new coordinate
          std::vector<std::vector<std::pair<int, Int>>> requeue;
          residual.erase(
              std::remove_if(residual.begin(), residual.end(),
                             [&](const auto& rr) {
                               for (const auto& [i, w] : rr)
                                 if (i == c0) {
                                   requeue.push_back(rr);
                                   return true;
                                 }
                               return false;
                             }),
              residual.end());
          for (auto& rr : requeue) {
            std::map<int, Int> m;
            for (auto& [i, w] : rr) m.emplace(i, std::move(w));
            feed(std::move(m));
          }
          return;
        }
        std::vector<std::pair<int, Int>> flat(row.begin(), row.end());
        if (!opts.mod_fast_path && flat.front().second < 0)
          for (auto& [i, v] : flat) v = -v;
        if (residual_seen.insert(flat).second) residual.push_back(std::move(flat));
      };

  std::map<int, Int> acc;
  for (const auto& col : d3cols) {
    if (col.empty()) continue;
    acc.clear();
    for (const auto& [row, v] : col)
      for (const auto& [i, w] : vinv_cols[row]) {
        Int& slot = acc[i];
        slot += v * w;
      }
    std::map<int, Int> y;
    for (auto& [i, v] : acc) {
      reduce_val(v);
      if (v == 0) continue;
      // pivot coordinates of a cycle must vanish (d2 o d3 = 0)
      if (i < r)
        throw internal_error("boundary image is not a cycle (d2*d3 != 0)");
      y.emplace(i - r, std::move(v));
    }
    if (!y.empty()) feed(std::move(y));
  }

  // remaining live coordinates and the residual relations over them
  std::vector<int> live;
  for (int ci = 0; ci < k0; ++ci)
    if (!subst[ci]) live.push_back(ci);
  if (static_cast<long>(live.size()) != k0 - contracted)
    throw internal_error("contraction bookkeeping is off");
  std::vector<int> col_index(k0, -1);
  for (size_t i = 0; i < live.size(); ++i)
    col_index[live[i]] = static_cast<int>(i);
  std::vector<std::tuple<int, int, Int>> core_trip;
  int core_rows = 0;
  for (auto& rr : residual) {
    for (auto& [ci, v] : rr) {
      if (col_index[ci] < 0)
        throw internal_error("contracted coordinate still referenced");
      core_trip.emplace_back(core_rows, col_index[ci], std::move(v));
    }
    ++core_rows;
  }
  SparseIntMatrix lattice = SparseIntMatrix::from_triplets(
      core_rows, static_cast<int>(live.size()), std::move(core_trip));

  if (opts.mod_fast_path) {
    ModSmithDiagonal md = smith_diagonal_mod_p(lattice, p, E);
    if (md.columns_without_pivot != 0)
      throw internal_error(
          "H2 came out infinite: kernel coordinate without pivot");
    long sum = 0;
    std::vector<Int> factors;
    for (long e : md.exponents) {
      sum += e;
      if (e >= E) throw internal_error("mod fast path saturated a pivot");
      if (e > 0) factors.push_back(int_pow(p, static_cast<unsigned long>(e)));
    }
    if (sum >= E)
      throw internal_error("mod fast path cannot certify finiteness");
    return AbelianInvariants::from_orders(std::move(factors));
  }
  Cokernel c = cokernel_invariants(lattice);
  if (c.free_rank != 0)
    throw internal_error(
        "H2 came out infinite: cokernel has positive free rank");
  return c.invariants;
}

}  // namespace schur
