// Exact integer sparse matrices and Smith normal form.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/error.hpp"
#include "schur/int.hpp"

namespace schur {

using DenseMat = std::vector<std::vector<Int>>;

// Immutable sparse integer matrix; entries sorted by (row, col), no zeros.
class SparseIntMatrix {
 public:
  struct Entry {
    int row;
    int col;
    Int value;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols) {
    if (nrows < 0 || ncols < 0) throw structural_error("negative dimension");
  }

  static SparseIntMatrix from_triplets(
      int nrows, int ncols, std::vector<std::tuple<int, int, Int>> triplets) {
    SparseIntMatrix a(nrows, ncols);
    std::sort(triplets.begin(), triplets.end(),
              [](const auto& x, const auto& y) {
                return std::pair(std::get<0>(x), std::get<1>(x)) <
                       std::pair(std::get<0>(y), std::get<1>(y));
              });
    for (auto& [r, c, v] : triplets) {
      if (r < 0 || r >= nrows || c < 0 || c >= ncols)
        throw structural_error("matrix index out of range");
      if (!a.entries_.empty() && a.entries_.back().row == r &&
          a.entries_.back().col == c) {
        a.entries_.back().value += v;
      } else {
        a.entries_.push_back({r, c, std::move(v)});
      }
    }
    a.entries_.erase(std::remove_if(a.entries_.begin(), a.entries_.end(),
                                    [](const Entry& e) { return e.value == 0; }),
                     a.entries_.end());
    return a;
  }

  static SparseIntMatrix from_dense(const DenseMat& d) {
    int m = static_cast<int>(d.size());
    int n = m ? static_cast<int>(d[0].size()) : 0;
    std::vector<std::tuple<int, int, Int>> t;
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(d[i].size()) != n)
        throw structural_error("ragged dense matrix");
      for (int j = 0; j < n; ++j)
        if (d[i][j] != 0) t.emplace_back(i, j, d[i][j]);
    }
    return from_triplets(m, n, std::move(t));
  }

  static SparseIntMatrix identity(int n) {
    std::vector<std::tuple<int, int, Int>> t;
    for (int i = 0; i < n; ++i) t.emplace_back(i, i, 1);
    return from_triplets(n, n, std::move(t));
  }

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }
  size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Int at(int r, int c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair(r, c), [](const Entry& e, auto key) {
                                 return std::pair(e.row, e.col) < key;
                               });
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return 0;
  }

  SparseIntMatrix transpose() const {
    std::vector<std::tuple<int, int, Int>> t;
    t.reserve(entries_.size());
    for (const Entry& e : entries_) t.emplace_back(e.col, e.row, e.value);
    return from_triplets(ncols_, nrows_, std::move(t));
  }

  SparseIntMatrix multiply(const SparseIntMatrix& b) const {
    if (ncols_ != b.nrows_)
      throw structural_error("matrix product dimension mismatch");
    std::vector<std::vector<std::pair<int, const Int*>>> brows(b.nrows_);
    for (const Entry& e : b.entries_) brows[e.row].emplace_back(e.col, &e.value);
    std::map<std::pair<int, int>, Int> acc;
    for (const Entry& e : entries_)
      for (const auto& [c, v] : brows[e.col]) acc[{e.row, c}] += e.value * *v;
    std::vector<std::tuple<int, int, Int>> t;
    for (auto& [rc, v] : acc)
      if (v != 0) t.emplace_back(rc.first, rc.second, std::move(v));
    return from_triplets(nrows_, b.ncols_, std::move(t));
  }

  DenseMat dense() const {
    DenseMat d(nrows_, std::vector<Int>(ncols_, 0));
    for (const Entry& e : entries_) d[e.row][e.col] = e.value;
    return d;
  }

 private:
  int nrows_ = 0;
  int ncols_ = 0;
  std::vector<Entry> entries_;
};

// Diagonal d1 | d2 | ... | dr (positive) plus optional unimodular transforms
// with U * A * V = diag(d) embedded in an nrows x ncols matrix. Uinv/Vinv are
// the exact inverses of U and V.
struct SmithForm {
  std::vector<Int> diagonal;
  int rank = 0;
  std::optional<DenseMat> U, Uinv, V, Vinv;
  // Original column indices in Smith order: first the rank pivot columns,
  // then the non-pivot (kernel-coordinate) columns ascending.
  std::vector<int> column_order;
};

enum class TransformRequest { none, right_inverse, all };

namespace detail {

// Quotient with symmetric remainder: x - q*v lies in (-|v|/2, |v|/2].
inline Int sym_div(const Int& x, const Int& v) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), v.get_mpz_t());
  Int av = abs(v);
  if (r * 2 > av) q += (v > 0 ? 1 : -1);
  return q;
}

// Shared elimination engine. Works on sparse row maps with a column index and
// a registry of magnitude-one positions so the min-abs pivot rule stays cheap
// on the +-1 dominated matrices this library produces.
class SmithEngine {
 public:
  SmithEngine(const SparseIntMatrix& a, TransformRequest treq)
      : m_(a.nrows()), n_(a.ncols()), treq_(treq) {
    rows_.resize(m_);
    col_rows_.resize(n_);
    for (const auto& e : a.entries()) {
      rows_[e.row][e.col] = e.value;
      col_rows_[e.col].insert(e.row);
      if (cmp_abs(e.value, Int(1)) == 0) ones_.insert({e.row, e.col});
    }
    row_done_.assign(m_, false);
    col_done_.assign(n_, false);
    if (treq_ == TransformRequest::all) {
      U_ = dense_identity(m_);
      Uinv_ = dense_identity(m_);
      V_ = dense_identity(n_);
    }
    if (treq_ != TransformRequest::none) Vinv_ = dense_identity(n_);
  }

  SmithForm run() {
    while (auto p = find_pivot()) {
      auto [r, c] = *p;
      clear_column(r, c);
      clear_row(r, c);
      if (lone(r, c)) extract(r, c);
    }
    fix_divisibility();
    return assemble();
  }

 private:
  static DenseMat dense_identity(int n) {
    DenseMat d(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) d[i][i] = 1;
    return d;
  }

  Int get(int r, int c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Int(0) : it->second;
  }

  void put(int r, int c, Int v) {
    auto it = rows_[r].find(c);
    if (it != rows_[r].end()) {
      ones_.erase({r, c});
      if (v == 0) {
        rows_[r].erase(it);
        col_rows_[c].erase(r);
        return;
      }
      it->second = std::move(v);
      if (cmp_abs(it->second, Int(1)) == 0) ones_.insert({r, c});
    } else if (v != 0) {
      if (cmp_abs(v, Int(1)) == 0) ones_.insert({r, c});
      rows_[r][c] = std::move(v);
      col_rows_[c].insert(r);
    }
  }

  // Global pivot: smallest nonzero absolute value, ties by lowest (row, col).
  std::optional<std::pair<int, int>> find_pivot() {
    if (!ones_.empty()) return *ones_.begin();
    std::optional<std::pair<int, int>> best;
    const Int* bestv = nullptr;
    for (int r = 0; r < m_; ++r) {
      if (row_done_[r]) continue;
      for (const auto& [c, v] : rows_[r]) {
        if (!best || cmp_abs(v, *bestv) < 0) {
          best = {r, c};
          bestv = &v;
        }
      }
    }
    return best;
  }

  // row[dst] -= q * row[src]
  void row_axpy(int dst, int src, const Int& q) {
    if (q == 0) return;
    auto src_entries = rows_[src];  // copy: writes touch only row dst
    for (const auto& [c, v] : src_entries) put(dst, c, get(dst, c) - q * v);
    if (treq_ == TransformRequest::all) {
      for (int j = 0; j < m_; ++j) {
        (*U_)[dst][j] -= q * (*U_)[src][j];
        (*Uinv_)[j][src] += q * (*Uinv_)[j][dst];
      }
    }
  }

  // col[dst] -= q * col[src]
  void col_axpy(int dst, int src, const Int& q) {
    if (q == 0) return;
    auto rows_with = col_rows_[src];  // copy: writes touch only column dst
    for (int r : rows_with) put(r, dst, get(r, dst) - q * get(r, src));
    if (treq_ == TransformRequest::all)
      for (int i = 0; i < n_; ++i) (*V_)[i][dst] -= q * (*V_)[i][src];
    if (Vinv_)
      for (int j = 0; j < n_; ++j) (*Vinv_)[src][j] += q * (*Vinv_)[dst][j];
  }

  void negate_row(int r) {
    for (auto& [c, v] : rows_[r]) v = -v;
    if (treq_ == TransformRequest::all) {
      for (int j = 0; j < m_; ++j) {
        (*U_)[r][j] = -(*U_)[r][j];
        (*Uinv_)[j][r] = -(*Uinv_)[j][r];
      }
    }
  }

  // columns (c1, c2) <- (x*c1 + y*c2, z*c1 + w*c2), with x*w - y*z = 1
  void col_mix(int c1, int c2, const Int& x, const Int& y, const Int& z,
               const Int& w) {
    std::set<int> rows_with = col_rows_[c1];
    rows_with.insert(col_rows_[c2].begin(), col_rows_[c2].end());
    for (int r : rows_with) {
      Int a = get(r, c1), b = get(r, c2);
      put(r, c1, x * a + y * b);
      put(r, c2, z * a + w * b);
    }
    if (treq_ == TransformRequest::all) {
      for (int i = 0; i < n_; ++i) {
        Int a = (*V_)[i][c1], b = (*V_)[i][c2];
        (*V_)[i][c1] = x * a + y * b;
        (*V_)[i][c2] = z * a + w * b;
      }
    }
    if (Vinv_) {
      for (int j = 0; j < n_; ++j) {
        Int a = (*Vinv_)[c1][j], b = (*Vinv_)[c2][j];
        (*Vinv_)[c1][j] = w * a - z * b;
        (*Vinv_)[c2][j] = -y * a + x * b;
      }
    }
  }

  void clear_column(int r, int c) {
    Int pivot = get(r, c);
    auto rows_with = col_rows_[c];
    for (int r2 : rows_with) {
      if (r2 == r) continue;
      row_axpy(r2, r, sym_div(get(r2, c), pivot));
    }
  }

  void clear_row(int r, int c) {
    Int pivot = get(r, c);
    std::vector<int> cols_with;
    for (const auto& [c2, v] : rows_[r])
      if (c2 != c) cols_with.push_back(c2);
    for (int c2 : cols_with) col_axpy(c2, c, sym_div(get(r, c2), pivot));
  }

  bool lone(int r, int c) const {
    return rows_[r].size() == 1 && col_rows_[c].size() == 1;
  }

  void extract(int r, int c) {
    if (get(r, c) < 0) negate_row(r);
    row_done_[r] = true;
    col_done_[c] = true;
    ones_.erase({r, c});
    pivots_.emplace_back(r, c);
  }

  void fix_divisibility() {
    for (size_t i = 0; i < pivots_.size(); ++i) {
      for (size_t j = i + 1; j < pivots_.size(); ++j) {
        auto [ri, ci] = pivots_[i];
        auto [rj, cj] = pivots_[j];
        Int a = get(ri, ci), b = get(rj, cj);
        if (b % a == 0) continue;
        // diag(a, b) -> diag(gcd, lcm) by elementary operations
        Int x, y;
        Int g = int_gcdext(a, b, x, y);
        row_axpy(ri, rj, -1);  // row_i += row_j: picks up b at (ri, cj)
        col_mix(ci, cj, x, y, -b / g, a / g);
        row_axpy(rj, ri, (y * b) / g);
        if (get(ri, ci) < 0) negate_row(ri);
        if (get(rj, cj) < 0) negate_row(rj);
      }
    }
  }

  SmithForm assemble() {
    SmithForm s;
    s.rank = static_cast<int>(pivots_.size());
    s.diagonal.reserve(pivots_.size());
    for (auto [r, c] : pivots_) s.diagonal.push_back(get(r, c));
    std::vector<int> row_order, col_order;
    for (auto [r, c] : pivots_) {
      row_order.push_back(r);
      col_order.push_back(c);
    }
    for (int r = 0; r < m_; ++r)
      if (!row_done_[r]) row_order.push_back(r);
    for (int c = 0; c < n_; ++c)
      if (!col_done_[c]) col_order.push_back(c);
    s.column_order = col_order;
    if (treq_ == TransformRequest::all) {
      DenseMat u(m_, std::vector<Int>(m_)), uinv(m_, std::vector<Int>(m_));
      for (int i = 0; i < m_; ++i) {
        u[i] = (*U_)[row_order[i]];
        for (int j = 0; j < m_; ++j) uinv[j][i] = (*Uinv_)[j][row_order[i]];
      }
      s.U = std::move(u);
      s.Uinv = std::move(uinv);
      DenseMat v(n_, std::vector<Int>(n_));
      for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i) v[i][k] = (*V_)[i][col_order[k]];
      s.V = std::move(v);
    }
    if (Vinv_) {
      DenseMat vinv(n_);
      for (int k = 0; k < n_; ++k) vinv[k] = std::move((*Vinv_)[col_order[k]]);
      s.Vinv = std::move(vinv);
    }
    return s;
  }

  int m_, n_;
  TransformRequest treq_;
  std::vector<std::map<int, Int>> rows_;
  std::vector<std::set<int>> col_rows_;
  std::set<std::pair<int, int>> ones_;
  std::vector<bool> row_done_, col_done_;
  std::vector<std::pair<int, int>> pivots_;
  std::optional<DenseMat> U_, Uinv_, V_, Vinv_;
};

}  // namespace detail

inline SmithForm smith_normal_form_ex(const SparseIntMatrix& a,
                                      TransformRequest treq) {
  return detail::SmithEngine(a, treq).run();
}

inline SmithForm smith_normal_form(const SparseIntMatrix& a,
                                   bool want_transforms = false) {
  return smith_normal_form_ex(a, want_transforms ? TransformRequest::all
                                                 : TransformRequest::none);
}

// Presents Z^ncols / rowspace(A): free rank plus torsion invariants.
struct Cokernel {
  int free_rank = 0;
  AbelianInvariants invariants;
};

inline Cokernel cokernel_invariants(const SparseIntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  Cokernel c;
  c.free_rank = a.ncols() - s.rank;
  std::vector<Int> tor;
  for (const Int& d : s.diagonal)
    if (d > 1) tor.push_back(d);
  c.invariants = AbelianInvariants::from_orders(std::move(tor));
  return c;
}

// Elimination over Z/p^E. Returns the p-valuation of each pivot (ascending)
// plus the number of columns that never received a pivot. Valid as a torsion
// computation only when the caller can bound the true invariants below p^E.
struct ModSmithDiagonal {
  std::vector<long> exponents;   // pivots with valuation in [0, E)
  int columns_without_pivot = 0; // columns indistinguishable from free
};

inline ModSmithDiagonal smith_diagonal_mod_p(const SparseIntMatrix& a, long p,
                                             long E) {
  if (E < 1) throw structural_error("modulus exponent must be >= 1");
  const Int q = int_pow(p, static_cast<unsigned long>(E));
  int m = a.nrows(), n = a.ncols();
  std::vector<std::map<int, Int>> rows(m);
  std::vector<std::set<int>> col_rows(n);
  auto put = [&](int r, int c, Int v) {
    v %= q;
    if (v < 0) v += q;
    auto it = rows[r].find(c);
    if (it != rows[r].end()) {
      if (v == 0) {
        rows[r].erase(it);
        col_rows[c].erase(r);
      } else {
        it->second = std::move(v);
      }
    } else if (v != 0) {
      rows[r][c] = std::move(v);
      col_rows[c].insert(r);
    }
  };
  for (const auto& e : a.entries()) put(e.row, e.col, e.value);

  auto valuation = [&](const Int& v) {
    long k = 0;
    Int x = v;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    return k;
  };

  std::vector<bool> row_done(m, false), col_done(n, false);
  std::vector<long> exps;
  for (;;) {
    // pivot: minimal valuation, ties by lowest (row, col)
    int br = -1, bc = -1;
    long bval = -1;
    for (int r = 0; r < m && bval != 0; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        long k = valuation(v);
        if (bval < 0 || k < bval) {
          bval = k;
          br = r;
          bc = c;
          if (k == 0) break;
        }
      }
    }
    if (bval < 0) break;
    // normalize pivot to p^bval by scaling the row with the unit inverse
    Int unit = rows[br][bc] / int_pow(p, static_cast<unsigned long>(bval));
    Int uinv;
    if (mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), q.get_mpz_t()) == 0)
      throw internal_error("unit inversion failed mod p^E");
    {
      auto row_copy = rows[br];
      for (const auto& [c, v] : row_copy) put(br, c, v * uinv);
    }
    const Int pa = int_pow(p, static_cast<unsigned long>(bval));
    // clear column then row; every other entry has valuation >= bval
    auto rows_with = col_rows[bc];
    for (int r2 : rows_with) {
      if (r2 == br) continue;
      Int f = rows[r2][bc] / pa;
      auto piv_copy = rows[br];
      for (const auto& [c, v] : piv_copy) {
        Int cur = 0;
        auto it = rows[r2].find(c);
        if (it != rows[r2].end()) cur = it->second;
        put(r2, c, cur - f * v);
      }
    }
    std::vector<int> cols_with;
    for (const auto& [c2, v] : rows[br])
      if (c2 != bc) cols_with.push_back(c2);
    for (int c2 : cols_with) {
      Int f = rows[br][c2] / pa;
      auto rows_in_c = col_rows[bc];
      for (int r2 : rows_in_c) {
        Int cur = 0;
        auto it = rows[r2].find(c2);
        if (it != rows[r2].end()) cur = it->second;
        put(r2, c2, cur - f * rows[r2][bc]);
      }
    }
    row_done[br] = true;
    col_done[bc] = true;
    rows[br].clear();
    col_rows[bc].clear();
    exps.push_back(bval);
  }
  std::sort(exps.begin(), exps.end());
  ModSmithDiagonal d;
  d.exponents = std::move(exps);
  int live_cols = 0;
  for (int c = 0; c < n; ++c)
    if (!col_done[c]) ++live_cols;
  d.columns_without_pivot = live_cols;
  return d;
}

}  // namespace schur
