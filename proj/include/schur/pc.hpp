// Power-commutator presentations of finite p-groups, collection from the
// left, element arithmetic and the consistency test words.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/int.hpp"
#include "schur/word.hpp"

namespace schur {

constexpr int kMaxPcGens = 24;

// Exponent vector of a normal form g1^{e1} ... gn^{en}; unused slots zero.
using PcExps = std::array<std::uint16_t, kMaxPcGens>;

inline PcExps pc_zero() {
  PcExps e{};
  return e;
}

class PcPresentation;

namespace detail {

struct ProductRecord {
  std::shared_ptr<const class PcData> left;
  std::shared_ptr<const class PcData> right;
};

class PcData {
 public:
  long p = 2;
  int n = 0;
  std::vector<Word> power;               // power[i] = rhs of g_i^p
  std::vector<std::vector<Word>> comm;   // comm[j][i] = rhs of [g_j, g_i], j > i
  std::string name;
  std::optional<ProductRecord> product;  // set when built as a direct product

  void validate() const {
    if (!is_prime(p)) throw structural_error("p must be prime");
    if (p >= 65536) throw structural_error("prime too large (cap 65535)");
    if (n < 0 || n > kMaxPcGens)
      throw structural_error("generator count out of range [0, 24]");
    if (static_cast<int>(power.size()) != n)
      throw structural_error("power relation count must equal n");
    if (static_cast<int>(comm.size()) != n)
      throw structural_error("commutator table must have n rows");
    for (int i = 0; i < n; ++i) check_word(power[i], i, "power");
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(comm[j].size()) != j)
        throw structural_error("commutator table row has wrong length");
      for (int i = 0; i < j; ++i) check_word(comm[j][i], j, "commutator");
    }
  }

 private:
  void check_word(const Word& w, int bound, const char* what) const {
    for (const Factor& f : w.factors()) {
      if (f.gen <= bound || f.gen >= n)
        throw structural_error(std::string(what) +
                               " word uses generator index out of range: g" +
                               std::to_string(f.gen + 1));
      if (f.exp < 0 || f.exp >= p)
        throw structural_error(std::string(what) +
                               " word exponent outside [0, p)");
    }
  }
};

// --- collection from the left ---------------------------------------------

struct CollectToken {
  int gen;
  long exp;
};

struct NoTails {
  void on_power(int, long long = 1) {}
  void on_comm(int, int, long long = 1) {}
};

// Counts rule applications; slot i < n is the i-th power relation, slot
// n + j(j-1)/2 + i the commutator relation (j, i).
struct TailCounter {
  std::vector<long long>* tails = nullptr;
  int n = 0;
  void on_power(int i, long long k = 1) { (*tails)[i] += k; }
  void on_comm(int j, int i, long long k = 1) {
    (*tails)[n + j * (j - 1) / 2 + i] += k;
  }
};

inline int tail_count(int n) { return n + n * (n - 1) / 2; }

// Rewrites the token sequence to the unique normal form, applying the rules
//   g_j g_i -> g_i g_j [g_j,g_i]   (j > i)
//   g_i^p   -> power[i]
// leftmost violation first. Deterministic; terminates for any structurally
// valid presentation (each rewrite only introduces higher generators to the
// right, and merges strictly shrink the sequence).
template <class Tails>
void collect_tokens(const PcData& d, std::vector<CollectToken>& w,
                    Tails&& tails) {
  constexpr long long kStepCap = 400'000'000;
  long long steps = 0;
  size_t pos = 0;
  auto insert_word = [&](size_t at, const Word& word) {
    std::vector<CollectToken> tok;
    tok.reserve(word.factors().size());
    for (const Factor& f : word.factors())
      tok.push_back({f.gen, f.exp});
    w.insert(w.begin() + at, tok.begin(), tok.end());
  };
  while (pos < w.size()) {
    if (++steps > kStepCap)
      throw internal_error("collection step cap exceeded");
    if (w[pos].exp == 0) {
      w.erase(w.begin() + pos);
      if (pos > 0) --pos;
      continue;
    }
    if (w[pos].exp >= d.p) {
      if (d.power[w[pos].gen].empty()) {
        // g^p = 1: reduce the exponent wholesale
        long long uses = w[pos].exp / d.p;
        w[pos].exp %= d.p;
        tails.on_power(w[pos].gen, uses);
      } else {
        w[pos].exp -= d.p;
        insert_word(pos + 1, d.power[w[pos].gen]);
        tails.on_power(w[pos].gen);
      }
      if (w[pos].exp == 0) w.erase(w.begin() + pos);
      if (pos > 0) --pos;
      continue;
    }
    if (pos + 1 < w.size()) {
      int a = w[pos].gen, b = w[pos + 1].gen;
      if (a == b) {
        w[pos].exp += w[pos + 1].exp;
        w.erase(w.begin() + pos + 1);
        continue;
      }
      if (a > b) {
        long ea = w[pos].exp, eb = w[pos + 1].exp;
        if (d.comm[a][b].empty()) {
          // commuting pair: swap the whole blocks
          std::swap(w[pos], w[pos + 1]);
          tails.on_comm(a, b, static_cast<long long>(ea) * eb);
        } else {
          // ... a^{ea-1} (a b) b^{eb-1} ... with a b = b a [a,b]
          w[pos].exp = ea - 1;
          w[pos + 1].exp = 1;  // the moved b
          w.insert(w.begin() + pos + 2, CollectToken{a, 1});
          insert_word(pos + 3, d.comm[a][b]);
          if (eb - 1 > 0)
            w.insert(w.begin() + pos + 3 + d.comm[a][b].length(),
                     CollectToken{b, eb - 1});
          if (w[pos].exp == 0) w.erase(w.begin() + pos);
          tails.on_comm(a, b);
        }
        if (pos > 0) --pos;
        continue;
      }
    }
    ++pos;
  }
}

inline PcExps tokens_to_exps(const PcData& d, const std::vector<CollectToken>& w) {
  PcExps e = pc_zero();
  int last = -1;
  for (const CollectToken& t : w) {
    if (t.gen <= last)
      throw internal_error("collection result is not a normal form");
    last = t.gen;
    e[t.gen] = static_cast<std::uint16_t>(t.exp);
  }
  (void)d;
  return e;
}

template <class Tails>
PcExps collect_product(const PcData& d, const PcExps& a, const PcExps& b,
                       Tails&& tails) {
  std::vector<CollectToken> w;
  w.reserve(2 * d.n);
  for (int i = 0; i < d.n; ++i)
    if (a[i]) w.push_back({i, a[i]});
  for (int i = 0; i < d.n; ++i)
    if (b[i]) w.push_back({i, b[i]});
  collect_tokens(d, w, tails);
  return tokens_to_exps(d, w);
}

inline PcExps pc_multiply(const PcData& d, const PcExps& a, const PcExps& b) {
  return collect_product(d, a, b, NoTails{});
}

inline PcExps pc_generator(const PcData& d, int i) {
  if (i < 0 || i >= d.n) throw structural_error("generator index out of range");
  PcExps e = pc_zero();
  e[i] = 1;
  return e;
}

inline bool pc_is_identity(const PcExps& e) {
  for (auto x : e)
    if (x) return false;
  return true;
}

inline PcExps pc_power(const PcData& d, PcExps a, const Int& k);

// Order of an element: the least p^k with a^{p^k} = 1.
inline Int pc_element_order(const PcData& d, const PcExps& a) {
  PcExps x = a;
  Int o = 1;
  while (!pc_is_identity(x)) {
    x = pc_power(d, x, d.p);
    o *= d.p;
    if (o > int_pow(d.p, static_cast<unsigned long>(d.n)))
      throw internal_error("element order exceeds group order bound");
  }
  return o;
}

inline PcExps pc_inverse(const PcData& d, const PcExps& a) {
  if (pc_is_identity(a)) return a;
  return pc_power(d, a, pc_element_order(d, a) - 1);
}

inline PcExps pc_power(const PcData& d, PcExps a, const Int& k) {
  if (k < 0) return pc_power(d, pc_inverse(d, a), -k);
  PcExps r = pc_zero();
  PcExps base = a;
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pc_multiply(d, r, base);
    e >>= 1;
    if (e > 0) base = pc_multiply(d, base, base);
  }
  return r;
}

}  // namespace detail

// A finite p-group given by power and commutator relations over ordered
// generators. Immutable value type; consistency is a checkable property, not
// a construction precondition.
class PcPresentation {
 public:
  PcPresentation() : d_(std::make_shared<detail::PcData>()) {}

  PcPresentation(long p, int n, std::vector<Word> power,
                 std::vector<std::vector<Word>> comm, std::string name = "")
      : d_([&] {
          auto d = std::make_shared<detail::PcData>();
          d->p = p;
          d->n = n;
          d->power = std::move(power);
          d->comm = std::move(comm);
          d->name = std::move(name);
          d->validate();
          return d;
        }()) {}

  // Convenience: trivial relations everywhere, then override.
  static PcPresentation trivial_relations(long p, int n, std::string name = "") {
    std::vector<Word> power(n);
    std::vector<std::vector<Word>> comm(n);
    for (int j = 0; j < n; ++j) comm[j].resize(j);
    return PcPresentation(p, n, std::move(power), std::move(comm),
                          std::move(name));
  }

  PcPresentation with_power(int i, Word w) const {
    auto d = clone();
    d->power.at(i) = std::move(w);
    d->validate();
    return PcPresentation(std::move(d));
  }
  PcPresentation with_comm(int j, int i, Word w) const {
    if (j <= i) throw structural_error("comm index requires j > i");
    auto d = clone();
    d->comm.at(j).at(i) = std::move(w);
    d->validate();
    return PcPresentation(std::move(d));
  }
  PcPresentation with_name(std::string name) const {
    auto d = clone(/*keep_product=*/true);
    d->name = std::move(name);
    return PcPresentation(std::move(d));
  }

  long prime() const { return d_->p; }
  int ngens() const { return d_->n; }
  const std::string& name() const { return d_->name; }
  const Word& power_rhs(int i) const { return d_->power.at(i); }
  const Word& comm_rhs(int j, int i) const { return d_->comm.at(j).at(i); }
  bool has_product_record() const { return d_->product.has_value(); }
  PcPresentation product_left() const {
    return PcPresentation(std::shared_ptr<const detail::PcData>(
        d_->product.value().left));
  }
  PcPresentation product_right() const {
    return PcPresentation(std::shared_ptr<const detail::PcData>(
        d_->product.value().right));
  }

  const detail::PcData& data() const { return *d_; }
  std::shared_ptr<const detail::PcData> shared_data() const { return d_; }

  bool same_presentation(const PcPresentation& o) const {
    return d_->p == o.d_->p && d_->n == o.d_->n && d_->power == o.d_->power &&
           d_->comm == o.d_->comm;
  }

  // internal: used by the product builders
  explicit PcPresentation(std::shared_ptr<const detail::PcData> d)
      : d_(std::move(d)) {}

 private:
  std::shared_ptr<detail::PcData> clone(bool keep_product = false) const {
    auto d = std::make_shared<detail::PcData>(*d_);
    if (!keep_product) d->product.reset();
    return d;
  }

  std::shared_ptr<const detail::PcData> d_;
};

// Element of a pc group in normal form; carries its owning presentation.
class PcElement {
 public:
  PcElement() = default;
  PcElement(PcPresentation pres, PcExps e)
      : pres_(std::move(pres)), e_(e) {}

  static PcElement identity(const PcPresentation& p) {
    return PcElement(p, pc_zero());
  }
  static PcElement generator(const PcPresentation& p, int i) {
    return PcElement(p, detail::pc_generator(p.data(), i));
  }

  const PcPresentation& presentation() const { return pres_; }
  const PcExps& exponents() const { return e_; }
  long exponent_of(int i) const { return e_.at(i); }
  bool is_identity() const { return detail::pc_is_identity(e_); }

  PcElement operator*(const PcElement& o) const {
    check_same(o);
    return PcElement(pres_, detail::pc_multiply(pres_.data(), e_, o.e_));
  }
  PcElement inverse() const {
    return PcElement(pres_, detail::pc_inverse(pres_.data(), e_));
  }
  PcElement pow(const Int& k) const {
    return PcElement(pres_, detail::pc_power(pres_.data(), e_, k));
  }
  Int order() const { return detail::pc_element_order(pres_.data(), e_); }

  bool operator==(const PcElement& o) const { return e_ == o.e_; }
  bool operator!=(const PcElement& o) const { return e_ != o.e_; }

  std::string str() const {
    std::string s;
    for (int i = 0; i < pres_.ngens(); ++i) {
      if (!e_[i]) continue;
      if (!s.empty()) s += "*";
      s += "g" + std::to_string(i + 1);
      if (e_[i] != 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  void check_same(const PcElement& o) const {
    if (!pres_.same_presentation(o.pres_))
      throw structural_error("elements of different presentations");
  }

  PcPresentation pres_;
  PcExps e_ = pc_zero();
};

// Normal form of an arbitrary word (negative exponents allowed; large
// exponents go through square-and-multiply instead of token expansion).
inline PcElement collect(const PcPresentation& pres, const Word& w) {
  const auto& d = pres.data();
  PcExps acc = pc_zero();
  for (const Factor& f : w.factors()) {
    if (f.gen < 0 || f.gen >= d.n)
      throw structural_error("word uses generator index out of range: g" +
                             std::to_string(f.gen + 1));
    if (f.exp >= 0 && f.exp <= 64 * d.p) {
      std::vector<detail::CollectToken> tok;
      for (int i = 0; i < d.n; ++i)
        if (acc[i]) tok.push_back({i, acc[i]});
      tok.push_back({f.gen, f.exp});
      detail::collect_tokens(d, tok, detail::NoTails{});
      acc = detail::tokens_to_exps(d, tok);
    } else {
      PcExps g = detail::pc_power(d, detail::pc_generator(d, f.gen), f.exp);
      acc = detail::pc_multiply(d, acc, g);
    }
  }
  return PcElement(pres, acc);
}

inline PcElement evaluate_word(const PcPresentation& pres, const Word& w,
                               const std::vector<PcElement>& images) {
  PcElement acc = PcElement::identity(pres);
  for (const Factor& f : w.factors()) {
    if (f.gen < 0 || f.gen >= static_cast<int>(images.size()))
      throw structural_error("word generator has no image");
    acc = acc * images[f.gen].pow(f.exp);
  }
  return acc;
}

// --- consistency -----------------------------------------------------------

struct ConsistencyViolation {
  std::string test;
  std::string lhs;
  std::string rhs;
};

struct ConsistencyResult {
  bool consistent = true;
  std::vector<ConsistencyViolation> violations;
  explicit operator bool() const { return consistent; }
};

namespace detail {

// Evaluates both sides of every consistency test word. Visitor receives
// (description, lhs, rhs) where lhs/rhs carry exponents and, when Tails is
// TailCounter-backed, the accumulated tail vectors.
template <class Visit>
void for_each_consistency_test(const PcData& d, Visit&& visit) {
  struct TE {
    PcExps e;
    std::vector<long long> tails;
  };
  auto gen = [&](int i) {
    TE t{pc_generator(d, i), std::vector<long long>(tail_count(d.n), 0)};
    return t;
  };
  auto gpow = [&](int i, long e) {  // e < p: already a normal form
    TE t{pc_zero(), std::vector<long long>(tail_count(d.n), 0)};
    t.e[i] = static_cast<std::uint16_t>(e);
    return t;
  };
  auto mul = [&](const TE& a, const TE& b) {
    TE r;
    r.tails = a.tails;
    for (size_t k = 0; k < r.tails.size(); ++k) r.tails[k] += b.tails[k];
    TailCounter tc{&r.tails, d.n};
    r.e = collect_product(d, a.e, b.e, tc);
    return r;
  };
  auto ppow = [&](int i) {  // g_i^p collected: fires the power rule once
    TE t{pc_zero(), std::vector<long long>(tail_count(d.n), 0)};
    std::vector<CollectToken> w{{i, d.p}};
    TailCounter tc{&t.tails, d.n};
    collect_tokens(d, w, tc);
    t.e = tokens_to_exps(d, w);
    return t;
  };

  for (int k = 2; k < d.n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        std::string desc = "g" + std::to_string(k + 1) + "*(g" +
                           std::to_string(j + 1) + "*g" + std::to_string(i + 1) +
                           ") = (g" + std::to_string(k + 1) + "*g" +
                           std::to_string(j + 1) + ")*g" + std::to_string(i + 1);
        visit(desc, mul(gen(k), mul(gen(j), gen(i))),
              mul(mul(gen(k), gen(j)), gen(i)));
      }
  for (int j = 0; j < d.n; ++j)
    for (int i = 0; i < j; ++i) {
      std::string desc = "g" + std::to_string(j + 1) + "^p*g" +
                         std::to_string(i + 1) + " overlap";
      visit(desc, mul(ppow(j), gen(i)),
            mul(gpow(j, d.p - 1), mul(gen(j), gen(i))));
      std::string desc2 = "g" + std::to_string(j + 1) + "*g" +
                          std::to_string(i + 1) + "^p overlap";
      visit(desc2, mul(gen(j), ppow(i)),
            mul(mul(gen(j), gen(i)), gpow(i, d.p - 1)));
    }
  for (int i = 0; i < d.n; ++i) {
    std::string desc = "g" + std::to_string(i + 1) + "*g" +
                       std::to_string(i + 1) + "^p = g" + std::to_string(i + 1) +
                       "^p*g" + std::to_string(i + 1);
    visit(desc, mul(gen(i), ppow(i)), mul(ppow(i), gen(i)));
  }
}

inline std::string exps_str(const PcData& d, const PcExps& e) {
  std::string s;
  for (int i = 0; i < d.n; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += "g" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

inline ConsistencyResult consistency_check(const PcPresentation& pres) {
  const auto& d = pres.data();
  ConsistencyResult r;
  detail::for_each_consistency_test(d, [&](const std::string& desc,
                                           const auto& lhs, const auto& rhs) {
    if (lhs.e != rhs.e) {
      r.consistent = false;
      r.violations.push_back(
          {desc, detail::exps_str(d, lhs.e), detail::exps_str(d, rhs.e)});
    }
  });
  return r;
}

inline void require_consistent(const PcPresentation& pres) {
  ConsistencyResult r = consistency_check(pres);
  if (!r.consistent) {
    std::string msg = "presentation";
    if (!pres.name().empty()) msg += " '" + pres.name() + "'";
    msg += " is inconsistent; first violated test: " + r.violations[0].test +
           " (" + r.violations[0].lhs + " vs " + r.violations[0].rhs + ")";
    throw structural_error(msg);
  }
}

// |G| = p^n for a consistent presentation.
inline Int pc_order(const PcPresentation& pres) {
  require_consistent(pres);
  return int_pow(pres.prime(), static_cast<unsigned long>(pres.ngens()));
}

}  // namespace schur
