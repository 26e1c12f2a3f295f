// Finite abelian groups as invariant-factor lists d1 | d2 | ... | dr.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "schur/int.hpp"

namespace schur {

// Invariant factors in divisibility order, every factor > 1.
// The empty list is the trivial group.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;

  // Normalizes an arbitrary multiset of cyclic orders into the canonical
  // chain: sort, then repair adjacent non-divisible pairs with (gcd, lcm).
  // Each repair strictly lowers the sorted list lexicographically, so the
  // loop terminates.
  static AbelianInvariants from_orders(std::vector<Int> orders) {
    for (const Int& m : orders)
      if (m <= 0) throw structural_error("cyclic order must be positive");
    orders.erase(std::remove(orders.begin(), orders.end(), Int(1)),
                 orders.end());
    std::sort(orders.begin(), orders.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < orders.size(); ++i) {
        if (orders[i + 1] % orders[i] == 0) continue;
        Int g = int_gcd(orders[i], orders[i + 1]);
        Int l = orders[i] / g * orders[i + 1];
        orders[i] = g;
        orders[i + 1] = l;
        std::sort(orders.begin(), orders.end());
        changed = true;
        break;
      }
    }
    orders.erase(std::remove(orders.begin(), orders.end(), Int(1)),
                 orders.end());
    AbelianInvariants r;
    r.factors_ = std::move(orders);
    return r;
  }

  const std::vector<Int>& factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }
  size_t rank() const { return factors_.size(); }

  Int order() const {
    Int o = 1;
    for (const Int& d : factors_) o *= d;
    return o;
  }

  // log_p(order) when every factor is a power of p; throws otherwise.
  long p_exponent(long p) const {
    long e = 0;
    for (const Int& d : factors_) {
      long k = p_power_exponent(d, p);
      if (k < 0)
        throw internal_error("invariant factor " + d.get_str() +
                             " is not a power of " + std::to_string(p));
      e += k;
    }
    return e;
  }

  bool is_p_group(long p) const {
    for (const Int& d : factors_)
      if (p_power_exponent(d, p) < 0) return false;
    return true;
  }

  bool is_elementary(long p) const {
    for (const Int& d : factors_)
      if (d != p) return false;
    return true;
  }

  bool operator==(const AbelianInvariants& o) const {
    return factors_ == o.factors_;
  }
  bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }

  std::string str() const {
    if (factors_.empty()) return "1";
    std::string s = "[";
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += ",";
      s += factors_[i].get_str();
    }
    return s + "]";
  }

 private:
  std::vector<Int> factors_;
};

// Tensor product of finite abelian groups: (+)_{i,j} Z_gcd(a_i, b_j).
inline AbelianInvariants abelian_tensor(const AbelianInvariants& a,
                                        const AbelianInvariants& b) {
  std::vector<Int> orders;
  for (const Int& x : a.factors())
    for (const Int& y : b.factors()) orders.push_back(int_gcd(x, y));
  return AbelianInvariants::from_orders(std::move(orders));
}

}  // namespace schur
