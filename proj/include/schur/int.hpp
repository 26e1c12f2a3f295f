// Exact integer arithmetic helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "schur/error.hpp"

namespace schur {

using Int = mpz_class;

// mpz_class has no long long conversions; 64-bit long covers this platform.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = a*x + b*y
inline Int int_gcdext(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Exponent e with v == p^e, or -1 if v is not a power of p.
inline long p_power_exponent(const Int& v, long p) {
  if (v <= 0) return -1;
  Int x = v;
  long e = 0;
  while (x > 1) {
    if (x % p != 0) return -1;
    x /= p;
    ++e;
  }
  return e;
}

inline bool fits_int64(const Int& v) {
  return v.fits_slong_p();  // 64-bit long on this platform
}

inline std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) throw internal_error("integer too large for int64 field: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace schur
