#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace Eigen {

// Exact arbitrary-precision integer scalar for Eigen dense types.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

}  // namespace Eigen

namespace polyfan {

// All arithmetic in this library is exact; there is no floating point anywhere.
using Int = mpz_class;

struct GcdExt {
  Int g;  // gcd(a, b), always >= 0
  Int s;
  Int t;  // s*a + t*b == g
};

// Extended Euclid. gcd_ext(0, 0) == {0, 0, 0}; callers guard against it.
inline GcdExt gcd_ext(const Int& a, const Int& b) {
  GcdExt r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline int sign(const Int& a) { return sgn(a); }

// Quotient rounded toward zero.
inline Int div_trunc(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Quotient rounded toward minus infinity.
inline Int div_floor(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Quotient rounded toward plus infinity.
inline Int div_ceil(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Exact quotient; b must divide a.
inline Int div_exact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline long long to_longlong(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace polyfan
