#pragma once

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgenus {

/* Exact unbounded integers everywhere; form composition and ideal norms
 * overflow 64 bits even at small discriminants once conductors stack up. */
using Int = mpz_class;

/* Residue in [0, m), m > 0. Works for negative a, unlike plain %. */
inline Int mod_floor(const Int &a, const Int &m) {
  assert(m > 0);
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Int &d, const Int &n) {
  assert(d != 0);
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/* Quotient n/d under the promise d | n. */
inline Int exact_div(const Int &n, const Int &d) {
  assert(d != 0 && divides(d, n));
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int isqrt_floor(const Int &n) {
  assert(n >= 0);
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int &n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_int(const Int &base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/* ord_p(n) for n != 0. */
inline unsigned long valuation(const Int &n, const Int &p) {
  assert(n != 0 && p > 1);
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline long to_long(const Int &n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + n.get_str());
  return n.get_si();
}

inline Int abs_int(const Int &n) { return n >= 0 ? n : Int(-n); }

} // namespace qgenus
