#pragma once

#include "qgenus/arith.hpp"

namespace qgenus {

/* Order of conductor f in the quadratic field of discriminant d_K:
 * O = Z + Z w with w = f(d_K + sqrt(d_K))/2, discriminant D = f^2 d_K. */
class QuadraticOrder {
public:
  QuadraticOrder(Int d_k, Int f);
  static QuadraticOrder from_discriminant(const Int &D);

  const Int &fundamental_discriminant() const { return d_k_; }
  const Int &conductor() const { return f_; }
  const Int &discriminant() const { return disc_; }
  bool real() const { return d_k_ > 0; }

  Int w_trace() const { return f_ * d_k_; }
  Int w_norm() const { return exact_div(f_ * f_ * d_k_ * (d_k_ - 1), 4); }

private:
  Int d_k_, f_, disc_;
};

/* Genus character of the order, encoded by its reciprocal pair of
 * fundamental divisors: delta1 * delta2 = f1^2 d_K with f1 | f, f0 = f/f1.
 * delta1 <= delta2; the pair of the trivial character is {1, d_K}, and it is
 * the only pair containing 1. */
struct GenusCharacter {
  Int delta1, delta2;
  Int f1, f0;
  bool trivial() const { return delta1 == 1 || delta2 == 1; }
};

/* Divisors delta of D (either sign) with delta = 1 or delta a fundamental
 * discriminant, and D/delta = 0 or 1 mod 4. Ascending. */
std::vector<Int> fundamental_divisors(const QuadraticOrder &order);

/* The unique fundamental divisor delta2 with delta1 * delta2 = f1^2 d_K,
 * f1 | f. Throws std::domain_error if delta1 is not a fundamental divisor. */
Int reciprocal(const QuadraticOrder &order, const Int &delta1);

/* All genus characters, one per unordered reciprocal pair, sorted by
 * (delta1, delta2). First entry is the trivial character. */
std::vector<GenusCharacter> genus_characters(const QuadraticOrder &order);

/* Genus number in the narrow sense, by the discriminant-residue count
 * (nu = number of distinct odd primes dividing D):
 * 2^(nu-1) if D = 1 mod 4 or D = 4 mod 16,
 * 2^nu if D = 8,12,16,24,28 mod 32, 2^(nu+1) if D = 0 mod 32. */
Int genus_number_narrow(const QuadraticOrder &order);

/* Genus number in the wide sense: equals the narrow one when D < 0, or when
 * every odd p | D is 1 mod 4 and D != 0 mod 16; otherwise half of it. */
Int genus_number_wide(const QuadraticOrder &order);

/* e_p = [Z_p^x : N((O tensor Z_p)^x)]. The product over all p equals twice
 * the narrow genus number. */
Int local_norm_index(const QuadraticOrder &order, const Int &p);

/* -1 is a norm from the real field of discriminant d_k iff every odd prime
 * dividing d_k is 1 mod 4. Throws std::domain_error for imaginary fields. */
bool minus_one_is_norm(const Int &d_k);
bool minus_one_is_norm(const QuadraticOrder &order);

} // namespace qgenus
