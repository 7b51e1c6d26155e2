#pragma once

#include "qgenus/integer.hpp"

namespace qgenus {

/* Signed factorization: value = sign * prod p^e, primes ascending. */
struct PrimeFactorization {
  int sign = 1;
  std::vector<std::pair<Int, unsigned long>> factors;

  Int value() const;
  unsigned long exponent_of(const Int &p) const;
};

/* Trial division. Throws std::invalid_argument on n == 0. */
PrimeFactorization factorize(const Int &n);

bool is_prime(const Int &n);

/* All positive divisors of |n|, ascending. n != 0. */
std::vector<Int> positive_divisors(const Int &n);

/* Primes <= n, ascending. */
std::vector<long> primes_up_to(long n);

/* Kronecker symbol (d | n), fully extended: (d | -1) = sign(d),
 * (d | 2) = 0 for even d, +1 for d = +-1 mod 8, -1 for d = +-3 mod 8,
 * (d | 0) = 1 iff d = +-1. Completely multiplicative in n. */
int kronecker(const Int &d, const Int &n);

/* Discriminant of a quadratic field: squarefree d = 1 mod 4 (d != 1),
 * or 4m with m squarefree, m = 2 or 3 mod 4. */
bool is_fundamental_discriminant(const Int &d);

/* Nonzero, = 0 or 1 mod 4, not a perfect square. */
bool is_valid_discriminant(const Int &d);

struct ConductorDecomposition {
  Int d_k; // fundamental discriminant
  Int f;   // conductor, D = f^2 d_k
};

/* Splits a valid discriminant as D = f^2 d_K.
 * Throws std::domain_error on invalid input. */
ConductorDecomposition conductor_decompose(const Int &D);

/* Factors a fundamental discriminant into prime discriminants
 * (p* = (-1)^((p-1)/2) p for odd p, plus one of -4, 8, -8), ascending.
 * The factors are coprime and multiply back to d_k.
 * Throws std::domain_error on non-fundamental input. */
std::vector<Int> prime_discriminant_decomposition(const Int &d_k);

} // namespace qgenus
