#pragma once

// Dirichlet coefficients of the genus-character L-function
//   L(s, chi) = sum over proper O_f-ideals of chi(class(I)) / N(I)^s
// computed three independent ways: literal ideal enumeration, a local
// prime-by-prime analysis of the ideal counts, and the closed form
//   L(s, chi) = L(s, chi_delta1) * L(s, chi_delta2) * prod_{p | f0} C_p(p^-s)
// whose correction polynomials C_p have degree 2*ord_p(f0). Agreement of the
// three integer coefficient streams is the core verification of the theory.

#include "qgenus/classgroup.hpp"
#include "qgenus/integer.hpp"
#include "qgenus/order.hpp"

#include <optional>
#include <vector>

namespace qgenus {

struct CoefficientSeries {
  long n_max = 0;
  std::vector<Int> a; // a[1..n_max]; a[0] unused and zero

  const Int &at(long n) const { return a.at(static_cast<std::size_t>(n)); }
};

struct LocalFactorPolynomial {
  Int p;
  std::vector<Int> coeffs; // C_p = sum coeffs[j] X^j, X standing for p^-s
};

// Class ids of every proper ideal of norm n, for all n <= n_max; built once
// per order and shared by all characters.
class IdealClassTable {
public:
  IdealClassTable(const NarrowClassGroup &group, long n_max);

  long n_max() const { return n_max_; }
  const std::vector<std::size_t> &classes(long n) const { return by_norm_.at(static_cast<std::size_t>(n)); }

private:
  long n_max_;
  std::vector<std::vector<std::size_t>> by_norm_;
};

// Engine 1: a_n as a literal sum of character values over enumerated ideals.
CoefficientSeries lhs_coeffs_bruteforce(const CharacterTable &chars, const IdealClassTable &ideals,
                                        const GenusCharacter &chi);
CoefficientSeries lhs_coeffs_bruteforce(const QuadraticOrder &order, const GenusCharacter &chi, long n_max);

// Engine 2: multiplicative assembly from the local ideal-count analysis at
// each prime; no ideals are enumerated and no class group is built.
CoefficientSeries lhs_coeffs_local(const QuadraticOrder &order, const GenusCharacter &chi, long n_max);

// Engine 3: the closed form. Coefficients of L(s,delta1)L(s,delta2) by
// divisor convolution, then the C_p corrections for p | f0.
CoefficientSeries rhs_coeffs(const QuadraticOrder &order, const GenusCharacter &chi, long n_max);

// The correction polynomials C_p for p | f0, ascending in p. Division by
// (1 - p X^2) is exact; a nonzero remainder would throw.
std::vector<LocalFactorPolynomial> rhs_local_factors(const QuadraticOrder &order, const GenusCharacter &chi);

struct SeriesMismatch {
  long n;
  Int left, right;
};

// First disagreement over the common index range, nullopt when identical.
std::optional<SeriesMismatch> compare_series(const CoefficientSeries &l, const CoefficientSeries &r);

struct Evaluation {
  double value;      // partial sum up to n_max
  double tail_bound; // rigorous bound on the dropped tail; +inf when s <= 3/2
  long n_max;
};

// Partial sum of sum a_n n^-s with a tail bound from |a_n| <= majorant*2*sqrt(n).
// Requires s > 1 (divergent otherwise); only s > 3/2 gets a finite bound.
Evaluation evaluate(const CoefficientSeries &series, double s, double majorant = 1.0);

// Numerical value of the closed form along its own route: truncated Dirichlet
// sums for L(s, delta1) and L(s, delta2) times the exact correction values
// C_p(p^-s), with the truncation errors propagated through the product.
Evaluation evaluate_closed_form(const QuadraticOrder &order, const GenusCharacter &chi, double s, long n_max);

// Valid majorant for every genus character of the order: prod_{p | f} 2 p^e_p.
Int coefficient_majorant(const QuadraticOrder &order);

} // namespace qgenus
