#pragma once

// Integral binary quadratic forms a x^2 + b x y + c y^2 of discriminant
// D = b^2 - 4ac. Reduction and Gauss composition in both signatures; for
// D < 0 only positive definite forms are handled. Proper (SL2) equivalence
// classes of primitive forms realize the narrow class group of the order
// of discriminant D.

#include "qgenus/arith.hpp"
#include "qgenus/integer.hpp"

#include <iosfwd>
#include <vector>

namespace qgenus {

struct BinaryQuadraticForm {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }
  Int content() const;
  bool primitive() const { return content() == 1; }
  Int eval(const Int &x, const Int &y) const { return a * x * x + b * x * y + c * y * y; }

  friend bool operator==(const BinaryQuadraticForm &l, const BinaryQuadraticForm &r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
  friend bool operator<(const BinaryQuadraticForm &l, const BinaryQuadraticForm &r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  }
};

std::ostream &operator<<(std::ostream &os, const BinaryQuadraticForm &q);

// (1, b0, c0) with b0 = D mod 2; the class of the principal ideal lattice.
BinaryQuadraticForm principal_form(const Int &D);

bool is_reduced(const BinaryQuadraticForm &q);

// Right neighbor in the reduction chain; requires D > 0 (includes indefinite
// reduced-cycle stepping). rho(a,b,c) = (c, r, (r^2-D)/4c) with r ~ -b mod 2|c|.
BinaryQuadraticForm rho(const BinaryQuadraticForm &q);

// Reduce a primitive form. D < 0: classic descent to |b| <= a <= c with tie
// normalization. D > 0: iterate rho into the reduced cycle, then return the
// lexicographically least cycle member so every class gets one canonical form.
BinaryQuadraticForm reduce(const BinaryQuadraticForm &q);

// The full rho-cycle through a reduced form, starting at q. D > 0 only.
std::vector<BinaryQuadraticForm> reduction_cycle(const BinaryQuadraticForm &q);

// Inverse class: (a, -b, c), reduced.
BinaryQuadraticForm opposite(const BinaryQuadraticForm &q);

// Gauss composition of primitive forms of equal discriminant, reduced output.
BinaryQuadraticForm compose(const BinaryQuadraticForm &l, const BinaryQuadraticForm &r);

// All reduced primitive forms of discriminant D, sorted. For D > 0 this is a
// union of complete rho-cycles, several forms per class.
std::vector<BinaryQuadraticForm> reduced_forms(const Int &D);

} // namespace qgenus
