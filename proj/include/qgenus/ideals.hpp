#pragma once

// Ideal lattices of a quadratic order O_f = Z + Z*w, w = f*(d_K + sqrt(d_K))/2.
// A full sublattice in HNF on the basis {1, w} is Z*x + Z*(y + z*w) with
// 0 <= y < x; it has index x*z. An O_f-ideal is such a lattice stable under
// multiplication by w; it is proper when O_f is its exact multiplier ring.
// Proper ideals carry the normal form ell*(Z*a + Z*(-b + sqrt(D))/2) with
// -a < b <= a, which maps onto binary quadratic forms.

#include "qgenus/forms.hpp"
#include "qgenus/integer.hpp"
#include "qgenus/order.hpp"

#include <optional>
#include <vector>

namespace qgenus {

struct LatticeHNF {
  Int x, y, z; // Z*x + Z*(y + z*w), 0 <= y < x, index x*z

  friend bool operator==(const LatticeHNF &l, const LatticeHNF &r) {
    return l.x == r.x && l.y == r.y && l.z == r.z;
  }
  friend bool operator<(const LatticeHNF &l, const LatticeHNF &r) {
    if (l.x != r.x) return l.x < r.x;
    if (l.y != r.y) return l.y < r.y;
    return l.z < r.z;
  }
};

struct ProperIdeal {
  Int ell, a, b; // ell*(Z*a + Z*(-b + sqrt(D))/2), -a < b <= a, norm ell^2*a

  Int norm() const { return ell * ell * a; }

  friend bool operator==(const ProperIdeal &l, const ProperIdeal &r) {
    return l.ell == r.ell && l.a == r.a && l.b == r.b;
  }
  friend bool operator<(const ProperIdeal &l, const ProperIdeal &r) {
    if (l.ell != r.ell) return l.ell < r.ell;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }
};

// Does u + v*w lie in L?
bool lattice_contains(const LatticeHNF &L, const Int &u, const Int &v);

// Stability of L under w, i.e. L is an ideal of O_f = Z[w].
bool is_ideal_lattice(const QuadraticOrder &order, const LatticeHNF &L);

// Smallest g >= 1 with g*omega_K * L inside L, i.e. the conductor of the
// multiplier ring of L inside the maximal order. Divides f whenever L is an
// O_f-ideal; nullopt when L is not even stable under f*omega_K.
std::optional<Int> multiplier_conductor(const QuadraticOrder &order, const LatticeHNF &L);

// Proper: multiplier ring is exactly O_f.
bool is_proper(const QuadraticOrder &order, const LatticeHNF &L);

// Conversions between the HNF picture and the normal form. lattice_to_ideal
// throws std::domain_error unless L is a proper O_f-ideal.
ProperIdeal lattice_to_ideal(const QuadraticOrder &order, const LatticeHNF &L);
LatticeHNF ideal_to_lattice(const QuadraticOrder &order, const ProperIdeal &I);

// All proper O_f-ideals of index n, sorted by (ell, a, b). Brute force over
// HNF lattices filtered through multiplier_conductor; this is the reference
// enumeration the closed-form counts are tested against.
std::vector<ProperIdeal> enumerate_proper_ideals(const QuadraticOrder &order, const Int &n);

// Closed-form count of proper ideals of norm p^k.
Int count_proper_ideals_local(const QuadraticOrder &order, const Int &p, unsigned long k);

// The form (a, b, (b^2 - D)/(4a)) attached to the normal form; primitive
// exactly because the ideal is proper. Throws std::invalid_argument on an
// inconsistent or improper triple.
BinaryQuadraticForm ideal_to_form(const QuadraticOrder &order, const ProperIdeal &I);

// Proper prime ideals over q: norm q for q split or ramified in the order,
// q*O_f (norm q^2) for q inert. Requires q prime and coprime to f.
std::vector<ProperIdeal> prime_ideals_above(const QuadraticOrder &order, const Int &q);

} // namespace qgenus
