#include "qgenus/ideals.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qgenus {

namespace {

// Membership of A + B*omega_K in L, where L = Z*(x, 0) + Z*(y, z*f) on the
// basis {1, omega_K}. The {1, w} generators rewrite this way since w = f*omega.
bool contains_omega_coords(const QuadraticOrder &order, const LatticeHNF &L, const Int &A, const Int &B) {
  Int zf = L.z * order.conductor();
  if (!divides(zf, B)) return false;
  return divides(L.x, A - exact_div(B, zf) * L.y);
}

// Is L stable under multiplication by g*omega_K?
bool stable_under(const QuadraticOrder &order, const LatticeHNF &L, const Int &g) {
  const Int &dk = order.fundamental_discriminant();
  Int nk = exact_div(dk * dk - dk, 4); // omega^2 = dk*omega - nk
  // g*omega * x = (0, x*g)
  if (!contains_omega_coords(order, L, 0, L.x * g)) return false;
  // g*omega * (y + z*f*omega) = (-g*z*f*nk, g*(y + z*f*dk))
  Int zf = L.z * order.conductor();
  return contains_omega_coords(order, L, -g * zf * nk, g * (L.y + zf * dk));
}

void validate_normal_form(const QuadraticOrder &order, const ProperIdeal &I) {
  if (I.ell < 1 || I.a < 1 || I.b <= -I.a || I.b > I.a)
    throw std::invalid_argument("proper ideal: need ell, a >= 1 and -a < b <= a");
  Int num = I.b * I.b - order.discriminant();
  if (mod_floor(I.b - order.discriminant(), 2) != 0 || !divides(4 * I.a, num))
    throw std::invalid_argument("proper ideal: b^2 = D (mod 4a) fails");
}

} // namespace

bool lattice_contains(const LatticeHNF &L, const Int &u, const Int &v) {
  if (!divides(L.z, v)) return false;
  return divides(L.x, u - exact_div(v, L.z) * L.y);
}

bool is_ideal_lattice(const QuadraticOrder &order, const LatticeHNF &L) {
  if (L.x < 1 || L.z < 1 || L.y < 0 || L.y >= L.x) throw std::invalid_argument("lattice not in HNF");
  if (!divides(L.z, L.x) || !divides(L.z, L.y)) return false;
  Int ap = exact_div(L.x, L.z);
  Int bt = exact_div(L.y, L.z);
  // w*L inside L reduces to a' | N(bt + w).
  Int norm = bt * bt + bt * order.w_trace() + order.w_norm();
  return divides(ap, norm);
}

std::optional<Int> multiplier_conductor(const QuadraticOrder &order, const LatticeHNF &L) {
  if (!is_ideal_lattice(order, L)) return std::nullopt;
  for (const Int &g : positive_divisors(order.conductor()))
    if (stable_under(order, L, g)) return g;
  // g = f is w itself, already verified by is_ideal_lattice.
  throw std::logic_error("multiplier_conductor: f*omega must stabilize an ideal");
}

bool is_proper(const QuadraticOrder &order, const LatticeHNF &L) {
  std::optional<Int> g = multiplier_conductor(order, L);
  return g && *g == order.conductor();
}

ProperIdeal lattice_to_ideal(const QuadraticOrder &order, const LatticeHNF &L) {
  if (!is_proper(order, L)) throw std::domain_error("lattice_to_ideal: lattice is not a proper O_f-ideal");
  Int a = exact_div(L.x, L.z);
  Int bt = exact_div(L.y, L.z);
  // y/z + w = (-b + sqrt(D))/2 with b = -(2*(y/z) + f*d_K), shifted into (-a, a].
  Int b = mod_floor(-(2 * bt + order.w_trace()), 2 * a);
  if (b > a) b -= 2 * a;
  return {L.z, a, b};
}

LatticeHNF ideal_to_lattice(const QuadraticOrder &order, const ProperIdeal &I) {
  validate_normal_form(order, I);
  Int bt = mod_floor(exact_div(-I.b - order.w_trace(), 2), I.a);
  return {I.ell * I.a, I.ell * bt, I.ell};
}

std::vector<ProperIdeal> enumerate_proper_ideals(const QuadraticOrder &order, const Int &n) {
  if (n < 1) throw std::invalid_argument("enumerate_proper_ideals: norm must be positive");
  std::vector<ProperIdeal> out;
  for (const Int &x : positive_divisors(n)) {
    Int z = exact_div(n, x);
    if (!divides(z, x)) continue;
    Int ap = exact_div(x, z);
    for (Int bt = 0; bt < ap; ++bt) {
      Int norm = bt * bt + bt * order.w_trace() + order.w_norm();
      if (!divides(ap, norm)) continue;
      LatticeHNF L{x, bt * z, z};
      if (is_proper(order, L)) out.push_back(lattice_to_ideal(order, L));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int count_proper_ideals_local(const QuadraticOrder &order, const Int &p, unsigned long k) {
  if (!is_prime(p)) throw std::invalid_argument("count_proper_ideals_local: p must be prime");
  int chi = kronecker(order.fundamental_discriminant(), p);
  auto n_max = [&](unsigned long j) -> Int {
    if (chi == 1) return Int(j + 1);
    if (chi == -1) return Int(j % 2 == 0 ? 1 : 0);
    return Int(1);
  };
  unsigned long e = valuation(order.conductor(), p);
  if (e == 0) return n_max(k);
  if (k < 2 * e) return k % 2 == 1 ? Int(0) : pow_int(p, k / 2);
  return pow_int(p, e - 1) * (p - chi) * n_max(k - 2 * e);
}

BinaryQuadraticForm ideal_to_form(const QuadraticOrder &order, const ProperIdeal &I) {
  validate_normal_form(order, I);
  BinaryQuadraticForm q{I.a, I.b, exact_div(I.b * I.b - order.discriminant(), 4 * I.a)};
  if (!q.primitive()) throw std::invalid_argument("ideal_to_form: improper ideal, form is imprimitive");
  return q;
}

std::vector<ProperIdeal> prime_ideals_above(const QuadraticOrder &order, const Int &q) {
  if (!is_prime(q)) throw std::invalid_argument("prime_ideals_above: q must be prime");
  if (divides(q, order.conductor())) throw std::invalid_argument("prime_ideals_above: q must not divide the conductor");
  if (kronecker(order.discriminant(), q) >= 0) return enumerate_proper_ideals(order, q);
  return {ProperIdeal{q, Int(1), mod_floor(order.discriminant(), 2)}};
}

} // namespace qgenus
