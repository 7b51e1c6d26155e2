#include "qgenus/forms.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace qgenus {

namespace {

// u*a + v*b = g with g = gcd(a,b) >= 0.
void xgcd(const Int &a, const Int &b, Int &g, Int &u, Int &v) {
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Representative of r0 mod m in the window (-m/2, m/2], m > 0 even here.
Int center_mod(const Int &r0, const Int &m) {
  Int r = mod_floor(r0, m);
  if (2 * r > m) r -= m;
  return r;
}

void require_valid(const BinaryQuadraticForm &q) {
  Int D = q.discriminant();
  if (!is_valid_discriminant(D))
    throw std::domain_error("form discriminant " + D.get_str() + " is not a quadratic order discriminant");
  if (D < 0 && q.a < 0) throw std::domain_error("negative definite form; only positive definite handled");
}

} // namespace

Int BinaryQuadraticForm::content() const {
  Int g = gcd(gcd(a, b), c);
  return abs_int(g);
}

std::ostream &operator<<(std::ostream &os, const BinaryQuadraticForm &q) {
  return os << "(" << q.a << ", " << q.b << ", " << q.c << ")";
}

BinaryQuadraticForm principal_form(const Int &D) {
  if (!is_valid_discriminant(D)) throw std::domain_error("principal_form: invalid discriminant");
  Int b0 = mod_floor(D, 2);
  return {Int(1), b0, exact_div(b0 * b0 - D, 4)};
}

bool is_reduced(const BinaryQuadraticForm &q) {
  Int D = q.discriminant();
  if (D < 0) {
    if (q.a <= 0 || q.c <= 0) return false;
    Int ab = abs_int(q.b);
    if (ab > q.a || q.a > q.c) return false;
    if ((ab == q.a || q.a == q.c) && q.b < 0) return false;
    return true;
  }
  // Indefinite: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b,
  // checked with exact integer squares.
  if (q.b <= 0) return false;
  if (q.b * q.b >= D) return false;
  Int twoa = 2 * abs_int(q.a);
  Int lo = twoa + q.b;
  if (lo * lo <= D) return false;
  if (twoa > q.b) {
    Int hi = twoa - q.b;
    if (hi * hi >= D) return false;
  }
  return true;
}

BinaryQuadraticForm rho(const BinaryQuadraticForm &q) {
  Int D = q.discriminant();
  if (D <= 0) throw std::domain_error("rho: indefinite forms only");
  assert(q.c != 0 && "c = 0 forces a square discriminant");
  Int m = 2 * abs_int(q.c);
  Int r;
  if (q.c * q.c > D) {
    r = center_mod(-q.b, m);
  } else {
    // Largest r <= isqrt(D) with r = -b (mod m).
    Int t = isqrt_floor(D);
    r = t - mod_floor(t + q.b, m);
  }
  assert(divides(4 * q.c, r * r - D));
  return {q.c, r, exact_div(r * r - D, 4 * q.c)};
}

BinaryQuadraticForm reduce(const BinaryQuadraticForm &q) {
  require_valid(q);
  Int D = q.discriminant();
  BinaryQuadraticForm f = q;
  if (D < 0) {
    while (!is_reduced(f)) {
      if (f.a > f.c) {
        f = {f.c, -f.b, f.a};
        continue;
      }
      Int b = center_mod(f.b, 2 * f.a);
      if (b != f.b) {
        f = {f.a, b, exact_div(b * b - D, 4 * f.a)};
        continue;
      }
      // |b| <= a <= c with a boundary tie; flip b's sign.
      f.b = -f.b;
    }
    return f;
  }
  int guard = 0;
  while (!is_reduced(f)) {
    f = rho(f);
    if (++guard > 100000) throw std::logic_error("reduce: rho failed to converge");
  }
  // Canonical class representative: lexicographically least form on the cycle.
  BinaryQuadraticForm best = f;
  BinaryQuadraticForm walk = rho(f);
  while (!(walk == f)) {
    if (walk < best) best = walk;
    walk = rho(walk);
    if (++guard > 100000) throw std::logic_error("reduce: cycle failed to close");
  }
  return best;
}

std::vector<BinaryQuadraticForm> reduction_cycle(const BinaryQuadraticForm &q) {
  if (q.discriminant() <= 0) throw std::domain_error("reduction_cycle: indefinite forms only");
  if (!is_reduced(q)) throw std::domain_error("reduction_cycle: form is not reduced");
  std::vector<BinaryQuadraticForm> cycle{q};
  BinaryQuadraticForm walk = rho(q);
  while (!(walk == q)) {
    cycle.push_back(walk);
    walk = rho(walk);
    if (cycle.size() > 1000000) throw std::logic_error("reduction_cycle: cycle failed to close");
  }
  assert(cycle.size() % 2 == 0 && "a alternates sign around a reduced cycle");
  return cycle;
}

BinaryQuadraticForm opposite(const BinaryQuadraticForm &q) { return reduce({q.a, -q.b, q.c}); }

BinaryQuadraticForm compose(const BinaryQuadraticForm &l, const BinaryQuadraticForm &r) {
  Int D = l.discriminant();
  if (r.discriminant() != D) throw std::invalid_argument("compose: discriminants differ");
  if (!l.primitive() || !r.primitive()) throw std::invalid_argument("compose: forms must be primitive");
  Int s = exact_div(l.b + r.b, 2);
  Int g1, u, v;
  xgcd(l.a, r.a, g1, u, v);
  Int d, u1, w;
  xgcd(g1, s, d, u1, w);
  // (u1*u)*a1 + (u1*v)*a2 + w*s = d = gcd(a1, a2, s).
  Int A = exact_div(l.a * r.a, d * d);
  Int num = u1 * u * l.a * r.b + u1 * v * r.a * l.b + w * exact_div(l.b * r.b + D, 2);
  assert(divides(d, num) && "composition middle coefficient is integral");
  Int B = center_mod(exact_div(num, d), 2 * A);
  assert(divides(4 * A, B * B - D));
  return reduce({A, B, exact_div(B * B - D, 4 * A)});
}

std::vector<BinaryQuadraticForm> reduced_forms(const Int &D) {
  if (!is_valid_discriminant(D)) throw std::domain_error("reduced_forms: invalid discriminant");
  std::vector<BinaryQuadraticForm> out;
  if (D < 0) {
    // Reduced positive definite: |b| <= a <= c forces 3a^2 <= 4ac - b^2 = |D|.
    for (Int a = 1; a * a * 3 <= -D; ++a) {
      for (Int b = -a; b <= a; ++b) {
        if (mod_floor(b - D, 2) != 0) continue;
        Int num = b * b - D;
        if (!divides(4 * a, num)) continue;
        BinaryQuadraticForm q{a, b, exact_div(num, 4 * a)};
        if (is_reduced(q) && q.primitive()) out.push_back(q);
      }
    }
  } else {
    for (Int b = 1; b * b < D; ++b) {
      if (mod_floor(b - D, 2) != 0) continue;
      Int m = exact_div(D - b * b, 4); // ac = -m, m > 0
      for (const Int &a0 : positive_divisors(m)) {
        for (const Int &a : {Int(a0), Int(-a0)}) {
          BinaryQuadraticForm q{a, b, exact_div(-m, a)};
          if (is_reduced(q) && q.primitive()) out.push_back(q);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace qgenus
