#include "qgenus/arith.hpp"

#include <algorithm>

namespace qgenus {

Int PrimeFactorization::value() const {
  Int v = sign;
  for (const auto &[p, e] : factors) v *= pow_int(p, e);
  return v;
}

unsigned long PrimeFactorization::exponent_of(const Int &p) const {
  for (const auto &[q, e] : factors)
    if (q == p) return e;
  return 0;
}

PrimeFactorization factorize(const Int &n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  PrimeFactorization pf;
  pf.sign = n < 0 ? -1 : 1;
  Int rest = abs_int(n);

  auto strip = [&](const Int &p) {
    unsigned long e = 0;
    while (divides(p, rest)) {
      rest = exact_div(rest, p);
      ++e;
    }
    if (e) pf.factors.emplace_back(p, e);
  };

  strip(2);
  for (Int d = 3; d * d <= rest; d += 2) strip(d);
  if (rest > 1) pf.factors.emplace_back(rest, 1);
  return pf;
}

bool is_prime(const Int &n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Int> positive_divisors(const Int &n) {
  PrimeFactorization pf = factorize(n);
  std::vector<Int> divs{1};
  for (const auto &[p, e] : pf.factors) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  for (long p = 2; p <= n; ++p) {
    if (comp[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (long m = p * p; m <= n; m += p) comp[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

int kronecker(const Int &d, const Int &n) {
  Int a = d, b = n;
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  bool a_even = mpz_even_p(a.get_mpz_t()) != 0;
  if (a_even && mpz_even_p(b.get_mpz_t())) return 0;

  int res = 1;
  if (b < 0) {
    b = -b;
    if (a < 0) res = -res; // (a | -1)
  }
  unsigned long v = mpz_scan1(b.get_mpz_t(), 0);
  if (v > 0) {
    if (a_even) return 0;
    b >>= v;
    unsigned long am8 = mod_floor(a, 8).get_ui();
    if ((v & 1) && (am8 == 3 || am8 == 5)) res = -res; // (a | 2) by a mod 8
  }

  // b odd positive from here: Jacobi loop with reciprocity.
  a = mod_floor(a, b);
  while (a != 0) {
    v = mpz_scan1(a.get_mpz_t(), 0);
    if (v > 0) {
      a >>= v;
      unsigned long bm8 = mod_floor(b, 8).get_ui();
      if ((v & 1) && (bm8 == 3 || bm8 == 5)) res = -res; // (2 | b)
    }
    if (mod_floor(a, 4) == 3 && mod_floor(b, 4) == 3) res = -res;
    std::swap(a, b);
    a = mod_floor(a, b);
  }
  return b == 1 ? res : 0;
}

bool is_fundamental_discriminant(const Int &d) {
  if (d == 0 || d == 1) return false;
  Int r = mod_floor(d, 4);
  if (r == 1) {
    PrimeFactorization pf = factorize(d);
    for (const auto &[p, e] : pf.factors)
      if (e > 1) return false;
    return true;
  }
  if (r != 0) return false;
  Int m = exact_div(d, 4);
  Int rm = mod_floor(m, 4);
  if (rm != 2 && rm != 3) return false;
  PrimeFactorization pf = factorize(m);
  for (const auto &[p, e] : pf.factors)
    if (e > 1) return false;
  return true;
}

bool is_valid_discriminant(const Int &d) {
  if (d == 0) return false;
  Int r = mod_floor(d, 4);
  if (r == 2 || r == 3) return false;
  return !is_perfect_square(d);
}

ConductorDecomposition conductor_decompose(const Int &D) {
  if (D == 0) throw std::domain_error("conductor_decompose: zero discriminant");
  Int r = mod_floor(D, 4);
  if (r == 2 || r == 3) throw std::domain_error("conductor_decompose: " + D.get_str() + " is not 0 or 1 mod 4");
  if (is_perfect_square(D)) throw std::domain_error("conductor_decompose: " + D.get_str() + " is a perfect square");

  PrimeFactorization pf = factorize(D);
  Int kernel = pf.sign; // squarefree part of D
  for (const auto &[p, e] : pf.factors)
    if (e & 1) kernel *= p;
  Int s = isqrt_floor(exact_div(D, kernel));
  if (mod_floor(kernel, 4) == 1) return {kernel, s};
  // d_K = 4*kernel; D = 0 mod 4 forces s even here.
  return {4 * kernel, exact_div(s, 2)};
}

std::vector<Int> prime_discriminant_decomposition(const Int &d_k) {
  if (!is_fundamental_discriminant(d_k))
    throw std::domain_error("prime_discriminant_decomposition: " + d_k.get_str() + " is not fundamental");
  std::vector<Int> parts;
  Int rest = d_k;
  PrimeFactorization pf = factorize(d_k);
  for (const auto &[p, e] : pf.factors) {
    if (p == 2) continue;
    Int pstar = mod_floor(p, 4) == 1 ? p : Int(-p);
    parts.push_back(pstar);
    rest = exact_div(rest, pstar);
  }
  if (rest != 1) {
    if (rest != -4 && rest != 8 && rest != -8)
      throw std::logic_error("prime_discriminant_decomposition: bad 2-part " + rest.get_str());
    parts.push_back(rest);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

} // namespace qgenus
