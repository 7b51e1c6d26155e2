#include "qgenus/order.hpp"

#include <algorithm>
#include <set>

namespace qgenus {

QuadraticOrder::QuadraticOrder(Int d_k, Int f) : d_k_(std::move(d_k)), f_(std::move(f)) {
  if (!is_fundamental_discriminant(d_k_))
    throw std::domain_error("QuadraticOrder: " + d_k_.get_str() + " is not a fundamental discriminant");
  if (f_ < 1) throw std::domain_error("QuadraticOrder: conductor must be positive");
  disc_ = f_ * f_ * d_k_;
}

QuadraticOrder QuadraticOrder::from_discriminant(const Int &D) {
  ConductorDecomposition cd = conductor_decompose(D);
  return QuadraticOrder(cd.d_k, cd.f);
}

std::vector<Int> fundamental_divisors(const QuadraticOrder &order) {
  const Int &D = order.discriminant();
  std::vector<Int> out;
  for (const Int &d : positive_divisors(D)) {
    for (const Int &delta : {Int(d), Int(-d)}) {
      if (delta != 1 && !is_fundamental_discriminant(delta)) continue;
      Int q = exact_div(D, delta);
      Int r = mod_floor(q, 4);
      if (r == 0 || r == 1) out.push_back(delta);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int reciprocal(const QuadraticOrder &order, const Int &delta1) {
  std::vector<Int> divisors = fundamental_divisors(order);
  if (!std::binary_search(divisors.begin(), divisors.end(), delta1))
    throw std::domain_error("reciprocal: " + delta1.get_str() + " is not a fundamental divisor of " +
                            order.discriminant().get_str());
  std::vector<Int> hits;
  for (const Int &delta2 : divisors) {
    // delta1*delta2 = f1^2 d_K  <=>  D/(delta1 delta2) = f0^2 with f0 | f
    Int prod = delta1 * delta2;
    if (!divides(prod, order.discriminant())) continue;
    Int q = exact_div(order.discriminant(), prod);
    if (q <= 0 || !is_perfect_square(q)) continue;
    if (!divides(isqrt_floor(q), order.conductor())) continue;
    hits.push_back(delta2);
  }
  if (hits.size() != 1)
    throw std::logic_error("reciprocal: pairing not unique for delta1 = " + delta1.get_str());
  return hits[0];
}

std::vector<GenusCharacter> genus_characters(const QuadraticOrder &order) {
  std::set<std::pair<Int, Int>> pairs;
  for (const Int &delta1 : fundamental_divisors(order)) {
    Int delta2 = reciprocal(order, delta1);
    pairs.insert({std::min(delta1, delta2), std::max(delta1, delta2)});
  }
  std::vector<GenusCharacter> out;
  for (const auto &[d1, d2] : pairs) {
    GenusCharacter chi;
    chi.delta1 = d1;
    chi.delta2 = d2;
    chi.f1 = isqrt_floor(exact_div(d1 * d2, order.fundamental_discriminant()));
    chi.f0 = exact_div(order.conductor(), chi.f1);
    out.push_back(chi);
  }
  std::sort(out.begin(), out.end(),
            [](const GenusCharacter &a, const GenusCharacter &b) {
              return a.delta1 != b.delta1 ? a.delta1 < b.delta1 : a.delta2 < b.delta2;
            });
  // Trivial pair (1, d_K) first for readability.
  auto triv = std::find_if(out.begin(), out.end(), [](const GenusCharacter &c) { return c.trivial(); });
  if (triv != out.end()) std::rotate(out.begin(), triv, triv + 1);
  return out;
}

Int genus_number_narrow(const QuadraticOrder &order) {
  const Int &D = order.discriminant();
  unsigned long nu = 0;
  for (const auto &[p, e] : factorize(D).factors)
    if (p != 2) ++nu;
  Int r32 = mod_floor(D, 32);
  if (mod_floor(D, 4) == 1 || mod_floor(D, 16) == 4) return pow_int(2, nu == 0 ? 0 : nu - 1);
  if (r32 == 8 || r32 == 12 || r32 == 16 || r32 == 24 || r32 == 28) return pow_int(2, nu);
  if (r32 == 0) return pow_int(2, nu + 1);
  throw std::logic_error("genus_number_narrow: unreachable residue for D = " + D.get_str());
}

Int genus_number_wide(const QuadraticOrder &order) {
  Int narrow = genus_number_narrow(order);
  if (order.discriminant() < 0) return narrow;
  bool odd_ok = true;
  for (const auto &[p, e] : factorize(order.discriminant()).factors)
    if (p != 2 && mod_floor(p, 4) != 1) odd_ok = false;
  bool two_ok = mod_floor(order.discriminant(), 16) != 0;
  if (odd_ok && two_ok) return narrow;
  return exact_div(narrow, 2);
}

Int local_norm_index(const QuadraticOrder &order, const Int &p) {
  if (!is_prime(p)) throw std::domain_error("local_norm_index: p must be prime");
  const Int &d_k = order.fundamental_discriminant();
  const Int &f = order.conductor();
  if (!divides(p, f)) {
    // Maximal at p: index 2 iff p ramifies in K.
    return divides(p, d_k) ? 2 : 1;
  }
  if (p != 2) return 2; // norms of local units are the squares
  unsigned long e2 = valuation(f, 2);
  bool dk_odd = mpz_odd_p(d_k.get_mpz_t()) != 0;
  if (e2 == 1 && dk_odd) return 1;
  if (e2 == 1 && mod_floor(d_k, 16) == 12) return 2;
  if (e2 == 2 && mod_floor(d_k, 4) == 1) return 2;
  if (mod_floor(order.discriminant(), 32) != 0)
    throw std::logic_error("local_norm_index: unreachable 2-adic case for D = " + order.discriminant().get_str());
  return 4;
}

bool minus_one_is_norm(const Int &d_k) {
  if (!is_fundamental_discriminant(d_k) || d_k < 0)
    throw std::domain_error("minus_one_is_norm: need a real fundamental discriminant");
  for (const auto &[p, e] : factorize(d_k).factors)
    if (p != 2 && mod_floor(p, 4) != 1) return false;
  return true;
}

bool minus_one_is_norm(const QuadraticOrder &order) { return minus_one_is_norm(order.fundamental_discriminant()); }

} // namespace qgenus
