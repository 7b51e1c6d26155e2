#include "qgenus/lseries.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgenus {

namespace {

void require_character(const QuadraticOrder &order, const GenusCharacter &chi) {
  if (chi.delta1 * chi.delta2 != chi.f1 * chi.f1 * order.fundamental_discriminant() ||
      chi.f1 * chi.f0 != order.conductor())
    throw std::invalid_argument("genus character does not belong to this order");
}

// Coefficients u_k of 1/((1 - phi X)(1 - psi X)): u_k = sum_{i+j=k} phi^i psi^j.
std::vector<Int> unramified_series(int phi, int psi, long k_max) {
  std::vector<Int> u(static_cast<std::size_t>(k_max) + 1);
  u[0] = 1;
  if (k_max >= 1) u[1] = phi + psi;
  for (long k = 2; k <= k_max; ++k)
    u[static_cast<std::size_t>(k)] =
        (phi + psi) * u[static_cast<std::size_t>(k - 1)] - (phi * psi) * u[static_cast<std::size_t>(k - 2)];
  return u;
}

// Character sums over proper ideals of norm p^k, from the local structure of
// the ideal lattice at p. For p coprime to f this is the unramified series;
// for p | f the scaled copies p^j * I contribute p^j at X^(2j) while the
// primitive strand survives with character weight only when ord_p(f0) = e,
// in which case p^(e-1)(p - chi_K(p)) primitive ideals sit over each
// unramified ideal of norm p^(k-2e).
std::vector<Int> local_series(const QuadraticOrder &order, const GenusCharacter &chi, const Int &p, long k_max) {
  int phi = kronecker(chi.delta1, p);
  int psi = kronecker(chi.delta2, p);
  unsigned long e = valuation(order.conductor(), p);
  if (e == 0) return unramified_series(phi, psi, k_max);
  std::vector<Int> c(static_cast<std::size_t>(k_max) + 1);
  unsigned long m = valuation(chi.f0, p);
  for (unsigned long j = 0; j <= std::min(m, e - 1); ++j)
    if (2 * j <= static_cast<unsigned long>(k_max)) c[2 * j] = pow_int(p, j);
  if (m == e && 2 * e <= static_cast<unsigned long>(k_max)) {
    int chi_k = kronecker(order.fundamental_discriminant(), p);
    Int scale = pow_int(p, e - 1) * (p - chi_k);
    std::vector<Int> u = unramified_series(phi, psi, k_max - static_cast<long>(2 * e));
    for (std::size_t k = 0; k < u.size(); ++k) c[2 * e + k] += scale * u[k];
  }
  return c;
}

// Smallest prime factor sieve; spf[1] = 1.
std::vector<long> spf_sieve(long n_max) {
  std::vector<long> spf(static_cast<std::size_t>(n_max) + 1, 0);
  for (long i = 2; i <= n_max; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (long j = i; j <= n_max; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
  }
  if (n_max >= 1) spf[1] = 1;
  return spf;
}

} // namespace

IdealClassTable::IdealClassTable(const NarrowClassGroup &group, long n_max) : n_max_(n_max) {
  if (n_max < 1) throw std::invalid_argument("IdealClassTable: n_max must be positive");
  by_norm_.resize(static_cast<std::size_t>(n_max) + 1);
  for (long n = 1; n <= n_max; ++n)
    for (const ProperIdeal &I : enumerate_proper_ideals(group.order(), Int(n)))
      by_norm_[static_cast<std::size_t>(n)].push_back(group.class_of(ideal_to_form(group.order(), I)));
}

CoefficientSeries lhs_coeffs_bruteforce(const CharacterTable &chars, const IdealClassTable &ideals,
                                        const GenusCharacter &chi) {
  CoefficientSeries s;
  s.n_max = ideals.n_max();
  s.a.assign(static_cast<std::size_t>(s.n_max) + 1, Int(0));
  for (long n = 1; n <= s.n_max; ++n) {
    Int acc = 0;
    for (std::size_t cls : ideals.classes(n)) acc += chars.value(chi, cls);
    s.a[static_cast<std::size_t>(n)] = acc;
  }
  return s;
}

CoefficientSeries lhs_coeffs_bruteforce(const QuadraticOrder &order, const GenusCharacter &chi, long n_max) {
  require_character(order, chi);
  NarrowClassGroup group(order);
  CharacterTable chars(group);
  IdealClassTable ideals(group, n_max);
  return lhs_coeffs_bruteforce(chars, ideals, chi);
}

CoefficientSeries lhs_coeffs_local(const QuadraticOrder &order, const GenusCharacter &chi, long n_max) {
  require_character(order, chi);
  if (n_max < 1) throw std::invalid_argument("lhs_coeffs_local: n_max must be positive");
  CoefficientSeries s;
  s.n_max = n_max;
  s.a.assign(static_cast<std::size_t>(n_max) + 1, Int(0));
  s.a[1] = 1;
  std::vector<long> spf = spf_sieve(n_max);
  for (long p = 2; p <= n_max; ++p) {
    if (spf[static_cast<std::size_t>(p)] != p) continue;
    long k_max = 0;
    for (long q = 1; q <= n_max / p; q *= p) ++k_max;
    std::vector<Int> c = local_series(order, chi, Int(p), k_max);
    long q = p;
    for (long k = 1; k <= k_max; ++k, q *= p) s.a[static_cast<std::size_t>(q)] = c[static_cast<std::size_t>(k)];
  }
  for (long n = 2; n <= n_max; ++n) {
    long p = spf[static_cast<std::size_t>(n)];
    long q = 1, rest = n;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    if (rest > 1)
      s.a[static_cast<std::size_t>(n)] = s.a[static_cast<std::size_t>(q)] * s.a[static_cast<std::size_t>(rest)];
  }
  return s;
}

std::vector<LocalFactorPolynomial> rhs_local_factors(const QuadraticOrder &order, const GenusCharacter &chi) {
  require_character(order, chi);
  std::vector<LocalFactorPolynomial> out;
  for (const auto &[p, m] : factorize(chi.f0).factors) {
    Int phi = kronecker(chi.delta1, p);
    Int psi = kronecker(chi.delta2, p);
    // Numerator (1-phi X)(1-psi X) - p^(m-1) X^(2m) (pX-phi)(pX-psi), then an
    // exact division by (1 - p X^2) leaves C_p of degree 2m.
    std::vector<Int> num(static_cast<std::size_t>(2 * m) + 3, Int(0));
    num[0] = 1;
    num[1] = -(phi + psi);
    num[2] += phi * psi;
    Int lead = pow_int(p, m - 1);
    num[static_cast<std::size_t>(2 * m)] -= lead * phi * psi;
    num[static_cast<std::size_t>(2 * m + 1)] += lead * p * (phi + psi);
    num[static_cast<std::size_t>(2 * m + 2)] -= lead * p * p;
    std::vector<Int> q(num.size(), Int(0));
    for (std::size_t k = 0; k < num.size(); ++k) {
      q[k] = num[k];
      if (k >= 2) q[k] += p * q[k - 2];
    }
    if (q[q.size() - 1] != 0 || q[q.size() - 2] != 0)
      throw std::logic_error("rhs_local_factors: division by 1 - p X^2 left a remainder");
    q.resize(static_cast<std::size_t>(2 * m) + 1);
    assert(q[0] == 1);
    out.push_back({p, std::move(q)});
  }
  std::sort(out.begin(), out.end(),
            [](const LocalFactorPolynomial &l, const LocalFactorPolynomial &r) { return l.p < r.p; });
  return out;
}

CoefficientSeries rhs_coeffs(const QuadraticOrder &order, const GenusCharacter &chi, long n_max) {
  require_character(order, chi);
  if (n_max < 1) throw std::invalid_argument("rhs_coeffs: n_max must be positive");
  CoefficientSeries s;
  s.n_max = n_max;
  s.a.assign(static_cast<std::size_t>(n_max) + 1, Int(0));
  // Dirichlet convolution of the two Kronecker characters.
  for (long d = 1; d <= n_max; ++d) {
    Int left = kronecker(chi.delta1, Int(d));
    if (left == 0) continue;
    for (long n = d; n <= n_max; n += d)
      s.a[static_cast<std::size_t>(n)] += left * kronecker(chi.delta2, Int(n / d));
  }
  // Fold in each correction polynomial along powers of its prime.
  for (const LocalFactorPolynomial &cp : rhs_local_factors(order, chi)) {
    long p = to_long(cp.p);
    std::vector<Int> next(static_cast<std::size_t>(n_max) + 1, Int(0));
    for (long n = 1; n <= n_max; ++n) {
      Int acc = 0;
      long pj = 1;
      for (std::size_t j = 0; j < cp.coeffs.size(); ++j) {
        if (pj > n) break;
        if (n % pj == 0) acc += cp.coeffs[j] * s.a[static_cast<std::size_t>(n / pj)];
        if (pj > n_max / p) break;
        pj *= p;
      }
      next[static_cast<std::size_t>(n)] = acc;
    }
    s.a = std::move(next);
  }
  return s;
}

std::optional<SeriesMismatch> compare_series(const CoefficientSeries &l, const CoefficientSeries &r) {
  long n_common = std::min(l.n_max, r.n_max);
  for (long n = 1; n <= n_common; ++n)
    if (l.at(n) != r.at(n)) return SeriesMismatch{n, l.at(n), r.at(n)};
  return std::nullopt;
}

Evaluation evaluate(const CoefficientSeries &series, double s, double majorant) {
  if (!(s > 1.0)) throw std::domain_error("evaluate: the series only converges for s > 1");
  double value = 0.0;
  for (long n = 1; n <= series.n_max; ++n)
    value += series.at(n).get_d() * std::pow(static_cast<double>(n), -s);
  double tail = std::numeric_limits<double>::infinity();
  if (s > 1.5) {
    // |a_n| <= majorant * 2 sqrt(n), so the tail is below the integral bound
    // 2 * majorant * N^(3/2 - s) / (s - 3/2).
    tail = 2.0 * majorant * std::pow(static_cast<double>(series.n_max), 1.5 - s) / (s - 1.5);
  }
  return {value, tail, series.n_max};
}

Evaluation evaluate_closed_form(const QuadraticOrder &order, const GenusCharacter &chi, double s, long n_max) {
  require_character(order, chi);
  if (!(s > 1.0)) throw std::domain_error("evaluate_closed_form: need s > 1");
  if (n_max < 1) throw std::invalid_argument("evaluate_closed_form: n_max must be positive");
  double p1 = 0.0, p2 = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    double w = std::pow(static_cast<double>(n), -s);
    p1 += kronecker(chi.delta1, Int(n)) * w;
    p2 += kronecker(chi.delta2, Int(n)) * w;
  }
  // |sum_{n>N} chi(n) n^-s| <= N^(1-s)/(s-1) for either character.
  double t = std::pow(static_cast<double>(n_max), 1.0 - s) / (s - 1.0);
  double correction = 1.0;
  for (const LocalFactorPolynomial &cp : rhs_local_factors(order, chi)) {
    double x = std::pow(cp.p.get_d(), -s);
    double cv = 0.0;
    for (std::size_t j = cp.coeffs.size(); j-- > 0;) cv = cv * x + cp.coeffs[j].get_d();
    correction *= cv;
  }
  double value = p1 * p2 * correction;
  double tail = std::abs(correction) * (std::abs(p1) * t + std::abs(p2) * t + t * t);
  return {value, tail, n_max};
}

Int coefficient_majorant(const QuadraticOrder &order) {
  Int m = 1;
  for (const auto &[p, e] : factorize(order.conductor()).factors) m *= 2 * pow_int(p, e);
  return m;
}

} // namespace qgenus
