#include "qgenus/classgroup.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

namespace qgenus {

namespace {

using MulFn = std::function<std::size_t(std::size_t, std::size_t)>;

std::size_t pow_element(std::size_t base, const Int &n, std::size_t identity, const MulFn &mul) {
  assert(n >= 0);
  std::size_t acc = identity;
  std::size_t sq = base;
  mp_bitcnt_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (n == 0) return identity;
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = mul(acc, sq);
    if (i + 1 < bits) sq = mul(sq, sq);
  }
  return acc;
}

// Invariant factors of a finite abelian group given by a multiplication
// oracle, via order statistics: #{x : x^(p^k) = 1} = p^(M_k) and
// M_k - M_(k-1) counts the cyclic parts of order >= p^k.
std::vector<Int> abelian_structure(std::size_t n, std::size_t identity, const MulFn &mul) {
  if (n <= 1) return {};
  std::vector<std::pair<Int, std::vector<unsigned long>>> parts_by_prime;
  for (const auto &[p, a] : factorize(Int(n)).factors) {
    std::vector<unsigned long> ge_counts; // ge_counts[k-1] = #parts of order >= p^k
    unsigned long prev_m = 0;
    for (unsigned long k = 1; k <= a; ++k) {
      Int pk = pow_int(p, k);
      std::size_t fixed = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (pow_element(i, pk, identity, mul) == identity) ++fixed;
      unsigned long m = valuation(Int(fixed), p);
      assert(pow_int(p, m) == Int(fixed) && "p^k-torsion count must be a p-power");
      unsigned long cnt = m - prev_m;
      prev_m = m;
      if (cnt == 0) break;
      ge_counts.push_back(cnt);
    }
    std::vector<unsigned long> exps; // part exponents, descending
    for (unsigned long k = ge_counts.size(); k >= 1; --k) {
      unsigned long exactly = ge_counts[k - 1] - (k < ge_counts.size() ? ge_counts[k] : 0);
      for (unsigned long c = 0; c < exactly; ++c) exps.push_back(k);
    }
    std::sort(exps.rbegin(), exps.rend());
    parts_by_prime.emplace_back(p, std::move(exps));
  }
  std::size_t rows = 0;
  for (const auto &[p, exps] : parts_by_prime) rows = std::max(rows, exps.size());
  std::vector<Int> factors;
  for (std::size_t j = rows; j-- > 0;) {
    Int d = 1;
    for (const auto &[p, exps] : parts_by_prime)
      if (j < exps.size()) d *= pow_int(p, exps[j]);
    factors.push_back(d);
  }
  return factors; // ascending, d_1 | d_2 | ...
}

} // namespace

NarrowClassGroup::NarrowClassGroup(const QuadraticOrder &order) : order_(order) {
  std::vector<BinaryQuadraticForm> forms = reduced_forms(order_.discriminant());
  if (order_.discriminant() < 0) {
    reps_ = forms;
    for (std::size_t i = 0; i < reps_.size(); ++i) index_[reps_[i]] = i;
  } else {
    // forms is sorted, so the first unvisited form of each rho-cycle is the
    // cycle's lexicographic minimum, our canonical representative.
    std::set<BinaryQuadraticForm> seen;
    for (const BinaryQuadraticForm &q : forms) {
      if (seen.count(q)) continue;
      index_[q] = reps_.size();
      reps_.push_back(q);
      for (const BinaryQuadraticForm &c : reduction_cycle(q)) seen.insert(c);
    }
  }
  principal_ = class_of(principal_form(order_.discriminant()));
}

std::size_t NarrowClassGroup::class_of(const BinaryQuadraticForm &q) const {
  if (q.discriminant() != order_.discriminant())
    throw std::invalid_argument("class_of: form discriminant does not match the order");
  if (!q.primitive()) throw std::invalid_argument("class_of: form must be primitive");
  auto it = index_.find(reduce(q));
  if (it == index_.end()) throw std::logic_error("class_of: reduced form missing from the class list");
  return it->second;
}

std::size_t NarrowClassGroup::mul(std::size_t i, std::size_t j) const {
  auto it = index_.find(compose(reps_.at(i), reps_.at(j)));
  if (it == index_.end()) throw std::logic_error("mul: composition left the class list");
  return it->second;
}

std::size_t NarrowClassGroup::inv(std::size_t i) const {
  auto it = index_.find(opposite(reps_.at(i)));
  if (it == index_.end()) throw std::logic_error("inv: opposite left the class list");
  return it->second;
}

std::size_t NarrowClassGroup::pow(std::size_t i, const Int &n) const {
  if (n < 0) return pow(inv(i), -n);
  return pow_element(i, n, principal_, [this](std::size_t a, std::size_t b) { return mul(a, b); });
}

std::vector<Int> NarrowClassGroup::structure() const {
  return abelian_structure(size(), principal_, [this](std::size_t a, std::size_t b) { return mul(a, b); });
}

WideClassGroup::WideClassGroup(const NarrowClassGroup &narrow) : narrow_(narrow) {
  const Int &D = narrow_.order().discriminant();
  if (D < 0) {
    s_id_ = narrow_.principal_id();
  } else {
    BinaryQuadraticForm p0 = principal_form(D);
    s_id_ = narrow_.class_of({Int(-1), p0.b, -p0.c});
  }
  wide_of_.assign(narrow_.size(), narrow_.size());
  for (std::size_t i = 0; i < narrow_.size(); ++i) {
    if (wide_of_[i] != narrow_.size()) continue;
    std::size_t id = reps_.size();
    reps_.push_back(i);
    wide_of_[i] = id;
    wide_of_[narrow_.mul(i, s_id_)] = id;
  }
}

std::size_t WideClassGroup::class_of_narrow(std::size_t narrow_id) const { return wide_of_.at(narrow_id); }

std::size_t WideClassGroup::mul(std::size_t i, std::size_t j) const {
  return wide_of_.at(narrow_.mul(reps_.at(i), reps_.at(j)));
}

std::size_t WideClassGroup::inv(std::size_t i) const { return wide_of_.at(narrow_.inv(reps_.at(i))); }

std::size_t WideClassGroup::pow(std::size_t i, const Int &n) const {
  if (n < 0) return pow(inv(i), -n);
  return pow_element(i, n, principal_id(), [this](std::size_t a, std::size_t b) { return mul(a, b); });
}

std::vector<Int> WideClassGroup::structure() const {
  return abelian_structure(size(), principal_id(), [this](std::size_t a, std::size_t b) { return mul(a, b); });
}

std::vector<std::size_t> squares_subgroup(const NarrowClassGroup &g) {
  std::vector<std::size_t> sq;
  for (std::size_t i = 0; i < g.size(); ++i) sq.push_back(g.mul(i, i));
  std::sort(sq.begin(), sq.end());
  sq.erase(std::unique(sq.begin(), sq.end()), sq.end());
  return sq;
}

std::vector<std::size_t> squares_subgroup(const WideClassGroup &g) {
  std::vector<std::size_t> sq;
  for (std::size_t i = 0; i < g.size(); ++i) sq.push_back(g.mul(i, i));
  std::sort(sq.begin(), sq.end());
  sq.erase(std::unique(sq.begin(), sq.end()), sq.end());
  return sq;
}

CharacterTable::CharacterTable(const NarrowClassGroup &group) {
  Int modulus = 2 * group.order().discriminant();
  for (const BinaryQuadraticForm &rep : group.representatives()) {
    Int found = 0;
    for (long r = 1; r <= 6400 && found == 0; ++r) {
      for (long x = -r; x <= r && found == 0; ++x) {
        bool edge = (x == -r || x == r);
        for (long y = -r; y <= r && found == 0; edge ? ++y : y += 2 * r) {
          Int v = rep.eval(Int(x), Int(y));
          if (v <= 1) continue;
          if (gcd(v, modulus) != 1) continue;
          if (is_prime(v)) found = v;
        }
      }
    }
    if (found == 0) throw std::runtime_error("CharacterTable: no witness prime within search bound");
    witnesses_.push_back(found);
  }
}

int character_value_on_ideal(const NarrowClassGroup &group, const CharacterTable &table,
                             const GenusCharacter &chi, const ProperIdeal &I) {
  return table.value(chi, group.class_of(ideal_to_form(group.order(), I)));
}

} // namespace qgenus
