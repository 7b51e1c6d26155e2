#include "qgenus/typenumbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgenus {

namespace {

void require_maximal(const QuadraticOrder &order) {
  if (order.conductor() != 1) throw std::domain_error("type numbers are defined for the maximal order only");
}

// Coset labelling of a group (given by a mul oracle) modulo a subgroup given
// by its sorted element list. Cosets are numbered by least member, ascending.
struct CosetMap {
  std::vector<std::size_t> coset_of;
  std::size_t count = 0;

  template <typename Mul>
  CosetMap(std::size_t n, const std::vector<std::size_t> &subgroup, const Mul &mul) {
    coset_of.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coset_of[i] != n) continue;
      for (std::size_t h : subgroup) coset_of[mul(i, h)] = count;
      ++count;
    }
  }
};

} // namespace

Int type_number_narrow(const QuadraticOrder &order) {
  require_maximal(order);
  NarrowClassGroup g(order);
  return Int(g.size() / squares_subgroup(g).size());
}

Int type_number_wide(const QuadraticOrder &order) {
  require_maximal(order);
  WideClassGroup g(NarrowClassGroup{order});
  return Int(g.size() / squares_subgroup(g).size());
}

std::vector<MaximalOrderRep> representatives(const QuadraticOrder &order, ClassSense sense, long search_bound) {
  require_maximal(order);
  NarrowClassGroup narrow(order);
  WideClassGroup wide(narrow);
  const bool use_wide = sense == ClassSense::Wide;
  std::vector<std::size_t> subgroup = use_wide ? squares_subgroup(wide) : squares_subgroup(narrow);
  std::size_t n = use_wide ? wide.size() : narrow.size();
  auto mul = [&](std::size_t a, std::size_t b) { return use_wide ? wide.mul(a, b) : narrow.mul(a, b); };
  CosetMap cosets(n, subgroup, mul);
  auto coset_of_ideal = [&](const ProperIdeal &I) {
    std::size_t cls = narrow.class_of(ideal_to_form(order, I));
    return cosets.coset_of[use_wide ? wide.class_of_narrow(cls) : cls];
  };
  std::size_t principal_coset =
      cosets.coset_of[use_wide ? wide.principal_id() : narrow.principal_id()];

  std::vector<MaximalOrderRep> reps(cosets.count);
  for (std::size_t c = 0; c < cosets.count; ++c) reps[c].coset_id = c;
  reps[principal_coset].principal = true;
  std::size_t filled = 1;
  for (long q = 3; filled < cosets.count; q += 2) {
    if (q > search_bound)
      throw std::runtime_error("representatives: coset without an odd prime ideal below the search bound");
    if (!is_prime(Int(q))) continue;
    if (kronecker(order.discriminant(), Int(q)) == -1) continue;
    for (const ProperIdeal &I : prime_ideals_above(order, Int(q))) {
      std::size_t c = coset_of_ideal(I);
      if (reps[c].principal || reps[c].ideal) continue;
      reps[c].ideal = I;
      ++filled;
    }
  }
  return reps;
}

} // namespace qgenus
