#pragma once

// Type numbers of a maximal quadratic order: the size of the class group
// (narrow or wide) modulo squares, which genus theory equates with the genus
// number. Each genus coset gets a concrete label: the squares coset is the
// ring itself, every other coset the smallest odd-norm prime ideal inside it.

#include "qgenus/classgroup.hpp"
#include "qgenus/ideals.hpp"
#include "qgenus/integer.hpp"
#include "qgenus/order.hpp"

#include <optional>
#include <vector>

namespace qgenus {

enum class ClassSense { Narrow, Wide };

struct MaximalOrderRep {
  std::size_t coset_id = 0;
  bool principal = false;            // the coset of squares; labelled by O_K
  std::optional<ProperIdeal> ideal;  // smallest odd-norm prime ideal otherwise
};

// |Cl^+ / squares| resp. |Cl / squares|. Maximal orders only: conductor 1,
// otherwise std::domain_error.
Int type_number_narrow(const QuadraticOrder &order);
Int type_number_wide(const QuadraticOrder &order);

// One representative per genus coset, ordered by coset id (cosets are
// numbered by their least class id). Prime ideals are searched over odd
// primes q = 3, 5, ... ascending, inert primes skipped; a coset still empty
// past search_bound raises std::runtime_error.
std::vector<MaximalOrderRep> representatives(const QuadraticOrder &order, ClassSense sense,
                                             long search_bound = 10000);

} // namespace qgenus
