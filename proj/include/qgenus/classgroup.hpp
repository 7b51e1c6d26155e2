#pragma once

// Class groups of a quadratic order as groups of reduced forms under
// composition. The narrow group is proper (SL2) equivalence of primitive
// forms; for D > 0 a class is a whole rho-cycle and its lexicographically
// least member is the canonical representative. The wide group is the
// quotient by the class S of (-1, b0, -c0), which is what identifying a form
// with its negative does; for D < 0 the two groups coincide.

#include "qgenus/forms.hpp"
#include "qgenus/ideals.hpp"
#include "qgenus/integer.hpp"
#include "qgenus/order.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace qgenus {

class NarrowClassGroup {
public:
  explicit NarrowClassGroup(const QuadraticOrder &order);

  const QuadraticOrder &order() const { return order_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<BinaryQuadraticForm> &representatives() const { return reps_; }
  std::size_t principal_id() const { return principal_; }

  // Class of any primitive form of the order's discriminant.
  std::size_t class_of(const BinaryQuadraticForm &q) const;

  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const;
  std::size_t pow(std::size_t i, const Int &n) const;

  // Invariant factors d_1 | d_2 | ... ascending; empty for the trivial group.
  std::vector<Int> structure() const;

private:
  QuadraticOrder order_;
  std::vector<BinaryQuadraticForm> reps_;
  std::map<BinaryQuadraticForm, std::size_t> index_; // canonical rep -> id
  std::size_t principal_ = 0;
};

class WideClassGroup {
public:
  explicit WideClassGroup(const NarrowClassGroup &narrow);

  const NarrowClassGroup &narrow() const { return narrow_; }
  std::size_t size() const { return reps_.size(); }
  std::size_t principal_id() const { return class_of_narrow(narrow_.principal_id()); }

  // Narrow class id of the distinguished class S; principal when D < 0 or the
  // fundamental unit story already merges the two orientations.
  std::size_t s_id() const { return s_id_; }

  std::size_t class_of_narrow(std::size_t narrow_id) const;
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const;
  std::size_t pow(std::size_t i, const Int &n) const;
  std::vector<Int> structure() const;

private:
  NarrowClassGroup narrow_;
  std::size_t s_id_ = 0;
  std::vector<std::size_t> wide_of_;       // narrow id -> wide id
  std::vector<std::size_t> reps_;          // wide id -> least narrow id in the coset
};

// Image ids of the squaring map, sorted; the genus number is size()/|squares|.
std::vector<std::size_t> squares_subgroup(const NarrowClassGroup &g);
std::vector<std::size_t> squares_subgroup(const WideClassGroup &g);

// One witness prime per narrow class: a prime q coprime to 2D represented by
// the class. Genus characters are constant on classes, so chi(class) is
// kronecker(delta1, q) for any such witness; independence from the witness is
// what the verification suites check against many primes.
class CharacterTable {
public:
  explicit CharacterTable(const NarrowClassGroup &group);

  const Int &witness(std::size_t class_id) const { return witnesses_.at(class_id); }
  int value(const GenusCharacter &chi, std::size_t class_id) const {
    return kronecker(chi.delta1, witnesses_.at(class_id));
  }

private:
  std::vector<Int> witnesses_;
};

int character_value_on_ideal(const NarrowClassGroup &group, const CharacterTable &table,
                             const GenusCharacter &chi, const ProperIdeal &I);

} // namespace qgenus
