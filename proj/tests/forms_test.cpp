#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgenus/arith.hpp"
#include "qgenus/forms.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace qgenus;

namespace {

BinaryQuadraticForm bqf(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }

// Distinct classes = distinct canonical reduced representatives.
std::set<BinaryQuadraticForm> classes(const Int &D) {
  std::set<BinaryQuadraticForm> out;
  for (const BinaryQuadraticForm &q : reduced_forms(D)) out.insert(reduce(q));
  return out;
}

} // namespace

TEST_CASE("principal form and basic accessors") {
  CHECK(principal_form(Int(-15)) == bqf(1, 1, 4));
  CHECK(principal_form(Int(-16)) == bqf(1, 0, 4));
  CHECK(principal_form(Int(13)) == bqf(1, 1, -3));
  CHECK(principal_form(Int(12)) == bqf(1, 0, -3));
  CHECK(principal_form(Int(-15)).discriminant() == -15);
  CHECK(principal_form(Int(12)).discriminant() == 12);

  BinaryQuadraticForm q = bqf(6, 2, 4);
  CHECK(q.content() == 2);
  CHECK_FALSE(q.primitive());
  CHECK(bqf(2, 1, 3).primitive());
  CHECK(bqf(2, 1, 3).eval(Int(1), Int(-2)) == 12);
}

TEST_CASE("reduction pinned, definite") {
  // (7, 5, 1) -> swap -> (1, -5, 7) -> center b -> (1, 1, 1), D = -3.
  CHECK(reduce(bqf(7, 5, 1)) == bqf(1, 1, 1));
  CHECK(reduce(bqf(1, 1, 1)) == bqf(1, 1, 1));
  CHECK(reduce(bqf(2, -1, 3)) == bqf(2, -1, 3)); // interior: (2,-1,3) and (2,1,3) are distinct classes
  CHECK(reduce(bqf(2, -2, 3)) == bqf(2, 2, 3));  // boundary |b| = a takes b > 0
  CHECK(reduce(bqf(3, 2, 3)) == bqf(3, 2, 3));   // boundary a = c keeps b >= 0
  CHECK(reduce(bqf(3, -2, 3)) == bqf(3, 2, 3));
  CHECK(reduce(bqf(4, 11, 8)) == bqf(1, 1, 2));
  CHECK_THROWS_AS(reduce(bqf(-1, 1, -2)), std::domain_error); // negative definite
}

TEST_CASE("reduction rejects square and invalid discriminants") {
  CHECK_THROWS_AS(reduce(bqf(1, 0, 0)), std::domain_error);  // D = 0
  CHECK_THROWS_AS(reduce(bqf(1, 3, 0)), std::domain_error);  // D = 9
  CHECK_THROWS_AS(reduce(bqf(1, 1, -2)), std::domain_error); // D = 9
  CHECK_THROWS_AS(reduce(bqf(1, 0, -4)), std::domain_error); // D = 16
  CHECK_NOTHROW(reduce(bqf(1, 1, 7)));                       // D = -27 is a valid discriminant
}

TEST_CASE("indefinite reduction lands on the canonical cycle member") {
  // D = 12: two classes, cycles {(-2,2,1),(1,2,-2)} and {(-1,2,2),(2,2,-1)}.
  CHECK(reduce(bqf(1, 0, -3)) == bqf(-2, 2, 1));
  CHECK(reduce(bqf(1, 2, -2)) == bqf(-2, 2, 1));
  CHECK(reduce(bqf(-1, 0, 3)) == bqf(-1, 2, 2));
  CHECK(reduce(bqf(2, 2, -1)) == bqf(-1, 2, 2));

  auto cyc = reduction_cycle(bqf(-2, 2, 1));
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0] == bqf(-2, 2, 1));
  CHECK(cyc[1] == bqf(1, 2, -2));

  // D = 221: principal cycle through (1, 13, -13).
  BinaryQuadraticForm p221 = reduce(principal_form(Int(221)));
  auto cycle = reduction_cycle(p221);
  CHECK(cycle.size() % 2 == 0);
  for (const BinaryQuadraticForm &q : cycle) {
    CHECK(is_reduced(q));
    CHECK(q.discriminant() == 221);
    CHECK(reduce(q) == p221);
  }
  // rho walks the cycle and returns to the start.
  BinaryQuadraticForm walk = p221;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    CHECK(walk == cycle[i]);
    walk = rho(walk);
  }
  CHECK(walk == p221);
}

TEST_CASE("reduced form counts match independent class numbers") {
  // Imaginary: reduced forms biject with classes.
  std::map<long, std::size_t> h_minus{{-3, 1}, {-4, 1}, {-15, 2}, {-16, 1}, {-20, 2}, {-23, 3},
                                      {-32, 2}, {-36, 2}, {-47, 5}, {-56, 4}, {-63, 4}, {-64, 2},
                                      {-84, 4}, {-108, 3}, {-163, 1}, {-180, 4}, {-240, 4}};
  for (const auto &[D, h] : h_minus) {
    auto forms = reduced_forms(Int(D));
    CHECK(forms.size() == h);
    CHECK(classes(Int(D)).size() == h);
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    for (const BinaryQuadraticForm &q : forms) {
      CHECK(is_reduced(q));
      CHECK(q.primitive());
      CHECK(q.discriminant() == D);
      CHECK(reduce(q) == q);
    }
  }

  // Real: reduced forms split into rho-cycles, one canonical member per class.
  std::map<long, std::size_t> h_plus{{5, 1},   {8, 1},   {12, 2},  {13, 1},  {32, 2},  {40, 2},
                                     {60, 4},  {80, 2},  {136, 4}, {180, 2}, {221, 4}, {229, 3},
                                     {321, 6}, {396, 8}, {445, 4}, {780, 8}, {884, 4}};
  for (const auto &[D, h] : h_plus) {
    auto forms = reduced_forms(Int(D));
    CHECK(classes(Int(D)).size() == h);
    std::size_t covered = 0;
    std::set<BinaryQuadraticForm> seen;
    for (const BinaryQuadraticForm &q : forms) {
      CHECK(is_reduced(q));
      CHECK(q.primitive());
      if (seen.count(q)) continue;
      auto cyc = reduction_cycle(q);
      CHECK(cyc.size() % 2 == 0);
      seen.insert(cyc.begin(), cyc.end());
      covered += cyc.size();
    }
    CHECK(covered == forms.size()); // the reduced forms are exactly the cycle union
  }
}

TEST_CASE("composition pinned worked examples") {
  // D = -23, class group of order 3 generated by (2, 1, 3).
  CHECK(compose(bqf(2, 1, 3), bqf(2, 1, 3)) == bqf(2, -1, 3));
  CHECK(compose(bqf(2, 1, 3), bqf(2, -1, 3)) == bqf(1, 1, 6));
  CHECK(compose(bqf(1, 1, 6), bqf(2, 1, 3)) == bqf(2, 1, 3));

  // D = 12: the non-principal class squares to the principal class.
  BinaryQuadraticForm e12 = reduce(principal_form(Int(12)));
  BinaryQuadraticForm n12 = bqf(-1, 2, 2);
  CHECK(compose(n12, n12) == e12);
  CHECK(compose(n12, e12) == reduce(n12));

  CHECK_THROWS_AS(compose(bqf(2, 1, 3), bqf(1, 1, 4)), std::invalid_argument); // different D
  CHECK_THROWS_AS(compose(bqf(2, 2, 2), bqf(2, 2, 2)), std::invalid_argument); // imprimitive
}

TEST_CASE("composition group laws on sampled discriminants") {
  for (long D : {-23L, -47L, -56L, -84L, -180L, 60L, 221L, 321L, 396L, 884L}) {
    std::set<BinaryQuadraticForm> cls = classes(Int(D));
    std::vector<BinaryQuadraticForm> reps(cls.begin(), cls.end());
    BinaryQuadraticForm e = reduce(principal_form(Int(D)));
    REQUIRE(cls.count(e) == 1);
    for (const BinaryQuadraticForm &x : reps) {
      CHECK(compose(x, e) == x);
      CHECK(compose(x, opposite(x)) == e);
      CHECK(cls.count(opposite(x)) == 1);
      for (const BinaryQuadraticForm &y : reps) {
        BinaryQuadraticForm xy = compose(x, y);
        CHECK(cls.count(xy) == 1);
        CHECK(xy == compose(y, x));
      }
    }
    // Associativity on a few triples.
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const BinaryQuadraticForm &x = reps[i];
      const BinaryQuadraticForm &y = reps[(i + 1) % reps.size()];
      const BinaryQuadraticForm &z = reps[(2 * i + 1) % reps.size()];
      CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    }
  }
}

TEST_CASE("opposite is reduced and involutive on classes") {
  for (long D : {-84L, -47L, 221L, 396L}) {
    for (const BinaryQuadraticForm &q : classes(Int(D))) {
      BinaryQuadraticForm inv = opposite(q);
      CHECK(reduce(inv) == inv);
      CHECK(opposite(inv) == q);
    }
  }
}
