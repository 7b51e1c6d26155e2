#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgenus/arith.hpp"
#include "qgenus/forms.hpp"
#include "qgenus/ideals.hpp"
#include "qgenus/order.hpp"

#include <algorithm>
#include <vector>

using namespace qgenus;

namespace {

// Test-side oracle: multiply two ideal lattices by expanding the four
// generator products in the {1, w} basis (w^2 = t w - n0) and recovering the
// HNF with column Euclid. Independent of the library's ideal arithmetic.
LatticeHNF product_lattice(const QuadraticOrder &order, const LatticeHNF &L1, const LatticeHNF &L2) {
  Int t = order.w_trace(), n0 = order.w_norm();
  std::vector<std::pair<Int, Int>> g;
  g.push_back({L1.x * L2.x, Int(0)});
  g.push_back({L1.x * L2.y, L1.x * L2.z});
  g.push_back({L1.y * L2.x, L1.z * L2.x});
  g.push_back({L1.y * L2.y - L1.z * L2.z * n0, L1.y * L2.z + L1.z * L2.y + L1.z * L2.z * t});
  while (true) {
    int pivot = -1;
    for (int i = 0; i < 4; ++i)
      if (g[i].second != 0 && (pivot < 0 || abs_int(g[i].second) < abs_int(g[pivot].second))) pivot = i;
    REQUIRE(pivot >= 0);
    bool done = true;
    for (int i = 0; i < 4; ++i) {
      if (i == pivot || g[i].second == 0) continue;
      Int q = g[i].second / g[pivot].second;
      g[i].first -= q * g[pivot].first;
      g[i].second -= q * g[pivot].second;
      if (g[i].second != 0) done = false;
    }
    if (!done) continue;
    if (g[pivot].second < 0) {
      g[pivot].first = -g[pivot].first;
      g[pivot].second = -g[pivot].second;
    }
    Int x = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == pivot) continue;
      Int u = abs_int(g[i].first);
      mpz_gcd(x.get_mpz_t(), x.get_mpz_t(), u.get_mpz_t());
    }
    REQUIRE(x > 0);
    return {x, mod_floor(g[pivot].first, x), g[pivot].second};
  }
}

std::vector<ProperIdeal> ideals_up_to(const QuadraticOrder &order, long bound) {
  std::vector<ProperIdeal> out;
  for (long n = 1; n <= bound; ++n) {
    auto batch = enumerate_proper_ideals(order, Int(n));
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

} // namespace

TEST_CASE("lattice membership and ideal stability") {
  QuadraticOrder o16(Int(-4), Int(2)); // D = -16, w = -4 + 2i
  LatticeHNF twice_o{2, 0, 2};         // 2*O_f
  CHECK(lattice_contains(twice_o, Int(4), Int(-2)));
  CHECK_FALSE(lattice_contains(twice_o, Int(1), Int(0)));
  CHECK_FALSE(lattice_contains(twice_o, Int(2), Int(1)));
  CHECK(is_ideal_lattice(o16, twice_o));

  // 2Z + Zw = 2Z[i] is an O_f-ideal whose multiplier ring is the maximal order.
  LatticeHNF gauss{2, 0, 1};
  CHECK(is_ideal_lattice(o16, gauss));
  REQUIRE(multiplier_conductor(o16, gauss).has_value());
  CHECK(*multiplier_conductor(o16, gauss) == 1);
  CHECK_FALSE(is_proper(o16, gauss));
  CHECK_THROWS_AS(lattice_to_ideal(o16, gauss), std::domain_error);

  REQUIRE(multiplier_conductor(o16, twice_o).has_value());
  CHECK(*multiplier_conductor(o16, twice_o) == 2);
  CHECK(is_proper(o16, twice_o));

  // Z*3 + Z*w is not stable under w (w^2 = -8w - 20, and 20 is not in 3Z).
  LatticeHNF bad{3, 0, 1};
  CHECK_FALSE(is_ideal_lattice(o16, bad));

  CHECK_THROWS_AS(is_ideal_lattice(o16, LatticeHNF{2, 2, 1}), std::invalid_argument); // y >= x
  CHECK_THROWS_AS(is_ideal_lattice(o16, LatticeHNF{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("proper ideal enumeration pinned for D = -16") {
  QuadraticOrder order(Int(-4), Int(2));
  CHECK(enumerate_proper_ideals(order, Int(1)) == std::vector<ProperIdeal>{{1, 1, 0}});
  CHECK(enumerate_proper_ideals(order, Int(2)).empty());
  CHECK(enumerate_proper_ideals(order, Int(4)) == std::vector<ProperIdeal>{{1, 4, 0}, {2, 1, 0}});
  CHECK(enumerate_proper_ideals(order, Int(8)).size() == 2);
  CHECK(enumerate_proper_ideals(order, Int(3)).empty()); // 3 inert: no norm-3 ideal
  CHECK(enumerate_proper_ideals(order, Int(9)) == std::vector<ProperIdeal>{{3, 1, 0}});
}

TEST_CASE("normal form round-trips through the HNF picture") {
  for (long dk : {-4L, -15L, 5L, 221L}) {
    for (long f : {1L, 2L, 3L}) {
      QuadraticOrder order{Int(dk), Int(f)};
      for (const ProperIdeal &I : ideals_up_to(order, 40)) {
        CHECK(I.norm() == I.ell * I.ell * I.a);
        CHECK(-I.a < I.b);
        CHECK(I.b <= I.a);
        LatticeHNF L = ideal_to_lattice(order, I);
        CHECK(L.x * L.z == I.norm());
        CHECK(is_ideal_lattice(order, L));
        CHECK(is_proper(order, L));
        CHECK(lattice_to_ideal(order, L) == I);
      }
    }
  }
}

TEST_CASE("local ideal counts match brute enumeration") {
  auto agree = [](const QuadraticOrder &order, long p, unsigned long k_max) {
    for (unsigned long k = 0; k <= k_max; ++k) {
      Int n = pow_int(Int(p), k);
      Int counted = count_proper_ideals_local(order, Int(p), k);
      Int listed(static_cast<long>(enumerate_proper_ideals(order, n).size()));
      CHECK(counted == listed);
    }
  };
  agree(QuadraticOrder(Int(-4), Int(2)), 2, 6);  // ramified under the conductor
  agree(QuadraticOrder(Int(-4), Int(4)), 2, 6);
  agree(QuadraticOrder(Int(5), Int(9)), 3, 5);   // odd conductor prime
  agree(QuadraticOrder(Int(221), Int(2)), 2, 4); // inert under the conductor
  agree(QuadraticOrder(Int(5), Int(1)), 2, 4);   // inert, maximal
  agree(QuadraticOrder(Int(5), Int(1)), 5, 3);   // ramified, maximal
  agree(QuadraticOrder(Int(5), Int(1)), 11, 2);  // split, maximal
  agree(QuadraticOrder(Int(-15), Int(1)), 2, 5); // split, maximal
  agree(QuadraticOrder(Int(12), Int(1)), 2, 4);
  agree(QuadraticOrder(Int(12), Int(1)), 3, 3);
  agree(QuadraticOrder(Int(-3), Int(6)), 2, 4);
  agree(QuadraticOrder(Int(-3), Int(6)), 3, 4);

  // Norm-4 ideals of the inert conductor prime 2 in disc 884: 2*O_f plus
  // p^(e-1)(p - chi) = 3 fresh proper ones... count is 1*3*N_max(0) = 3.
  CHECK(count_proper_ideals_local(QuadraticOrder(Int(221), Int(2)), Int(2), 2) == 3);
}

TEST_CASE("total ideal counts are multiplicative over prime powers") {
  for (long dk : {-4L, -15L}) {
    for (long f : {1L, 2L}) {
      QuadraticOrder order{Int(dk), Int(f)};
      for (long n = 1; n <= 100; ++n) {
        Int expect = 1;
        for (const auto &[p, k] : factorize(Int(n)).factors) expect *= count_proper_ideals_local(order, p, k);
        CHECK(expect == Int(static_cast<long>(enumerate_proper_ideals(order, Int(n)).size())));
      }
    }
  }
}

TEST_CASE("ideal_to_form pinned and validated") {
  QuadraticOrder o15(Int(-15), Int(1));
  CHECK(ideal_to_form(o15, ProperIdeal{1, 2, 1}) == BinaryQuadraticForm{2, 1, 2});
  CHECK(ideal_to_form(o15, ProperIdeal{1, 2, -1}) == BinaryQuadraticForm{2, -1, 2});
  CHECK(ideal_to_form(o15, ProperIdeal{1, 1, 1}) == BinaryQuadraticForm{1, 1, 4});
  CHECK(ideal_to_form(o15, ProperIdeal{3, 2, 1}) == BinaryQuadraticForm{2, 1, 2}); // scaling drops out

  QuadraticOrder o16(Int(-4), Int(2));
  CHECK_THROWS_AS(ideal_to_form(o16, ProperIdeal{1, 4, 4}), std::invalid_argument);  // improper: form (4,4,2)
  CHECK_THROWS_AS(ideal_to_form(o16, ProperIdeal{1, 4, 1}), std::invalid_argument);  // parity: 1 + 16 not 0 mod 16
  CHECK_THROWS_AS(ideal_to_form(o16, ProperIdeal{1, 4, -4}), std::invalid_argument); // b out of (-a, a]
  CHECK_THROWS_AS(ideal_to_form(o16, ProperIdeal{0, 4, 0}), std::invalid_argument);

  // Forms of proper ideals are primitive with the order's discriminant.
  for (long dk : {-15L, 221L}) {
    QuadraticOrder order{Int(dk), Int(2)};
    for (const ProperIdeal &I : ideals_up_to(order, 40)) {
      BinaryQuadraticForm q = ideal_to_form(order, I);
      CHECK(q.discriminant() == order.discriminant());
      CHECK(q.primitive());
      CHECK(q.a == I.a);
      CHECK(q.b == I.b);
    }
  }
}

TEST_CASE("prime ideals above a rational prime") {
  QuadraticOrder o15(Int(-15), Int(1));
  CHECK(prime_ideals_above(o15, Int(2)) == std::vector<ProperIdeal>{{1, 2, -1}, {1, 2, 1}});
  CHECK(prime_ideals_above(o15, Int(5)) == std::vector<ProperIdeal>{{1, 5, 5}});
  CHECK(prime_ideals_above(o15, Int(7)) == std::vector<ProperIdeal>{{7, 1, 1}});

  QuadraticOrder o884(Int(221), Int(2));
  CHECK_THROWS_AS(prime_ideals_above(o884, Int(2)), std::invalid_argument); // divides the conductor
  CHECK_THROWS_AS(prime_ideals_above(o884, Int(4)), std::invalid_argument); // not prime

  for (long q : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
    auto above = prime_ideals_above(o884, Int(q));
    int chi = kronecker(o884.discriminant(), Int(q));
    if (chi == 1) {
      REQUIRE(above.size() == 2);
      CHECK(above[0].norm() == q);
      CHECK(above[1].norm() == q);
      CHECK(above[0].b == -above[1].b); // conjugate pair
    } else if (chi == 0) {
      REQUIRE(above.size() == 1);
      CHECK(above[0].norm() == q);
    } else {
      REQUIRE(above.size() == 1);
      CHECK(above[0].norm() == q * q);
    }
    for (const ProperIdeal &I : above) {
      auto all = enumerate_proper_ideals(o884, I.norm());
      CHECK(std::find(all.begin(), all.end(), I) != all.end());
    }
  }
}

TEST_CASE("lattice products: norms multiply and classes compose") {
  for (long dk : {-15L, -4L, 221L}) {
    for (long f : {1L, 2L}) {
      QuadraticOrder order{Int(dk), Int(f)};
      auto ideals = ideals_up_to(order, 18);
      for (const ProperIdeal &I : ideals) {
        for (const ProperIdeal &J : ideals) {
          LatticeHNF P = product_lattice(order, ideal_to_lattice(order, I), ideal_to_lattice(order, J));
          CHECK(P.x * P.z == I.norm() * J.norm());
          CHECK(is_proper(order, P));
          BinaryQuadraticForm lhs = reduce(ideal_to_form(order, lattice_to_ideal(order, P)));
          BinaryQuadraticForm rhs = compose(ideal_to_form(order, I), ideal_to_form(order, J));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}
