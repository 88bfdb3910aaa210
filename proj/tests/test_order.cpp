#include <catch2/catch_amalgamated.hpp>

#include "stoneworks/fixtures.hpp"
#include "stoneworks/lattice.hpp"
#include "stoneworks/poset.hpp"

#include "oracles.hpp"

using namespace stoneworks;

TEST_CASE("from_covers builds transitive reflexive orders") {
  Poset single = from_covers({"a"}, {});
  CHECK(single.size() == 1);
  CHECK(single.leq(0, 0));

  Poset c3 = from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  CHECK(c3.leq(0, 2));  // transitivity added
  CHECK(!c3.leq(2, 0));

  CHECK_THROWS_AS(from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}), ContractError);
  CHECK_THROWS_WITH(from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
                    Catch::Matchers::ContainsSubstring("CycleError"));
  CHECK_THROWS_WITH(from_covers({"x"}, {{"x", "zz"}}),
                    Catch::Matchers::ContainsSubstring("UnknownElement"));
}

TEST_CASE("to_lattice computes tables or rejects") {
  Lattice c3 = fixtures::c3();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(c3.meet[a][b] == std::min(a, b));
      CHECK(c3.join[a][b] == std::max(a, b));
    }

  // diamond-minus-top: a,b incomparable above 0, no join
  CHECK_THROWS_WITH(to_lattice(from_covers({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}})),
                    Catch::Matchers::ContainsSubstring("NotALattice"));

  Lattice b2 = fixtures::b2();
  int a = b2.poset.index_of("a"), b = b2.poset.index_of("b");
  CHECK(b2.meet[a][b] == b2.bottom);
  CHECK(b2.join[a][b] == b2.top);
}

TEST_CASE("distributivity by exhaustive triples") {
  CHECK(is_distributive(fixtures::b2()));
  CHECK(!is_distributive(fixtures::diamond_m3()));
  CHECK(!is_distributive(fixtures::pentagon_n5()));
  CHECK(is_frame(fixtures::c3()));
  CHECK(is_frame(fixtures::b2()));
  CHECK(!is_frame(fixtures::diamond_m3()));
}

TEST_CASE("distributivity agrees with the M3/N5 sublattice oracle") {
  std::vector<Lattice> all = fixtures::distributive_corpus();
  all.push_back(fixtures::diamond_m3());
  all.push_back(fixtures::pentagon_n5());
  for (const Lattice& l : all)
    CHECK(is_distributive(l) == !oracles::has_m3_or_n5_sublattice(l));
}

TEST_CASE("meet primes") {
  Lattice c3 = fixtures::c3();
  CHECK(meet_primes(c3) == (bit(0) | bit(1)));  // every non-top element of a chain

  Lattice b2 = fixtures::b2();
  CHECK(meet_primes(b2) == (bit(b2.poset.index_of("a")) | bit(b2.poset.index_of("b"))));

  CHECK(meet_primes(fixtures::one()) == 0);
}

TEST_CASE("dual reverses the order") {
  Poset c3 = fixtures::c3().poset;
  Poset d = dual(c3);
  CHECK(d.leq(2, 0));
  CHECK(!d.leq(0, 2));
  Poset dd = dual(d);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(dd.leq(a, b) == c3.leq(a, b));

  // B2 is self-dual up to the a/b relabeling; cover counts agree
  Poset b2 = fixtures::b2().poset;
  CHECK(dual(b2).covers().size() == b2.covers().size());

  // vee {0<a, 0<b}: dualizing swaps minimal and maximal elements
  Poset vee = from_covers({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  Poset wedge = dual(vee);
  CHECK(wedge.leq(1, 0));
  CHECK(wedge.leq(2, 0));
}

TEST_CASE("lattice identities hold on every constructed fixture") {
  for (const Lattice& l : fixtures::distributive_corpus()) {
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        CHECK(l.leq(l.meet[x][y], x));
        CHECK(l.leq(x, l.join[x][y]));
        // absorption
        CHECK(l.join[x][l.meet[x][y]] == x);
        CHECK(l.meet[x][l.join[x][y]] == x);
      }
  }
}

TEST_CASE("meet primes of the dual are the join primes") {
  for (const Lattice& l : fixtures::distributive_corpus()) {
    Lattice d = to_lattice(dual(l.poset));
    CHECK(meet_primes(d) == join_primes(l));
  }
}
