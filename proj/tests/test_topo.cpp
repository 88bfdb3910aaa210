#include <catch2/catch_amalgamated.hpp>

#include "stoneworks/fixtures.hpp"
#include "stoneworks/space.hpp"
#include "stoneworks/spectrum.hpp"

using namespace stoneworks;

namespace {
std::vector<Space> spectral_fixture_spaces() {
  std::vector<Space> out = {fixtures::sierpinski(), fixtures::discrete(1), fixtures::discrete(2),
                            fixtures::discrete(3)};
  for (const Lattice& l : fixtures::distributive_corpus())
    out.push_back(spc_of_lattice(l).space);
  return out;
}
}  // namespace

TEST_CASE("space construction from bases") {
  Space sierp = fixtures::sierpinski();
  CHECK(sierp.opens == std::vector<Mask>{0, bit(0), bit(0) | bit(1)});

  Space indis = fixtures::indiscrete2();
  CHECK(indis.opens == std::vector<Mask>{0, bit(0) | bit(1)});

  Space disc = fixtures::discrete(3);
  CHECK(disc.opens.size() == 8);

  Space from_closed = from_closed_basis({"p", "q"}, {bit(1)});
  CHECK(from_closed.opens == sierp.opens);
}

TEST_CASE("specialization order") {
  Poset sp = specialization_order(fixtures::sierpinski());
  CHECK(sp.leq(1, 0));  // q specializes to p; p is generic
  CHECK(!sp.leq(0, 1));

  Poset disc = specialization_order(fixtures::discrete(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(disc.leq(a, b) == (a == b));

  CHECK_THROWS_WITH(specialization_order(fixtures::indiscrete2()),
                    Catch::Matchers::ContainsSubstring("NotT0"));
}

TEST_CASE("sober") {
  CHECK(is_sober(fixtures::sierpinski()));
  CHECK(!is_sober(fixtures::indiscrete2()));
  CHECK(is_sober(fixtures::discrete(3)));
}

TEST_CASE("spectral spaces and quasi-compact opens") {
  CHECK(is_spectral(fixtures::sierpinski()));
  CHECK(!is_spectral(fixtures::indiscrete2()));
  Space sierp = fixtures::sierpinski();
  CHECK(quasi_compact_opens(sierp) == sierp.opens);  // all opens, finitely

  for (const Space& x : spectral_fixture_spaces()) {
    CHECK(is_t0(x));
    CHECK(is_sober(x));
    CHECK(is_spectral(x));
    CHECK(quasi_compact_opens(x) == x.opens);
  }
}

TEST_CASE("Hochster duality") {
  Space disc = fixtures::discrete(2);
  CHECK(hochster_dual(disc) == disc);

  Space sierp = fixtures::sierpinski();
  Space dual = hochster_dual(sierp);
  CHECK(dual.opens == std::vector<Mask>{0, bit(1), bit(0) | bit(1)});  // roles swapped

  for (const Space& x : spectral_fixture_spaces()) {
    CHECK(hochster_dual(hochster_dual(x)) == x);
    std::vector<Mask> th = thomason_subsets(x);
    CHECK(th == hochster_dual(x).opens);
  }
}

TEST_CASE("Thomason subsets") {
  CHECK(thomason_subsets(fixtures::discrete(3)).size() == 8);
  Space sierp = fixtures::sierpinski();
  CHECK(thomason_subsets(sierp) == std::vector<Mask>{0, bit(1), bit(0) | bit(1)});
  CHECK(thomason_subsets(spc_of_lattice(fixtures::b2()).space).size() == 4);
}

TEST_CASE("spectrum of a lattice") {
  LatticeSpectrum c3 = spc_of_lattice(fixtures::c3());
  REQUIRE(c3.primes.size() == 2);
  CHECK(c3.primes == std::vector<Mask>{bit(0), bit(0) | bit(1)});
  CHECK(c3.supp[fixtures::c3().poset.index_of("m")] == bit(c3.point_of(bit(0))));

  LatticeSpectrum b2 = spc_of_lattice(fixtures::b2());
  REQUIRE(b2.primes.size() == 2);
  CHECK(b2.space.opens.size() == 4);  // discrete on two points
  Lattice base = fixtures::b2();
  int a = base.poset.index_of("a"), b = base.poset.index_of("b");
  CHECK(b2.supp[a] == bit(b2.point_of(principal_ideal(base, b))));
  CHECK(b2.supp[b] == bit(b2.point_of(principal_ideal(base, a))));

  LatticeSpectrum two = spc_of_lattice(fixtures::two());
  CHECK(two.primes.size() == 1);
  CHECK(two.supp[1] == bit(0));

  CHECK_THROWS_WITH(spc_of_lattice(fixtures::diamond_m3()),
                    Catch::Matchers::ContainsSubstring("NotDistributive"));
}

TEST_CASE("supports are the quasi-compact opens, both ways") {
  quasicompact_supports_check(fixtures::c3());
  quasicompact_supports_check(fixtures::b2());
  quasicompact_supports_check(fixtures::two());
  for (const Lattice& l : fixtures::distributive_corpus()) quasicompact_supports_check(l);
  SUCCEED("no assertion failures");
}

TEST_CASE("Noetherian and weakly Noetherian verdicts") {
  for (const Space& x : spectral_fixture_spaces()) {
    CHECK(is_noetherian(x));
    CHECK(is_weakly_noetherian(x));
  }
  Space sierp = fixtures::sierpinski();
  CHECK(is_weakly_visible(sierp, 1));  // {q} = Thomason {q} within full
  for (int p = 0; p < 3; ++p) CHECK(is_weakly_visible(fixtures::discrete(3), p));
}

TEST_CASE("omega") {
  Lattice sierp = omega(fixtures::sierpinski());
  CHECK(sierp.size() == 3);
  CHECK(is_distributive(sierp));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK((sierp.leq(a, b) || sierp.leq(b, a)));  // chain

  Lattice disc2 = omega(fixtures::discrete(2));
  CHECK(disc2.size() == 4);
  CHECK(meet_primes(disc2) == (bit(disc2.poset.index_of("{p0}")) | bit(disc2.poset.index_of("{p1}"))));

  CHECK(omega(fixtures::discrete(1)).size() == 2);
  CHECK(omega(spc_of_lattice(fixtures::one()).space).size() == 1);  // empty space
}

TEST_CASE("Stone round trip on the whole corpus") {
  for (const Lattice& l : fixtures::distributive_corpus()) {
    IdealLattice id = all_ideals(l);
    LatticeSpectrum s = spc_of_lattice(l);
    // Ideal -> union of supports is an order bijection Id(L) -> Omega(Spc(L)).
    std::vector<Mask> image;
    for (Mask ideal : id.ideals) {
      Mask u = 0;
      for_each_bit(ideal, [&](int x) { u |= s.supp[static_cast<std::size_t>(x)]; });
      image.push_back(u);
    }
    std::vector<Mask> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::unique(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(sorted == s.space.opens);
    for (std::size_t i = 0; i < id.ideals.size(); ++i)
      for (std::size_t j = 0; j < id.ideals.size(); ++j)
        CHECK(subset(id.ideals[i], id.ideals[j]) == subset(image[i], image[j]));
  }
}

TEST_CASE("points of Spc(L) are the meet-primes of Id(L)") {
  for (const Lattice& l : fixtures::distributive_corpus()) {
    IdealLattice id = all_ideals(l);
    LatticeSpectrum s = spc_of_lattice(l);
    Mask expected = 0;
    for (Mask p : s.primes) expected |= bit(id.index_of_ideal(p));
    CHECK(meet_primes(id.lattice) == expected);
  }
}
