#include <catch2/catch_amalgamated.hpp>

#include "stoneworks/fixtures.hpp"
#include "stoneworks/support.hpp"

using namespace stoneworks;

namespace {

// Remark fixture: chain 0 < 1 < 2 mapped onto a point, faithful but not
// injective.
OpenSupportDatum three_poset_datum() {
  OpenSupportDatum d;
  d.base = fixtures::chain(3);
  d.target = fixtures::discrete(1);
  d.sigma = {0, bit(0), bit(0)};
  return d;
}

std::vector<OpenSupportDatum> datum_corpus() {
  std::vector<OpenSupportDatum> out;
  for (const Lattice& l : fixtures::distributive_corpus()) {
    out.push_back(canonical_support_datum(l));
    out.push_back(closed_points_datum(l));
  }
  out.push_back(three_poset_datum());
  OpenSupportDatum collapse;  // C3 with the middle crushed to empty
  collapse.base = fixtures::c3();
  collapse.target = fixtures::sierpinski();
  collapse.sigma = {0, 0, collapse.target.full()};
  out.push_back(collapse);
  return out;
}

}  // namespace

TEST_CASE("datum validation") {
  CHECK(validate(canonical_support_datum(fixtures::b2())).ok);

  OpenSupportDatum bad = canonical_support_datum(fixtures::b2());
  bad.sigma[bad.base.bottom] = bit(0);
  DatumValidation v = validate(bad);
  CHECK(!v.ok);
  CHECK(v.clause == "a");
  CHECK_THROWS_WITH(properties(bad), Catch::Matchers::ContainsSubstring("AxiomViolation"));

  // constant-empty sigma on a nontrivial lattice breaks sigma(1) = X
  OpenSupportDatum empty;
  empty.base = fixtures::b2();
  empty.target = fixtures::sierpinski();
  empty.sigma = {0, 0, 0, 0};
  CHECK(!validate(empty).ok);

  // a lattice-morphism sigma with sigma(m) = X is fine
  OpenSupportDatum mid_full;
  mid_full.base = fixtures::c3();
  mid_full.target = fixtures::sierpinski();
  mid_full.sigma = {0, mid_full.target.full(), mid_full.target.full()};
  CHECK(validate(mid_full).ok);

  for (const OpenSupportDatum& d : datum_corpus()) CHECK(validate(d).ok);
}

TEST_CASE("property flags") {
  DatumProperties three = properties(three_poset_datum());
  CHECK(three.faithful);
  CHECK(!three.injective);
  CHECK(!three.order_reflecting);

  DatumProperties b2 = properties(canonical_support_datum(fixtures::b2()));
  CHECK(b2.injective);
  CHECK(b2.faithful);
  CHECK(b2.order_reflecting);
  CHECK(b2.realizing);
  CHECK(b2.noetherian_realizing);
}

TEST_CASE("classifying verdicts and witnesses") {
  CHECK(is_classifying(canonical_support_datum(fixtures::b2())).classifying);

  ClassifyingVerdict three = is_classifying(three_poset_datum());
  CHECK(!three.classifying);
  CHECK_THAT(three.witness, Catch::Matchers::ContainsSubstring("same open"));

  CHECK(is_classifying(canonical_support_datum(fixtures::one())).classifying);
}

TEST_CASE("classifying iff injective and realizing, over the corpus") {
  for (const OpenSupportDatum& d : datum_corpus()) classifying_iff_check(d);
  SUCCEED("criterion agreed on every datum");
}

TEST_CASE("universal map") {
  // final object: the identity on Spc(B2)
  OpenSupportDatum b2 = canonical_support_datum(fixtures::b2());
  UniversalMap u = universal_map(b2);
  for (int x = 0; x < b2.target.size(); ++x) CHECK(u.point_map[static_cast<std::size_t>(x)] == x);

  // closed-points restriction: the subspace inclusion
  OpenSupportDatum cp = closed_points_datum(fixtures::c3());
  UniversalMap v = universal_map(cp);
  REQUIRE(cp.target.size() == 1);
  CHECK(v.spectrum.primes[static_cast<std::size_t>(v.point_map[0])] == bit(0));

  UniversalMap w = universal_map(canonical_support_datum(fixtures::one()));
  CHECK(w.point_map.empty());
}

TEST_CASE("universal map is the unique morphism to (Spc, supp)") {
  std::vector<OpenSupportDatum> data = {canonical_support_datum(fixtures::b2()),
                                        closed_points_datum(fixtures::c3()), three_poset_datum(),
                                        canonical_support_datum(fixtures::grid2x3())};
  for (const OpenSupportDatum& d : data) {
    UniversalMap u = universal_map(d);
    const int pts = d.target.size();
    const int spts = u.spectrum.space.size();
    // enumerate every map target -> Spc(base)
    std::vector<int> f(static_cast<std::size_t>(pts), 0);
    int found = 0;
    for (;;) {
      bool continuous = true;
      for (Mask open : u.spectrum.space.opens) {
        Mask pre = 0;
        for (int x = 0; x < pts; ++x)
          if (has(open, f[static_cast<std::size_t>(x)])) pre |= bit(x);
        if (!d.target.is_open(pre)) continuous = false;
      }
      bool compatible = true;
      for (int a = 0; a < d.base.size() && compatible; ++a) {
        Mask pre = 0;
        for (int x = 0; x < pts; ++x)
          if (has(u.spectrum.supp[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(x)]))
            pre |= bit(x);
        if (pre != d.sigma[static_cast<std::size_t>(a)]) compatible = false;
      }
      if (continuous && compatible) {
        ++found;
        CHECK(f == u.point_map);
      }
      int i = 0;
      while (i < pts && ++f[static_cast<std::size_t>(i)] == spts) f[static_cast<std::size_t>(i++)] = 0;
      if (i == pts) break;
      if (pts == 0) break;
    }
    if (pts == 0)
      CHECK(u.point_map.empty());
    else
      CHECK(found == 1);
  }
}

TEST_CASE("classifying data are homeomorphic to the spectrum") {
  for (const OpenSupportDatum& d : datum_corpus()) {
    if (!is_classifying(d).classifying) continue;
    UniversalMap u = universal_map(d);
    // bijective on points
    std::vector<int> seen(static_cast<std::size_t>(u.spectrum.space.size()), 0);
    for (int p : u.point_map) seen[static_cast<std::size_t>(p)]++;
    for (int c : seen) CHECK(c == 1);
    CHECK(d.target.size() == u.spectrum.space.size());
    // image of every open is open (continuity of the inverse)
    for (Mask open : d.target.opens) {
      Mask img = 0;
      for_each_bit(open, [&](int x) { img |= bit(u.point_map[static_cast<std::size_t>(x)]); });
      CHECK(u.spectrum.space.is_open(img));
    }
  }
}

TEST_CASE("closed points datum on the named fixtures") {
  OpenSupportDatum c3 = closed_points_datum(fixtures::c3());
  DatumProperties p = properties(c3);
  CHECK(p.faithful);
  CHECK(p.realizing);
  CHECK(!is_classifying(c3).classifying);
  CHECK(!p.injective);

  OpenSupportDatum b2 = closed_points_datum(fixtures::b2());
  CHECK(b2.target.size() == 2);  // all points closed
  CHECK(is_classifying(b2).classifying);

  OpenSupportDatum two = closed_points_datum(fixtures::two());
  CHECK(two.target.size() == 1);
  CHECK(is_classifying(two).classifying);
}

TEST_CASE("noetherian realizing check") {
  noetherian_realizing_check(canonical_support_datum(fixtures::b2()));
  noetherian_realizing_check(canonical_support_datum(fixtures::grid2x3()));
  CHECK_THROWS_WITH(noetherian_realizing_check(three_poset_datum()),
                    Catch::Matchers::ContainsSubstring("PreconditionUnmet"));
}

TEST_CASE("closed to open translation") {
  // closed supports on Spc(B2)^v; complements give supp over the opposite
  LatticeSpectrum s = spc_of_lattice(fixtures::b2());
  ClosedSupportDatum closed;
  closed.base = fixtures::b2();
  closed.target = spc_dual_of_lattice(s);
  closed.sigma = s.supp;  // discrete target: supports are closed too
  REQUIRE(validate(closed).ok);

  OpenSupportDatum open = closed_to_open(closed);
  CHECK(validate(open).ok);
  for (int x = 0; x < 4; ++x)
    CHECK(open.sigma[static_cast<std::size_t>(x)] ==
          (closed.target.full() & ~s.supp[static_cast<std::size_t>(x)]));
  CHECK(is_classifying(open).classifying);  // B2 is self-opposite

  ClosedSupportDatum bad = closed;
  bad.sigma[bad.base.bottom] = bad.target.full();
  CHECK(!validate(bad).ok);
}
