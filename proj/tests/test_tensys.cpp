#include <catch2/catch_amalgamated.hpp>

#include "stoneworks/classification.hpp"
#include "stoneworks/fixtures.hpp"
#include "stoneworks/tensor_system.hpp"

using namespace stoneworks;

namespace {

// Brute-force oracle: ideals by raw subset enumeration.
std::vector<Mask> system_ideals_by_enumeration(const TensorSystem& ts) {
  std::vector<Mask> out;
  const Mask limit = full_mask(ts.size());
  for (Mask m = 0;; ++m) {
    if (is_ideal_set(ts, m)) out.push_back(m);
    if (m == limit) break;
  }
  return out;
}

// Oracle for semiprimes: intersections of prime families, plus the empty
// intersection.
std::vector<Mask> semiprimes_by_prime_intersections(const TensorSystem& ts) {
  std::vector<Mask> primes = prime_ideals(ts);
  std::vector<Mask> out;
  const Mask limit = full_mask(static_cast<int>(primes.size()));
  for (Mask pick = 0;; ++pick) {
    Mask acc = full_mask(ts.size());
    for_each_bit(pick, [&](int i) { acc &= primes[static_cast<std::size_t>(i)]; });
    out.push_back(acc);
    if (pick == limit) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("validation accepts the corpus and reports additivity") {
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    SystemValidation v = validate(ts);
    CHECK(v.ok);
  }
  CHECK(validate(fixtures::matrix2()).additive);
  CHECK(validate(fixtures::comm3()).additive);
  CHECK(!validate(fixtures::freepair()).additive);
}

TEST_CASE("validation rejects broken systems with named witnesses") {
  SystemValidation no_rule = validate(fixtures::matrix2_missing_sum_rule());
  CHECK(!no_rule.ok);
  CHECK(no_rule.violation == "sum-rules");

  SystemValidation unstable = validate(fixtures::broken_tensor_stability());
  CHECK(!unstable.ok);
  CHECK(unstable.violation == "tensor-stability");
  CHECK_THAT(unstable.witness, Catch::Matchers::ContainsSubstring("b"));

  CHECK(validate(fixtures::broken_associativity()).violation == "associativity");
  CHECK(validate(fixtures::broken_absorber()).violation == "zero-absorber");
}

TEST_CASE("ideal generation by forward chaining") {
  TensorSystem m2 = fixtures::matrix2();
  CHECK(ideal_generated(m2, bit(1)) == (bit(0) | bit(1)));          // <e1>
  CHECK(ideal_generated(m2, 0) == bit(0));                          // least ideal
  CHECK(ideal_generated(m2, bit(1) | bit(2)) == full_mask(4));      // rule fires 1

  // fixpoint oracle: least ideal containing the seed by enumeration
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    std::vector<Mask> ideals = system_ideals_by_enumeration(ts);
    const Mask limit = full_mask(ts.size());
    for (Mask seed = 0;; ++seed) {
      Mask least = full_mask(ts.size());
      for (Mask i : ideals)
        if (subset(seed, i)) least &= i;
      CHECK(ideal_generated(ts, seed) == least);
      if (seed == limit) break;
    }
  }
}

TEST_CASE("T(K) matches the enumeration oracle") {
  TensorSystem m2 = fixtures::matrix2();
  SystemIdeals t = all_ideals(m2);
  CHECK(t.ideals.size() == 4);

  CHECK(all_ideals(fixtures::comm3()).ideals.size() == 3);
  std::vector<Mask> n3 = all_ideal_masks(fixtures::nilp3());
  std::sort(n3.begin(), n3.end());
  CHECK(n3 == std::vector<Mask>{bit(0), bit(0) | bit(1), full_mask(3)});

  for (const TensorSystem& ts : fixtures::system_corpus()) {
    std::vector<Mask> got = all_ideal_masks(ts);
    std::sort(got.begin(), got.end());
    CHECK(got == system_ideals_by_enumeration(ts));
  }
}

TEST_CASE("primality hierarchy on the named instances") {
  TensorSystem m2 = fixtures::matrix2();
  Mask zero = bit(0);
  CHECK(!is_prime(m2, zero));
  CHECK(!is_completely_prime(m2, zero));
  CHECK(is_semiprime(m2, zero));
  CHECK(is_radical(m2, zero));

  TensorSystem n3 = fixtures::nilp3();
  CHECK(!is_semiprime(n3, bit(0)));
  CHECK(!is_radical(n3, bit(0)));

  for (const TensorSystem& ts : fixtures::system_corpus()) {
    Mask full = full_mask(ts.size());
    CHECK(!is_prime(ts, full));
    CHECK(!is_completely_prime(ts, full));
    CHECK(is_semiprime(ts, full));
    CHECK(is_radical(ts, full));
  }

  CHECK_THROWS_WITH(is_prime(m2, bit(1)), Catch::Matchers::ContainsSubstring("NotAnIdeal"));
}

TEST_CASE("primes and semiprimes of the named fixtures") {
  TensorSystem fp = fixtures::freepair();
  std::vector<Mask> primes = prime_ideals(fp);
  CHECK(primes == std::vector<Mask>{bit(0) | bit(1), bit(0) | bit(2), bit(0) | bit(1) | bit(2)});
  CHECK(semiprime_ideals(fp).size() == 5);

  CHECK(prime_ideals(fixtures::matrix2()).size() == 2);
  CHECK(prime_ideals(fixtures::unit_only()).empty());

  for (const TensorSystem& ts : fixtures::system_corpus()) {
    std::vector<Mask> got = semiprime_ideals(ts);
    CHECK(got == semiprimes_by_prime_intersections(ts));
  }
}

TEST_CASE("the primality hierarchy nests") {
  for (const TensorSystem& ts : fixtures::system_corpus())
    for (Mask ideal : all_ideal_masks(ts)) {
      if (ideal != full_mask(ts.size())) {
        if (is_prime(ts, ideal)) CHECK(is_semiprime(ts, ideal));
        if (is_completely_prime(ts, ideal)) {
          CHECK(is_prime(ts, ideal));
          CHECK(is_semiprime(ts, ideal));
        }
      }
      if (is_radical(ts, ideal)) CHECK(is_semiprime(ts, ideal));
    }
}

TEST_CASE("five-way prime equivalence on every proper ideal") {
  for (const TensorSystem& ts : fixtures::system_corpus())
    for (Mask ideal : all_ideal_masks(ts)) {
      if (ideal == full_mask(ts.size())) continue;
      PrimeEquivalences e = prime_equivalences(ts, ideal);
      CHECK(e.ideal_pair == is_prime(ts, ideal));
    }
  CHECK_THROWS_WITH(prime_equivalences(fixtures::matrix2(), full_mask(4)),
                    Catch::Matchers::ContainsSubstring("PreconditionUnmet"));
}

TEST_CASE("semiprime and radical hulls") {
  TensorSystem n3 = fixtures::nilp3();
  CHECK(semiprime_hull(n3, bit(0)) == (bit(0) | bit(1)));  // <0>_s = {0,a}
  TensorSystem m2 = fixtures::matrix2();
  CHECK(semiprime_hull(m2, bit(1)) == (bit(0) | bit(1)));
  CHECK(semiprime_hull(m2, full_mask(4)) == full_mask(4));

  // radical hull via completely primes; in MATRIX2 both coincide
  CHECK(radical_hull(m2, bit(1)) == (bit(0) | bit(1)));
  // NILP3: no completely prime avoids a, radical hull of 0 is {0,a}
  CHECK(radical_hull(n3, bit(0)) == (bit(0) | bit(1)));
}

TEST_CASE("semiprime hull is a closure operator") {
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    const Mask limit = full_mask(ts.size());
    for (Mask s = 0;; ++s) {
      Mask h = semiprime_hull(ts, s);
      CHECK(subset(s, h));
      CHECK(semiprime_hull(ts, h) == h);
      for (Mask t = 0;; ++t) {
        if (subset(s, t)) CHECK(subset(h, semiprime_hull(ts, t)));
        if (t == limit) break;
      }
      if (s == limit) break;
    }
  }
}

TEST_CASE("T_s is a spatial frame with the expected shapes") {
  SemiprimeLattice m2 = ts_lattice(fixtures::matrix2());
  CHECK(m2.semiprimes.size() == 4);
  CHECK(count(meet_primes(m2.lattice)) == 2);  // Boolean square

  CHECK(ts_lattice(fixtures::freepair()).semiprimes.size() == 5);
  CHECK(ts_lattice(fixtures::nilp3()).semiprimes.size() == 2);
  CHECK(ts_lattice(fixtures::comm3()).semiprimes.size() == 3);
  CHECK(ts_lattice(fixtures::unit_only()).semiprimes.size() == 1);
}

TEST_CASE("hull inclusion lemma, exhaustively") {
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    const Mask limit = full_mask(ts.size());
    for (Mask m = 0;; ++m) {
      for (Mask n = 0;; ++n) {
        hull_inclusion_check(ts, m, n);
        if (n == limit) break;
      }
      if (m == limit) break;
    }
  }
  SUCCEED("no inclusion violations");
}

TEST_CASE("spectra of tensor systems") {
  SystemSpectrum m2 = spc(fixtures::matrix2());
  CHECK(m2.primes.size() == 2);
  CHECK(m2.space.opens.size() == 4);  // discrete
  CHECK(spc_nu(fixtures::matrix2()).space.opens.size() == 4);

  TensorSystem fp = fixtures::freepair();
  SystemSpectrum s = spc(fp);
  REQUIRE(s.primes.size() == 3);
  int pa = s.point_of(bit(0) | bit(1));
  int pb = s.point_of(bit(0) | bit(2));
  int pab = s.point_of(bit(0) | bit(1) | bit(2));
  CHECK(s.supp[fp.index_of("a")] == bit(pb));
  CHECK(s.supp[fp.index_of("b")] == bit(pa));
  CHECK(s.space.is_open(bit(pab)));  // {P_ab} is open in Spc

  SystemSpectrum nu = spc_nu(fp);
  CHECK(!nu.space.is_open(bit(pab)));  // but not in Spc^nu
  CHECK(nu.space.opens.size() == 5);

  CHECK(spc(fixtures::unit_only()).space.size() == 0);
}

TEST_CASE("pseudo-Hochster classification (lattice isomorphism)") {
  TheoremAVerdict m2 = theorem_a_check(fixtures::matrix2());
  CHECK(m2.semiprime_count == 4);
  TheoremAVerdict fp = theorem_a_check(fixtures::freepair());
  CHECK(fp.semiprime_count == 5);
  CHECK(fp.open_count == 5);
  TheoremAVerdict one = theorem_a_check(fixtures::unit_only());
  CHECK(one.semiprime_count == 1);
  for (const TensorSystem& ts : fixtures::system_corpus()) theorem_a_check(ts);
}

TEST_CASE("Spc^nu is the point space of T_s") {
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    SemiprimeLattice t = ts_lattice(ts);
    SystemSpectrum nu = spc_nu(ts);
    Mask expected = 0;
    for (Mask p : nu.primes) expected |= bit(t.index_of(p));
    CHECK(meet_primes(t.lattice) == expected);
  }
}

TEST_CASE("principal part") {
  PrincipalPart m2 = principal_part(fixtures::matrix2());
  CHECK(m2.principals.size() == 4);
  CHECK(m2.is_sublattice_of_ts);
  CHECK(m2.equals_compacts_of_ts);

  PrincipalPart fp = principal_part(fixtures::freepair());
  CHECK(fp.principals.size() == 4);  // {0,a,b} is missing
  CHECK(!fp.equals_compacts_of_ts);
  CHECK(!fp.is_sublattice_of_ts);  // the join <a> v <b> is not principal

  PrincipalPart c3 = principal_part(fixtures::comm3());
  CHECK(c3.principals.size() == 3);
  CHECK(c3.equals_compacts_of_ts);
}

TEST_CASE("principal closure") {
  CHECK(is_principally_closed(fixtures::matrix2()).ok);
  CHECK(is_principally_closed(fixtures::freepair()).ok);  // <a> ^ <b> = <0>
  CHECK(is_principally_closed(fixtures::comm3()).ok);
}

TEST_CASE("compact detection") {
  CompactDetectionVerdict m2 = compact_detection(fixtures::matrix2());
  CHECK(m2.element_level);
  CHECK(m2.set_level);
  CHECK(m2.lattice_level);
  for (const std::optional<int>& w : m2.witness) CHECK(w.has_value());

  CompactDetectionVerdict fp = compact_detection(fixtures::freepair());
  CHECK(fp.element_level);    // witnesses exist elementwise
  CHECK(!fp.lattice_level);   // but {0,a,b} is compact and non-principal

  CompactDetectionVerdict c3 = compact_detection(fixtures::comm3());
  CHECK(c3.element_level);
  CHECK(c3.lattice_level);
}

TEST_CASE("compact-detection witnesses satisfy the ideal-membership form") {
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    CompactDetectionVerdict v = compact_detection(ts);
    std::vector<Mask> semiprimes = semiprime_ideals(ts);
    for (int x = 0; x < ts.size(); ++x) {
      if (!v.witness[static_cast<std::size_t>(x)]) continue;
      int s = *v.witness[static_cast<std::size_t>(x)];
      int sandwich = ts.tprod(ts.tprod(x, s), x);
      for (Mask ideal : semiprimes)
        CHECK(has(ideal, x) == has(ideal, sandwich));
    }
  }
}

TEST_CASE("Theorem B three-way equivalence") {
  TheoremBVerdict m2 = theorem_b_check(fixtures::matrix2());
  CHECK(m2.all_true);
  TheoremBVerdict c3 = theorem_b_check(fixtures::comm3());
  CHECK(c3.all_true);
  TheoremBVerdict n3 = theorem_b_check(fixtures::nilp3());
  CHECK(n3.all_true);

  TheoremBVerdict fp = theorem_b_check(fixtures::freepair());
  CHECK(!fp.clause_conditions);
  CHECK(!fp.clause_coherent);
  CHECK(!fp.clause_spectral);
  CHECK(fp.principal_closure);
  CHECK(!fp.compact_detection_lattice);
  CHECK(fp.witness_open == "{{0,a,b}}");  // the quasi-compact open that is no co-support
}

TEST_CASE("additive systems trivialize Theorem B") {
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    if (!ts.additive()) continue;
    // every semiprime is principal: finite sums exist
    PrincipalPart pp = principal_part(ts);
    CHECK(pp.principals == ts_lattice(ts).semiprimes);
    CHECK(theorem_b_check(ts).all_true);
  }
}

TEST_CASE("Thomason classification tables") {
  ClassificationTable m2 = classify(fixtures::matrix2());
  CHECK(m2.rows.size() == 4);
  ClassificationTable c3 = classify(fixtures::comm3());
  CHECK(c3.rows.size() == 3);
  CHECK_THROWS_WITH(classify(fixtures::freepair()),
                    Catch::Matchers::ContainsSubstring("compact detection"));
}

TEST_CASE("principal joins lemma on additive fixtures") {
  PrincipalJoinsVerdict m2 = lemma_principal_joins_check(fixtures::matrix2());
  CHECK(m2.join_equality);
  CHECK(m2.meet_equality_all);
  CHECK(m2.all_semiprimes_radical);
  CHECK(m2.all_primes_completely_prime);

  PrincipalJoinsVerdict c3 = lemma_principal_joins_check(fixtures::comm3());
  CHECK(c3.meet_equality_all);

  PrincipalJoinsVerdict n3 = lemma_principal_joins_check(fixtures::nilp3());
  CHECK(n3.meet_equality_all);  // the nilpotent hides below every prime

  CHECK_THROWS_WITH(lemma_principal_joins_check(fixtures::freepair()),
                    Catch::Matchers::ContainsSubstring("PreconditionUnmet"));
}

TEST_CASE("central elements and central generation") {
  // the MATRIX2 tensor table is commutative, so everything is central
  CHECK(central_elements(fixtures::matrix2()) == full_mask(4));
  CHECK(central_elements(fixtures::comm3()) == full_mask(3));

  CentralGenerationVerdict m2 = weak_central_generation_check(fixtures::matrix2(), full_mask(4));
  CHECK(m2.thickly_generates);
  CHECK(m2.ideals_centrally_generated);

  CentralClosureVerdict v = central_implies_pc_check(fixtures::comm3());
  CHECK(v.principal_closure);
  CHECK(v.central_generators);
  CHECK(central_implies_pc_check(fixtures::matrix2()).principal_closure);

  CHECK_THROWS_WITH(central_implies_pc_check(fixtures::freepair()),
                    Catch::Matchers::ContainsSubstring("PreconditionUnmet"));
}

TEST_CASE("Theorem C part 1 via the canonical closed datum") {
  TheoremC1Verdict m2 = theorem_c1_check(fixtures::matrix2(), canonical_closed_datum(fixtures::matrix2()));
  CHECK(m2.applicable);
  CHECK(m2.homeomorphism);

  TheoremC1Verdict c3 = theorem_c1_check(fixtures::comm3(), canonical_closed_datum(fixtures::comm3()));
  CHECK(c3.applicable);
  CHECK(c3.homeomorphism);

  CHECK_THROWS_WITH(theorem_c1_check(fixtures::freepair(), canonical_closed_datum(fixtures::matrix2())),
                    Catch::Matchers::ContainsSubstring("PreconditionUnmet"));
}
