#include <catch2/catch_amalgamated.hpp>

#include "stoneworks/crossed.hpp"
#include "stoneworks/fixtures.hpp"

using namespace stoneworks;

TEST_CASE("group validation") {
  Group c2 = cyclic2();
  CHECK(c2.identity == 0);
  CHECK(c2.inv(1) == 1);
  CHECK_THROWS_WITH(make_group({"e", "c"}, {{0, 1}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("InvalidAction"));
}

TEST_CASE("action validation") {
  require_valid(fixtures::c2_swap_matrix2());
  require_valid(fixtures::trivial_action(fixtures::comm3()));
  require_valid(fixtures::c2_identity_action(fixtures::nilp3()));

  GroupAction bad = fixtures::c2_swap_matrix2();
  bad.act[1] = {0, 2, 1, 0};  // not a permutation
  CHECK_THROWS_WITH(require_valid(bad), Catch::Matchers::ContainsSubstring("permutation"));

  GroupAction not_auto = fixtures::c2_swap_matrix2();
  not_auto.system.tensor[1][1] = 0;  // e1*e1 = 0 breaks both validity and equivariance
  CHECK_THROWS_AS(require_valid(not_auto), ContractError);
}

TEST_CASE("pure crossed product by the trivial group is the base") {
  for (const TensorSystem& ts : fixtures::system_corpus()) {
    TensorSystem pure = crossed_product_pure(fixtures::trivial_action(ts));
    REQUIRE(pure.size() == ts.size());
    for (int x = 0; x < ts.size(); ++x)
      for (int y = 0; y < ts.size(); ++y) CHECK(pure.tprod(x, y) == ts.tprod(x, y));
    CHECK(pure.additive() == ts.additive());
    std::vector<Mask> base_ideals = all_ideal_masks(ts);
    std::vector<Mask> pure_ideals = all_ideal_masks(pure);
    std::sort(base_ideals.begin(), base_ideals.end());
    std::sort(pure_ideals.begin(), pure_ideals.end());
    CHECK(base_ideals == pure_ideals);
  }
}

TEST_CASE("pure crossed product of the swap action") {
  TensorSystem pure = crossed_product_pure(fixtures::c2_swap_matrix2());
  CHECK(pure.size() == 8);
  CHECK(validate(pure).ok);
  CHECK(!pure.additive());

  // twisted product: (e1@e)(e1@c) = e1@c but (e1@c)(e1@e) = 0@c
  int e1e = pure.index_of("e1@e"), e1c = pure.index_of("e1@c");
  CHECK(pure.tprod(e1e, e1c) == pure.index_of("e1@c"));
  CHECK(pure.tprod(e1c, e1e) == pure.index_of("0@c"));

  // the zero class is the two indexed zeros
  CHECK(pure.zero_class() == (bit(pure.index_of("0@e")) | bit(pure.index_of("0@c"))));
}

TEST_CASE("full crossed product") {
  TensorSystem full = crossed_product_full(fixtures::c2_swap_matrix2());
  CHECK(full.size() == 16);
  CHECK(full.additive());
  CHECK(validate(full).ok);

  TensorSystem trivial = crossed_product_full(fixtures::trivial_action(fixtures::matrix2()));
  CHECK(trivial.size() == 4);

  CHECK_THROWS_WITH(crossed_product_full(fixtures::c2_swap_freepair()),
                    Catch::Matchers::ContainsSubstring("NotAdditive"));
}

TEST_CASE("G-ideals and G-primes of the swap action") {
  GroupAction a = fixtures::c2_swap_matrix2();
  std::vector<Mask> gideals = g_ideal_masks(a);
  // stability glues e1,e2; the rule then fires 1, so only the extremes remain
  CHECK(gideals == std::vector<Mask>{bit(0), full_mask(4)});

  std::vector<Mask> gp = g_primes(a);
  REQUIRE(gp.size() == 1);
  CHECK(gp[0] == bit(0));
  // {0} is G-prime yet not prime in the base; it is semiprime
  CHECK(!is_prime(a.system, bit(0)));
  CHECK(is_semiprime(a.system, bit(0)));

  // trivial action: G-ideals are the ideals, G-primes the primes
  GroupAction t = fixtures::trivial_action(fixtures::matrix2());
  std::vector<Mask> tideals = g_ideal_masks(t);
  std::vector<Mask> base = all_ideal_masks(t.system);
  std::sort(base.begin(), base.end());
  CHECK(tideals == base);
  std::vector<Mask> tp = g_primes(t);
  std::sort(tp.begin(), tp.end());
  CHECK(tp == prime_ideals(t.system));

  // the improper ideal is never G-prime
  for (Mask p : gp) CHECK(p != full_mask(4));
}

TEST_CASE("HV bijection") {
  HvBijectionVerdict swap = hv_bijection_check(fixtures::c2_swap_matrix2());
  CHECK(swap.ideal_bijection);
  CHECK(swap.spc_homeomorphism);
  CHECK(swap.g_ideal_count == 2);
  CHECK(swap.crossed_ideal_count == 2);

  for (const TensorSystem& ts : fixtures::system_corpus()) {
    HvBijectionVerdict v = hv_bijection_check(fixtures::trivial_action(ts));
    CHECK(v.ideal_bijection);
    CHECK(v.spc_homeomorphism);
  }

  HvBijectionVerdict idc = hv_bijection_check(fixtures::c2_identity_action(fixtures::comm3()));
  CHECK(idc.ideal_bijection);
  CHECK(idc.spc_homeomorphism);

  HvBijectionVerdict fp = hv_bijection_check(fixtures::c2_swap_freepair());
  CHECK(fp.ideal_bijection);
}

TEST_CASE("respecting semiprimes") {
  RespSemiprimeVerdict swap = resp_semiprime_check(fixtures::c2_swap_matrix2());
  CHECK(swap.all_g_primes_semiprime);
  CHECK(swap.bijection_restricts);

  RespSemiprimeVerdict n3 = resp_semiprime_check(fixtures::c2_identity_action(fixtures::nilp3()));
  CHECK(n3.all_g_primes_semiprime == n3.bijection_restricts);

  for (const TensorSystem& ts : fixtures::system_corpus()) {
    RespSemiprimeVerdict v = resp_semiprime_check(fixtures::trivial_action(ts));
    CHECK(v.all_g_primes_semiprime);
    CHECK(v.bijection_restricts);
  }
}

TEST_CASE("compact detection inheritance") {
  cd_inheritance_check(fixtures::c2_swap_matrix2());
  cd_inheritance_check(fixtures::trivial_action(fixtures::comm3()));
  cd_inheritance_check(fixtures::c2_identity_action(fixtures::comm3()));
  SUCCEED("witness transport verified");
}

TEST_CASE("finite-G principal closure of the full model") {
  pc_finite_g_check(fixtures::c2_swap_matrix2());
  pc_finite_g_check(fixtures::trivial_action(fixtures::matrix2()));
  pc_finite_g_check(fixtures::trivial_action(fixtures::comm3()));
  pc_finite_g_check(fixtures::c2_identity_action(fixtures::nilp3()));
  CHECK_THROWS_WITH(pc_finite_g_check(fixtures::c2_swap_freepair()),
                    Catch::Matchers::ContainsSubstring("PreconditionUnmet"));
}

TEST_CASE("crossed systems slot into the classification machinery") {
  TensorSystem pure = crossed_product_pure(fixtures::c2_swap_matrix2());
  theorem_a_check(pure);
  TensorSystem full = crossed_product_full(fixtures::c2_swap_matrix2());
  theorem_a_check(full);
  CHECK(theorem_b_check(full).all_true);  // additive, hence trivialized

  // noncommutativity shows up in the pure product
  Mask central = central_elements(pure);
  CHECK(central == (bit(pure.index_of("0@e")) | bit(pure.index_of("0@c")) |
                    bit(pure.index_of("1@e"))));

  // five-way equivalence survives on crossed systems
  for (Mask ideal : all_ideal_masks(pure)) {
    if (ideal == full_mask(pure.size())) continue;
    prime_equivalences(pure, ideal);
  }
}
