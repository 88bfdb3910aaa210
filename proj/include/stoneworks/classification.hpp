#pragma once

// Spectra of tensor systems and the classification verifiers: the pseudo-
// Hochster classification (A), the principal-closure / compact-detection
// equivalence (B) with the Thomason bijection, the classifying-support
// criterion for closed data (C part 1), and the central-generation route to
// principal closure.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/frames.hpp"
#include "stoneworks/space.hpp"
#include "stoneworks/support.hpp"
#include "stoneworks/tensor_system.hpp"

namespace stoneworks {

// Spc(K): points are the prime thick tensor ideals, supports form a closed
// basis; the pseudo-Hochster dual Spc(K)^nu has the same points with the
// supports open.
struct SystemSpectrum {
  std::vector<Mask> primes;  // ascending mask order
  Space space;
  std::vector<Mask> supp;  // per element: point mask

  int point_of(Mask prime) const {
    for (int i = 0; i < static_cast<int>(primes.size()); ++i)
      if (primes[static_cast<std::size_t>(i)] == prime) return i;
    fail(ErrorKind::unknown_element, "not a prime ideal of the system");
  }
};

namespace detail {
inline SystemSpectrum system_spectrum(const TensorSystem& ts, bool closed_supports) {
  SystemSpectrum s;
  s.primes = prime_ideals(ts);
  std::vector<std::string> names;
  names.reserve(s.primes.size());
  for (Mask p : s.primes) names.push_back(mask_name(p, ts.elements));
  s.supp.assign(static_cast<std::size_t>(ts.size()), 0);
  for (int x = 0; x < ts.size(); ++x)
    for (int i = 0; i < static_cast<int>(s.primes.size()); ++i)
      if (!has(s.primes[static_cast<std::size_t>(i)], x)) s.supp[static_cast<std::size_t>(x)] |= bit(i);
  s.space = closed_supports ? from_closed_basis(names, s.supp) : from_open_basis(names, s.supp);
  return s;
}
}  // namespace detail

inline SystemSpectrum spc(const TensorSystem& ts) { return detail::system_spectrum(ts, true); }
inline SystemSpectrum spc_nu(const TensorSystem& ts) { return detail::system_spectrum(ts, false); }

// Theorem: I -> union of supports is an order bijection
// T_s(K) -> Omega(Spc(K)^nu).
struct TheoremAVerdict {
  int semiprime_count = 0;
  int open_count = 0;
};

inline TheoremAVerdict theorem_a_check(const TensorSystem& ts) {
  SemiprimeLattice t = ts_lattice(ts);
  SystemSpectrum nu = spc_nu(ts);
  std::vector<Mask> image;
  image.reserve(t.semiprimes.size());
  for (Mask ideal : t.semiprimes) {
    Mask u = 0;
    for_each_bit(ideal, [&](int x) { u |= nu.supp[static_cast<std::size_t>(x)]; });
    image.push_back(u);
  }
  std::vector<Mask> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  check_equiv(std::unique(sorted.begin(), sorted.end()) == sorted.end(),
              "pseudo-Hochster classification: support map is not injective");
  check_equiv(sorted == nu.space.opens,
              "pseudo-Hochster classification: support map is not onto the opens");
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = 0; j < image.size(); ++j)
      check_equiv(subset(image[i], image[j]) == subset(t.semiprimes[i], t.semiprimes[j]),
                  "pseudo-Hochster classification: order is not reflected");
  return TheoremAVerdict{static_cast<int>(t.semiprimes.size()),
                         static_cast<int>(nu.space.opens.size())};
}

// --- principal part -----------------------------------------------------------

struct PrincipalPart {
  std::vector<Mask> principals;      // distinct hulls <x>_s, ascending
  std::vector<Mask> element_hull;    // per element x: <x>_s
  bool is_sublattice_of_ts = false;  // closed under T_s meet and join
  bool equals_compacts_of_ts = false;
};

inline PrincipalPart principal_part(const TensorSystem& ts) {
  PrincipalPart pp;
  pp.element_hull.reserve(static_cast<std::size_t>(ts.size()));
  for (int x = 0; x < ts.size(); ++x) pp.element_hull.push_back(semiprime_hull(ts, bit(x)));
  pp.principals = pp.element_hull;
  std::sort(pp.principals.begin(), pp.principals.end());
  pp.principals.erase(std::unique(pp.principals.begin(), pp.principals.end()), pp.principals.end());

  auto principal = [&](Mask m) {
    return std::binary_search(pp.principals.begin(), pp.principals.end(), m);
  };
  pp.is_sublattice_of_ts = true;
  for (Mask a : pp.principals)
    for (Mask b : pp.principals) {
      if (!principal(a & b)) pp.is_sublattice_of_ts = false;
      if (!principal(semiprime_hull(ts, a | b))) pp.is_sublattice_of_ts = false;
    }

  SemiprimeLattice t = ts_lattice(ts);
  Mask compacts = compact_elements(t.lattice);
  Mask principal_bits = 0;
  for (int i = 0; i < static_cast<int>(t.semiprimes.size()); ++i)
    if (principal(t.semiprimes[static_cast<std::size_t>(i)])) principal_bits |= bit(i);
  pp.equals_compacts_of_ts = compacts == principal_bits;
  return pp;
}

// The principal part as a lattice; requires principal closure so meets exist.
inline Lattice principal_part_lattice(const TensorSystem& ts) {
  PrincipalPart pp = principal_part(ts);
  const int k = static_cast<int>(pp.principals.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (Mask m : pp.principals) names.push_back(mask_name(m, ts.elements));
  std::vector<Mask> down(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subset(pp.principals[static_cast<std::size_t>(j)], pp.principals[static_cast<std::size_t>(i)]))
        down[static_cast<std::size_t>(i)] |= bit(j);
  return to_lattice(from_down_masks(std::move(names), std::move(down)));
}

struct PrincipalClosureVerdict {
  bool ok = true;
  std::string witness;  // offending pair on failure
};

// Principally closed: pairwise intersections of principal hulls are hulls of
// single elements.
inline PrincipalClosureVerdict is_principally_closed(const TensorSystem& ts) {
  PrincipalClosureVerdict v;
  std::vector<Mask> hulls;
  hulls.reserve(static_cast<std::size_t>(ts.size()));
  for (int x = 0; x < ts.size(); ++x) hulls.push_back(semiprime_hull(ts, bit(x)));
  for (int x = 0; x < ts.size() && v.ok; ++x)
    for (int y = 0; y < ts.size() && v.ok; ++y) {
      Mask want = hulls[static_cast<std::size_t>(x)] & hulls[static_cast<std::size_t>(y)];
      bool found = false;
      for (int z = 0; z < ts.size(); ++z)
        if (hulls[static_cast<std::size_t>(z)] == want) found = true;
      if (!found) {
        v.ok = false;
        v.witness = ts.name(x) + ", " + ts.name(y);
      }
    }
  return v;
}

// --- compact detection ----------------------------------------------------------

struct CompactDetectionVerdict {
  std::vector<std::optional<int>> witness;  // per element: some s with <x>_s = <x s x>_s
  std::vector<bool> set_witness;            // per element: the full witness-set search
  bool element_level = false;               // every element has a single witness
  bool set_level = false;
  bool lattice_level = false;  // compacts of T_s are exactly the principals
};

inline CompactDetectionVerdict compact_detection(const TensorSystem& ts) {
  CompactDetectionVerdict v;
  std::vector<Mask> hulls;
  hulls.reserve(static_cast<std::size_t>(ts.size()));
  for (int x = 0; x < ts.size(); ++x) hulls.push_back(semiprime_hull(ts, bit(x)));

  v.witness.assign(static_cast<std::size_t>(ts.size()), std::nullopt);
  v.set_witness.assign(static_cast<std::size_t>(ts.size()), false);
  for (int x = 0; x < ts.size(); ++x) {
    for (int s = 0; s < ts.size(); ++s)
      if (semiprime_hull(ts, bit(ts.tprod(ts.tprod(x, s), x))) == hulls[static_cast<std::size_t>(x)]) {
        v.witness[static_cast<std::size_t>(x)] = s;
        break;
      }
    Mask sandwich = 0;
    for (int s = 0; s < ts.size(); ++s) sandwich |= bit(ts.tprod(ts.tprod(x, s), x));
    v.set_witness[static_cast<std::size_t>(x)] =
        semiprime_hull(ts, sandwich) == hulls[static_cast<std::size_t>(x)];
  }
  v.element_level = std::all_of(v.witness.begin(), v.witness.end(),
                                [](const std::optional<int>& w) { return w.has_value(); });
  v.set_level = std::all_of(v.set_witness.begin(), v.set_witness.end(), [](bool b) { return b; });

  v.lattice_level = principal_part(ts).equals_compacts_of_ts;

  // The element/lattice equivalence is a theorem for additive systems only;
  // non-additive systems may split (and FREEPAIR does).
  if (ts.additive())
    check_equiv(v.element_level == v.lattice_level,
                "additive system: element-level and lattice-level compact detection disagree");
  return v;
}

// --- Theorem B and the Thomason classification -----------------------------------

struct TheoremBVerdict {
  bool principal_closure = false;
  bool compact_detection_lattice = false;
  bool clause_conditions = false;  // (1) principal closure + compact detection
  bool clause_coherent = false;    // (2) T_s coherent with compacts = t_s
  bool clause_spectral = false;    // (3) Spc spectral with qc opens the co-supports
  bool all_true = false;
  std::string witness_open;  // clause (3) witness when it fails
};

inline TheoremBVerdict theorem_b_check(const TensorSystem& ts) {
  TheoremBVerdict v;
  v.principal_closure = is_principally_closed(ts).ok;
  CompactDetectionVerdict cd = compact_detection(ts);
  v.compact_detection_lattice = cd.lattice_level;
  v.clause_conditions = v.principal_closure && v.compact_detection_lattice;

  PrincipalPart pp = principal_part(ts);
  SemiprimeLattice t = ts_lattice(ts);
  v.clause_coherent = is_coherent(t.lattice) && pp.equals_compacts_of_ts;

  SystemSpectrum s = spc(ts);
  std::vector<Mask> cosupp;
  cosupp.reserve(s.supp.size());
  for (Mask m : s.supp) cosupp.push_back(s.space.full() & ~m);
  std::sort(cosupp.begin(), cosupp.end());
  cosupp.erase(std::unique(cosupp.begin(), cosupp.end()), cosupp.end());
  std::vector<Mask> qc = quasi_compact_opens(s.space);
  v.clause_spectral = is_spectral(s.space) && qc == cosupp;
  for (Mask u : qc)
    if (!std::binary_search(cosupp.begin(), cosupp.end(), u)) {
      v.witness_open = mask_name(u, s.space.points);
      break;
    }

  check_equiv(v.clause_conditions == v.clause_coherent,
              "Theorem B: conditions and coherence clauses disagree");
  check_equiv(v.clause_conditions == v.clause_spectral,
              "Theorem B: conditions and spectral clauses disagree");
  v.all_true = v.clause_conditions;
  return v;
}

// The Balmer bijection T_s(K) <-> Th(Spc(K)), both directions verified.
struct ClassificationRow {
  Mask ideal;
  Mask thomason;
};

struct ClassificationTable {
  std::vector<ClassificationRow> rows;
};

inline ClassificationTable classify(const TensorSystem& ts) {
  TheoremBVerdict b = theorem_b_check(ts);
  if (!b.all_true) {
    std::string clause = !b.principal_closure          ? "principal closure"
                         : !b.compact_detection_lattice ? "compact detection"
                                                        : "spectral support";
    fail(ErrorKind::precondition_unmet, "classify requires Theorem B; failing clause: " + clause);
  }
  SemiprimeLattice t = ts_lattice(ts);
  SystemSpectrum s = spc(ts);
  std::vector<Mask> th = thomason_subsets(s.space);

  ClassificationTable table;
  for (Mask ideal : t.semiprimes) {
    Mask z = 0;
    for_each_bit(ideal, [&](int x) { z |= s.supp[static_cast<std::size_t>(x)]; });
    check_equiv(std::binary_search(th.begin(), th.end(), z),
                "classification misses the Thomason family");
    table.rows.push_back({ideal, z});
  }
  check_equiv(table.rows.size() == th.size(), "classification is not onto the Thomason subsets");
  for (const ClassificationRow& row : table.rows) {
    // inverse assignment: Z -> { x : supp(x) inside Z }
    Mask back = 0;
    for (int x = 0; x < ts.size(); ++x)
      if (subset(s.supp[static_cast<std::size_t>(x)], row.thomason)) back |= bit(x);
    check_equiv(back == row.ideal, "classification does not compose to the identity on ideals");
  }
  for (Mask z : th) {
    Mask back = 0;
    for (int x = 0; x < ts.size(); ++x)
      if (subset(s.supp[static_cast<std::size_t>(x)], z)) back |= bit(x);
    Mask again = 0;
    for_each_bit(back, [&](int x) { again |= s.supp[static_cast<std::size_t>(x)]; });
    check_equiv(again == z, "classification does not compose to the identity on Thomason subsets");
  }
  return table;
}

// --- principal joins lemma (additive systems) -------------------------------------

struct PrincipalJoinsVerdict {
  bool join_equality = false;       // <x + y>_s = <x>_s v <y>_s, always
  bool meet_equality_all = false;   // <(xy) + (yx)>_s = <x>_s ^ <y>_s for all pairs
  bool all_semiprimes_radical = false;
  bool all_primes_completely_prime = false;
};

inline PrincipalJoinsVerdict lemma_principal_joins_check(const TensorSystem& ts) {
  if (!ts.additive())
    fail(ErrorKind::precondition_unmet, "principal-joins lemma needs an additive system");
  PrincipalJoinsVerdict v;
  std::vector<Mask> hulls;
  hulls.reserve(static_cast<std::size_t>(ts.size()));
  for (int x = 0; x < ts.size(); ++x) hulls.push_back(semiprime_hull(ts, bit(x)));

  v.join_equality = true;
  v.meet_equality_all = true;
  for (int x = 0; x < ts.size(); ++x)
    for (int y = 0; y < ts.size(); ++y) {
      Mask join = semiprime_hull(ts, bit(x) | bit(y));
      if (hulls[static_cast<std::size_t>(ts.splus(x, y))] != join) v.join_equality = false;
      Mask meet = hulls[static_cast<std::size_t>(x)] & hulls[static_cast<std::size_t>(y)];
      Mask mixed = hulls[static_cast<std::size_t>(ts.splus(ts.tprod(x, y), ts.tprod(y, x)))];
      check_equiv(subset(mixed, meet), "principal-joins lemma: inclusion fails");
      if (mixed != meet) v.meet_equality_all = false;
    }
  check_equiv(v.join_equality, "principal-joins lemma: join equality fails on an additive system");

  v.all_semiprimes_radical = true;
  for (Mask m : semiprime_ideals(ts))
    if (!is_radical(ts, m)) v.all_semiprimes_radical = false;
  v.all_primes_completely_prime = true;
  for (Mask m : prime_ideals(ts))
    if (!is_completely_prime(ts, m)) v.all_primes_completely_prime = false;

  check_equiv(v.meet_equality_all == v.all_semiprimes_radical,
              "principal-joins lemma: meet equality vs radical semiprimes disagree");
  check_equiv(v.meet_equality_all == v.all_primes_completely_prime,
              "principal-joins lemma: meet equality vs completely prime primes disagree");
  return v;
}

// --- central generation -------------------------------------------------------------

inline Mask central_elements(const TensorSystem& ts) {
  Mask out = 0;
  for (int x = 0; x < ts.size(); ++x) {
    bool central = true;
    for (int y = 0; y < ts.size() && central; ++y)
      if (ts.tprod(x, y) != ts.tprod(y, x)) central = false;
    if (central) out |= bit(x);
  }
  return out;
}

struct CentralGenerationVerdict {
  bool thickly_generates = false;          // the centralizing set generates thickly
  bool ideals_centrally_generated = false; // every ideal generated by centralizers
  Mask centralizers = 0;
};

inline CentralGenerationVerdict weak_central_generation_check(const TensorSystem& ts,
                                                              Mask centralizing_set) {
  CentralGenerationVerdict v;
  for (int x = 0; x < ts.size(); ++x) {
    bool commutes = true;
    for_each_bit(centralizing_set, [&](int c) {
      if (ts.tprod(x, c) != ts.tprod(c, x)) commutes = false;
    });
    if (commutes) v.centralizers |= bit(x);
  }
  v.thickly_generates = thick_closure(ts, centralizing_set) == full_mask(ts.size());
  v.ideals_centrally_generated = true;
  for (Mask ideal : all_ideal_masks(ts))
    if (ideal_generated(ts, ideal & v.centralizers) != ideal) v.ideals_centrally_generated = false;
  return v;
}

// Prop: an additive, compact-detecting, centrally generated system is
// principally closed, with every principal hull generated by a central
// element.
struct CentralClosureVerdict {
  bool principal_closure = false;
  bool central_generators = false;
};

inline CentralClosureVerdict central_implies_pc_check(const TensorSystem& ts) {
  if (!ts.additive())
    fail(ErrorKind::precondition_unmet, "central generation check needs an additive system");
  CompactDetectionVerdict cd = compact_detection(ts);
  if (!cd.element_level)
    fail(ErrorKind::precondition_unmet, "central generation check needs element-level compact detection");
  CentralGenerationVerdict gen = weak_central_generation_check(ts, full_mask(ts.size()));
  if (!gen.thickly_generates || !gen.ideals_centrally_generated)
    fail(ErrorKind::precondition_unmet, "system does not satisfy the central generation hypothesis");

  CentralClosureVerdict v;
  v.central_generators = true;
  for (int x = 0; x < ts.size(); ++x) {
    Mask hull = semiprime_hull(ts, bit(x));
    bool found = false;
    for_each_bit(gen.centralizers, [&](int c) {
      if (semiprime_hull(ts, bit(c)) == hull) found = true;
    });
    if (!found) v.central_generators = false;
  }
  v.principal_closure = is_principally_closed(ts).ok;
  check_equiv(v.central_generators, "centrally generated system: a principal hull has no central generator");
  check_equiv(v.principal_closure, "centrally generated system is not principally closed");
  return v;
}

// --- Theorem C part (1) ---------------------------------------------------------------

// The canonical weak (closed) support datum (Spc(K), supp) over the
// principal part.
inline ClosedSupportDatum canonical_closed_datum(const TensorSystem& ts) {
  Lattice base = principal_part_lattice(ts);
  SystemSpectrum s = spc(ts);
  ClosedSupportDatum d;
  d.base = base;
  d.target = s.space;
  d.sigma.assign(static_cast<std::size_t>(base.size()), 0);
  PrincipalPart pp = principal_part(ts);
  for (int i = 0; i < base.size(); ++i) {
    Mask hull = pp.principals[static_cast<std::size_t>(i)];
    // supp of the hull = supp of any generator
    Mask u = 0;
    for (int p = 0; p < static_cast<int>(s.primes.size()); ++p)
      if (!subset(hull, s.primes[static_cast<std::size_t>(p)])) u |= bit(p);
    d.sigma[static_cast<std::size_t>(i)] = u;
  }
  return d;
}

struct TheoremC1Verdict {
  bool injective = false;
  bool realizing = false;
  bool applicable = false;  // both flags hold, so the conclusion is asserted
  bool homeomorphism = false;
};

inline TheoremC1Verdict theorem_c1_check(const TensorSystem& ts, const ClosedSupportDatum& d) {
  TheoremBVerdict b = theorem_b_check(ts);
  if (!b.all_true)
    fail(ErrorKind::precondition_unmet,
         "Theorem C(1) needs principal closure and compact detection");
  Lattice expected = principal_part_lattice(ts);
  if (d.base.names() != expected.names() || d.base.poset.down != expected.poset.down)
    fail(ErrorKind::precondition_unmet, "datum base is not the principal part of the system");
  require_valid(d);

  TheoremC1Verdict v;
  DatumProperties p = properties(d);
  v.injective = p.injective;
  v.realizing = p.realizing;
  v.applicable = v.injective && v.realizing;
  if (!v.applicable) return v;

  // Universal comparison with (Spc(K), supp): f(pt) = the prime of elements
  // whose hull is not supported at pt.
  SystemSpectrum s = spc(ts);
  PrincipalPart pp = principal_part(ts);
  std::vector<int> point_map;
  point_map.reserve(static_cast<std::size_t>(d.target.size()));
  for (int x = 0; x < d.target.size(); ++x) {
    Mask prime = 0;
    for (int e = 0; e < ts.size(); ++e) {
      Mask hull = pp.element_hull[static_cast<std::size_t>(e)];
      int hull_idx = static_cast<int>(std::lower_bound(pp.principals.begin(), pp.principals.end(), hull) -
                                      pp.principals.begin());
      if (!has(d.sigma[static_cast<std::size_t>(hull_idx)], x)) prime |= bit(e);
    }
    check_equiv(is_ideal_set(ts, prime) && is_prime(ts, prime),
                "Theorem C(1): a target point does not induce a prime ideal");
    point_map.push_back(s.point_of(prime));
  }
  // Bijective and bicontinuous.
  std::vector<int> hit(s.primes.size(), 0);
  for (int q : point_map) hit[static_cast<std::size_t>(q)]++;
  bool bijective = d.target.size() == static_cast<int>(s.primes.size());
  for (int c : hit)
    if (c != 1) bijective = false;
  check_equiv(bijective, "Theorem C(1): universal map is not a bijection");
  for (Mask open : s.space.opens) {
    Mask pre = 0;
    for (int x = 0; x < d.target.size(); ++x)
      if (has(open, point_map[static_cast<std::size_t>(x)])) pre |= bit(x);
    check_equiv(d.target.is_open(pre), "Theorem C(1): universal map is not continuous");
  }
  for (Mask open : d.target.opens) {
    Mask img = 0;
    for_each_bit(open, [&](int x) { img |= bit(point_map[static_cast<std::size_t>(x)]); });
    check_equiv(s.space.is_open(img), "Theorem C(1): inverse of the universal map is not continuous");
  }
  v.homeomorphism = true;
  return v;
}

}  // namespace stoneworks
