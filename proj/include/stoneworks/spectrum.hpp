#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/frames.hpp"
#include "stoneworks/lattice.hpp"
#include "stoneworks/space.hpp"

namespace stoneworks {

// Spc(L): points are the prime ideals of L, named by their member lists;
// supp(x) = { P : x not in P } is an open basis.
struct LatticeSpectrum {
  Lattice base;
  std::vector<Mask> primes;  // prime ideals as member masks over base
  Space space;               // points indexed like `primes`
  std::vector<Mask> supp;    // per base element: point mask

  int point_of(Mask prime) const {
    for (int i = 0; i < static_cast<int>(primes.size()); ++i)
      if (primes[static_cast<std::size_t>(i)] == prime) return i;
    fail(ErrorKind::unknown_element, "not a prime ideal of the base lattice");
  }
};

inline LatticeSpectrum spc_of_lattice(const Lattice& l) {
  if (!is_distributive(l)) fail(ErrorKind::not_distributive, "Spc requires a distributive lattice");
  LatticeSpectrum s;
  s.base = l;
  s.primes = prime_ideals(l);
  std::sort(s.primes.begin(), s.primes.end());
  std::vector<std::string> names;
  names.reserve(s.primes.size());
  for (Mask p : s.primes) names.push_back(mask_name(p, l.names()));

  s.supp.assign(static_cast<std::size_t>(l.size()), 0);
  for (int x = 0; x < l.size(); ++x)
    for (int i = 0; i < static_cast<int>(s.primes.size()); ++i)
      if (!has(s.primes[static_cast<std::size_t>(i)], x)) s.supp[static_cast<std::size_t>(x)] |= bit(i);

  s.space = from_open_basis(names, s.supp);
  return s;
}

// The supports-closed companion (the genuine Hochster dual of Spc(L)).
inline Space spc_dual_of_lattice(const LatticeSpectrum& s) {
  return from_closed_basis(s.space.points, s.supp);
}

// K(Spc(L)) = { supp(x) } and K(Spc(L)^v) = { supp(x)^c }, exactly.
inline void quasicompact_supports_check(const Lattice& l) {
  LatticeSpectrum s = spc_of_lattice(l);
  const Mask full = s.space.full();

  std::vector<Mask> supports(s.supp.begin(), s.supp.end());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<Mask> qc = quasi_compact_opens(s.space);
  check_equiv(qc == supports, "quasi-compact opens of Spc(L) are not exactly the supports");

  Space dual = spc_dual_of_lattice(s);
  std::vector<Mask> cosupports;
  cosupports.reserve(s.supp.size());
  for (Mask m : s.supp) cosupports.push_back(full & ~m);
  std::sort(cosupports.begin(), cosupports.end());
  cosupports.erase(std::unique(cosupports.begin(), cosupports.end()), cosupports.end());
  std::vector<Mask> qc_dual = quasi_compact_opens(dual);
  check_equiv(qc_dual == cosupports,
              "quasi-compact opens of Spc(L)^v are not exactly the support complements");

  // The two spaces are genuinely Hochster dual to each other.
  check_equiv(is_spectral(s.space) && hochster_dual(s.space) == dual,
              "Spc(L)^v is not the Hochster dual of Spc(L)");
}

// Flags of the lattice-level Cohen theorem, with the asserted equivalences:
// all ideals principal <=> all primes principal <=> Spc(L) Noetherian, and
// (Spc(L)^v weakly Noetherian and all ideals principal) <=> Spc(L)^v finite.
inline BarthelVerdict barthel_verdict(const Lattice& l) {
  if (!is_distributive(l)) fail(ErrorKind::not_distributive, "barthel_verdict requires distributivity");
  BarthelVerdict v;

  IdealLattice id = all_ideals(l);
  auto principal = [&](Mask ideal) { return ideal == l.down_set(l.join_of(ideal)); };
  v.all_ideals_principal = std::all_of(id.ideals.begin(), id.ideals.end(), principal);
  std::vector<Mask> primes = prime_ideals(l);
  v.all_primes_principal = std::all_of(primes.begin(), primes.end(), principal);

  LatticeSpectrum s = spc_of_lattice(l);
  v.spc_noetherian = is_noetherian(s.space);
  Space dual = spc_dual_of_lattice(s);
  v.spc_dual_weakly_noetherian = is_weakly_noetherian(dual);
  v.spc_dual_finite = dual.size() <= max_elements;  // always: desk-scale carrier

  check_equiv(v.all_ideals_principal == v.all_primes_principal,
              "Cohen: ideals-principal and primes-principal disagree");
  check_equiv(v.all_ideals_principal == v.spc_noetherian,
              "Cohen: principality and Noetherianity of Spc(L) disagree");
  check_equiv((v.spc_dual_weakly_noetherian && v.all_ideals_principal) == v.spc_dual_finite,
              "Cohen: weak Noetherianity + principality vs finiteness disagree");
  return v;
}

}  // namespace stoneworks
