#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/frames.hpp"
#include "stoneworks/lattice.hpp"
#include "stoneworks/space.hpp"
#include "stoneworks/spectrum.hpp"

namespace stoneworks {

// Support data: a bounded-lattice morphism from a distributive base into the
// opens (or closeds) of a finite target space. sigma is indexed by base
// element.
struct OpenSupportDatum {
  Lattice base;
  Space target;
  std::vector<Mask> sigma;
};

struct ClosedSupportDatum {
  Lattice base;
  Space target;
  std::vector<Mask> sigma;
};

struct DatumValidation {
  bool ok = true;
  std::string clause;   // "a" | "b" | "c" | "values"
  std::string witness;
};

namespace detail {
template <class Datum>
DatumValidation validate_datum(const Datum& d, bool open_values) {
  const Lattice& l = d.base;
  DatumValidation v;
  auto bad = [&](const std::string& clause, const std::string& witness) {
    v.ok = false;
    v.clause = clause;
    v.witness = witness;
    return v;
  };
  if (static_cast<int>(d.sigma.size()) != l.size())
    return bad("values", "sigma is not total on the base lattice");
  for (int x = 0; x < l.size(); ++x) {
    Mask s = d.sigma[static_cast<std::size_t>(x)];
    bool admissible = open_values ? d.target.is_open(s) : d.target.is_closed(s);
    if (!admissible)
      return bad("values", "sigma(" + l.name(x) + ") = " + mask_name(s, d.target.points) +
                               (open_values ? " is not open" : " is not closed"));
  }
  if (d.sigma[static_cast<std::size_t>(l.bottom)] != 0)
    return bad("a", "sigma(0) = " + mask_name(d.sigma[static_cast<std::size_t>(l.bottom)], d.target.points));
  if (d.sigma[static_cast<std::size_t>(l.top)] != d.target.full())
    return bad("a", "sigma(1) = " + mask_name(d.sigma[static_cast<std::size_t>(l.top)], d.target.points));
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      Mask sx = d.sigma[static_cast<std::size_t>(x)], sy = d.sigma[static_cast<std::size_t>(y)];
      int j = l.join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      int m = l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (d.sigma[static_cast<std::size_t>(j)] != (sx | sy))
        return bad("b", "sigma(" + l.name(x) + " v " + l.name(y) + ") != union");
      if (d.sigma[static_cast<std::size_t>(m)] != (sx & sy))
        return bad("c", "sigma(" + l.name(x) + " ^ " + l.name(y) + ") != intersection");
    }
  return v;
}
}  // namespace detail

inline DatumValidation validate(const OpenSupportDatum& d) { return detail::validate_datum(d, true); }
inline DatumValidation validate(const ClosedSupportDatum& d) { return detail::validate_datum(d, false); }

template <class Datum>
void require_valid(const Datum& d) {
  DatumValidation v = validate(d);
  if (!v.ok)
    fail(ErrorKind::axiom_violation, "support datum clause (" + v.clause + "): " + v.witness);
}

struct DatumProperties {
  bool injective = false;
  bool faithful = false;
  bool order_reflecting = false;
  bool realizing = false;
  bool noetherian_realizing = false;
};

// Property flags, each computed definitionally. The asserted facts
// injective <=> order-reflecting and injective => faithful guard the
// implementation.
inline DatumProperties properties(const OpenSupportDatum& d) {
  require_valid(d);
  const Lattice& l = d.base;
  DatumProperties p;

  p.injective = true;
  for (int x = 0; x < l.size(); ++x)
    for (int y = x + 1; y < l.size(); ++y)
      if (d.sigma[static_cast<std::size_t>(x)] == d.sigma[static_cast<std::size_t>(y)])
        p.injective = false;

  p.faithful = true;
  for (int x = 0; x < l.size(); ++x)
    if (d.sigma[static_cast<std::size_t>(x)] == 0 && x != l.bottom) p.faithful = false;

  p.order_reflecting = true;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (subset(d.sigma[static_cast<std::size_t>(x)], d.sigma[static_cast<std::size_t>(y)]) &&
          !l.leq(x, y))
        p.order_reflecting = false;

  std::vector<Mask> image(d.sigma.begin(), d.sigma.end());
  std::sort(image.begin(), image.end());
  p.realizing = true;
  for (Mask u : quasi_compact_opens(d.target))
    if (!std::binary_search(image.begin(), image.end(), u)) p.realizing = false;
  p.noetherian_realizing = true;
  for (Mask u : d.target.opens)
    if (!std::binary_search(image.begin(), image.end(), u)) p.noetherian_realizing = false;

  check_equiv(p.injective == p.order_reflecting, "injectivity and order-reflection disagree");
  check_equiv(!p.injective || p.faithful, "injective datum is not faithful");
  return p;
}

inline DatumProperties properties(const ClosedSupportDatum& d) {
  require_valid(d);
  const Lattice& l = d.base;
  DatumProperties p;
  p.injective = true;
  for (int x = 0; x < l.size(); ++x)
    for (int y = x + 1; y < l.size(); ++y)
      if (d.sigma[static_cast<std::size_t>(x)] == d.sigma[static_cast<std::size_t>(y)])
        p.injective = false;
  p.faithful = true;
  for (int x = 0; x < l.size(); ++x)
    if (d.sigma[static_cast<std::size_t>(x)] == 0 && x != l.bottom) p.faithful = false;
  p.order_reflecting = true;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (subset(d.sigma[static_cast<std::size_t>(x)], d.sigma[static_cast<std::size_t>(y)]) &&
          !l.leq(x, y))
        p.order_reflecting = false;

  std::vector<Mask> image(d.sigma.begin(), d.sigma.end());
  std::sort(image.begin(), image.end());
  // Realizing for closed values: the Thomason-closed subsets (complements of
  // quasi-compact opens) lie in the image.
  p.realizing = true;
  for (Mask u : quasi_compact_opens(d.target))
    if (!std::binary_search(image.begin(), image.end(), d.target.full() & ~u)) p.realizing = false;
  p.noetherian_realizing = true;
  for (Mask c : d.target.closeds())
    if (!std::binary_search(image.begin(), image.end(), c)) p.noetherian_realizing = false;

  check_equiv(p.injective == p.order_reflecting, "injectivity and order-reflection disagree");
  check_equiv(!p.injective || p.faithful, "injective datum is not faithful");
  return p;
}

struct ClassifyingVerdict {
  bool classifying = false;
  std::string witness;  // set on failure: non-injective pair or unhit open
};

// Classifying: Ideal -> union of sigma values is an order bijection
// Id(base) -> Omega(target).
inline ClassifyingVerdict is_classifying(const OpenSupportDatum& d) {
  require_valid(d);
  IdealLattice id = all_ideals(d.base);
  std::vector<Mask> image;
  image.reserve(id.ideals.size());
  for (Mask ideal : id.ideals) {
    Mask u = 0;
    for_each_bit(ideal, [&](int x) { u |= d.sigma[static_cast<std::size_t>(x)]; });
    image.push_back(u);
  }
  ClassifyingVerdict v;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] == image[j]) {
        v.witness = "ideals " + mask_name(id.ideals[i], d.base.names()) + " and " +
                    mask_name(id.ideals[j], d.base.names()) + " map to the same open";
        return v;
      }
  std::vector<Mask> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  for (Mask u : d.target.opens)
    if (!std::binary_search(sorted.begin(), sorted.end(), u)) {
      v.witness = "open " + mask_name(u, d.target.points) + " is not a union of sigma values";
      return v;
    }
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = 0; j < image.size(); ++j)
      if (subset(image[i], image[j]) != subset(id.ideals[i], id.ideals[j])) {
        v.witness = "the bijection does not reflect the order";
        return v;
      }
  v.classifying = true;
  return v;
}

// Prop: classifying <=> injective and realizing.
inline bool classifying_iff_check(const OpenSupportDatum& d) {
  DatumProperties p = properties(d);
  bool cls = is_classifying(d).classifying;
  check_equiv(cls == (p.injective && p.realizing),
              "classifying criterion disagrees with injective+realizing");
  return cls;
}

struct UniversalMap {
  LatticeSpectrum spectrum;     // Spc(base) with open supports
  std::vector<int> point_map;   // target point -> spectrum point
};

// The unique morphism into the final datum (Spc(base), supp):
// f(x) = { a : x not in sigma(a) }.
inline UniversalMap universal_map(const OpenSupportDatum& d) {
  require_valid(d);
  UniversalMap u;
  u.spectrum = spc_of_lattice(d.base);
  u.point_map.reserve(static_cast<std::size_t>(d.target.size()));
  for (int x = 0; x < d.target.size(); ++x) {
    Mask prime = 0;
    for (int a = 0; a < d.base.size(); ++a)
      if (!has(d.sigma[static_cast<std::size_t>(a)], x)) prime |= bit(a);
    if (!is_prime_ideal_elementwise(d.base, prime))
      throw EquivalenceViolation("NotPrimeImage: point " + d.target.points[static_cast<std::size_t>(x)] +
                                 " induces the non-prime set " + mask_name(prime, d.base.names()));
    u.point_map.push_back(u.spectrum.point_of(prime));
  }
  // sigma = f^{-1}(supp): guaranteed by construction, asserted anyway.
  for (int a = 0; a < d.base.size(); ++a) {
    Mask pre = 0;
    for (int x = 0; x < d.target.size(); ++x)
      if (has(u.spectrum.supp[static_cast<std::size_t>(a)], u.point_map[static_cast<std::size_t>(x)]))
        pre |= bit(x);
    check_equiv(pre == d.sigma[static_cast<std::size_t>(a)],
                "universal map does not pull supp back to sigma");
  }
  return u;
}

// The canonical datum (Spc(L), supp); final and classifying.
inline OpenSupportDatum canonical_support_datum(const Lattice& l) {
  LatticeSpectrum s = spc_of_lattice(l);
  return OpenSupportDatum{l, s.space, s.supp};
}

// Restriction of supp to the closed points of the supports-closed spectrum
// (the minimal primes). Faithful and realizing; classifying only when every
// prime is minimal.
inline OpenSupportDatum closed_points_datum(const Lattice& l) {
  LatticeSpectrum s = spc_of_lattice(l);
  Space dual = spc_dual_of_lattice(s);
  std::vector<int> pts;
  for (int p = 0; p < dual.size(); ++p)
    if (dual.closure(bit(p)) == bit(p)) pts.push_back(p);

  std::vector<std::string> names;
  names.reserve(pts.size());
  for (int p : pts) names.push_back(dual.points[static_cast<std::size_t>(p)]);
  auto restrict_mask = [&](Mask m) {
    Mask out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (has(m, pts[i])) out |= bit(static_cast<int>(i));
    return out;
  };
  std::vector<Mask> basis;
  basis.reserve(s.supp.size());
  for (Mask m : s.supp) basis.push_back(restrict_mask(m));
  OpenSupportDatum d;
  d.base = l;
  d.target = from_open_basis(std::move(names), basis);
  d.sigma = std::move(basis);
  return d;
}

// Cor: injective + Noetherian-realizing forces a Noetherian target and a
// classifying datum.
inline void noetherian_realizing_check(const OpenSupportDatum& d) {
  DatumProperties p = properties(d);
  if (!p.injective || !p.noetherian_realizing)
    fail(ErrorKind::precondition_unmet,
         "noetherian_realizing_check needs an injective, Noetherian-realizing datum");
  check_equiv(is_noetherian(d.target), "Noetherian-realizing datum with non-Noetherian target");
  check_equiv(is_classifying(d).classifying, "Noetherian-realizing injective datum not classifying");
}

// Complement translation: a closed datum over L yields an open datum over
// L^op with tau(x) = X \ sigma(x). Injectivity and realization carry over;
// both are asserted.
inline OpenSupportDatum closed_to_open(const ClosedSupportDatum& d) {
  require_valid(d);
  OpenSupportDatum out;
  out.base = to_lattice(dual(d.base.poset));
  out.target = d.target;
  out.sigma.reserve(d.sigma.size());
  for (Mask m : d.sigma) out.sigma.push_back(d.target.full() & ~m);
  require_valid(out);
  DatumProperties before = properties(d);
  DatumProperties after = properties(out);
  check_equiv(before.injective == after.injective, "closed_to_open broke injectivity");
  check_equiv(before.realizing == after.realizing, "closed_to_open broke realization");
  return out;
}

}  // namespace stoneworks
