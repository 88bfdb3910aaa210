#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/lattice.hpp"

namespace stoneworks {

// Lattice ideals and filters are member masks over a base lattice. An ideal
// is non-empty, downward closed and closed under binary join; the join
// closure is the standard convention (the dual for filters).

inline bool is_ideal(const Lattice& l, Mask m) {
  if (m == 0) return false;
  bool ok = true;
  for_each_bit(m, [&](int x) {
    ok = ok && subset(l.down_set(x), m);
    for_each_bit(m, [&](int y) {
      if (!has(m, l.join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])) ok = false;
    });
  });
  return ok;
}

inline bool is_filter(const Lattice& l, Mask m) {
  if (m == 0) return false;
  bool ok = true;
  for_each_bit(m, [&](int x) {
    ok = ok && subset(l.poset.up_set(x), m);
    for_each_bit(m, [&](int y) {
      if (!has(m, l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])) ok = false;
    });
  });
  return ok;
}

// Least ideal containing s.
inline Mask ideal_closure(const Lattice& l, Mask s) {
  Mask m = s | bit(l.bottom);
  for (bool changed = true; changed;) {
    changed = false;
    Mask next = m;
    for_each_bit(m, [&](int x) {
      next |= l.down_set(x);
      for_each_bit(m, [&](int y) {
        next |= bit(l.join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      });
    });
    if (next != m) {
      m = next;
      changed = true;
    }
  }
  return m;
}

inline Mask filter_closure(const Lattice& l, Mask s) {
  Mask m = s | bit(l.top);
  for (bool changed = true; changed;) {
    changed = false;
    Mask next = m;
    for_each_bit(m, [&](int x) {
      next |= l.poset.up_set(x);
      for_each_bit(m, [&](int y) {
        next |= bit(l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      });
    });
    if (next != m) {
      m = next;
      changed = true;
    }
  }
  return m;
}

inline Mask principal_ideal(const Lattice& l, int x) {
  if (x < 0 || x >= l.size()) fail(ErrorKind::unknown_element, "no such element index");
  return l.down_set(x);
}

inline Mask principal_filter(const Lattice& l, int x) {
  if (x < 0 || x >= l.size()) fail(ErrorKind::unknown_element, "no such element index");
  return l.poset.up_set(x);
}

// Id(L) materialized: every ideal once, ordered by inclusion, as a lattice
// whose elements are canonically named by their member lists.
struct IdealLattice {
  Lattice base;
  std::vector<Mask> ideals;  // lectic order; index = element of `lattice`
  Lattice lattice;

  int index_of_ideal(Mask m) const {
    for (int i = 0; i < static_cast<int>(ideals.size()); ++i)
      if (ideals[static_cast<std::size_t>(i)] == m) return i;
    fail(ErrorKind::not_an_ideal, "subset is not an ideal of the base lattice");
  }
};

inline IdealLattice all_ideals(const Lattice& l) {
  IdealLattice out;
  out.base = l;
  out.ideals = next_closure(l.size(), [&](Mask s) { return ideal_closure(l, s); });

  const int k = static_cast<int>(out.ideals.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (Mask m : out.ideals) names.push_back(mask_name(m, l.names()));
  std::vector<Mask> down(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subset(out.ideals[static_cast<std::size_t>(j)], out.ideals[static_cast<std::size_t>(i)]))
        down[static_cast<std::size_t>(i)] |= bit(j);
  out.lattice = to_lattice(from_down_masks(std::move(names), std::move(down)));

  // Id(L) invariants: meet = intersection, join = generated ideal, frame.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mask mi = out.ideals[static_cast<std::size_t>(i)], mj = out.ideals[static_cast<std::size_t>(j)];
      check_equiv(out.ideals[static_cast<std::size_t>(
                      out.lattice.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] ==
                      (mi & mj),
                  "Id(L): meet is not intersection");
      check_equiv(out.ideals[static_cast<std::size_t>(
                      out.lattice.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] ==
                      ideal_closure(l, mi | mj),
                  "Id(L): join is not the generated ideal");
    }
  check_equiv(is_frame(out.lattice), "Id(L) is not a frame");
  return out;
}

// --- compactness -----------------------------------------------------------
//
// In a finite lattice every element is compact; the definitional check is
// still executed. Covers of x reduce to families of join-irreducibles, which
// are enumerated exhaustively below a size cap; above it only the canonical
// cover is checked. Either way the finite-subcover search genuinely runs.

inline constexpr int compact_enumeration_cap = 16;

namespace detail {
// Finds a minimal subfamily of `family` whose join still dominates x.
inline std::optional<std::vector<int>> finite_subcover(const Lattice& l, int x,
                                                       const std::vector<int>& family) {
  Mask all = 0;
  for (int f : family) all |= bit(f);
  if (!l.leq(x, l.join_of(all))) return std::nullopt;
  std::vector<int> kept = family;
  for (std::size_t i = 0; i < kept.size();) {
    Mask rest = 0;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest |= bit(kept[j]);
    if (l.leq(x, l.join_of(rest)))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return kept;
}
}  // namespace detail

inline bool is_compact_element(const Lattice& l, int x) {
  Mask ji = join_irreducibles(l);
  std::vector<int> irr = bits_of(ji);
  auto check_family = [&](const std::vector<int>& family) {
    Mask all = 0;
    for (int f : family) all |= bit(f);
    if (!l.leq(x, l.join_of(all))) return true;  // not a cover of x
    return detail::finite_subcover(l, x, family).has_value();
  };
  if (static_cast<int>(irr.size()) <= compact_enumeration_cap) {
    const Mask limit = full_mask(static_cast<int>(irr.size()));
    for (Mask s = 0; s <= limit; ++s) {
      std::vector<int> family;
      for_each_bit(s, [&](int i) { family.push_back(irr[static_cast<std::size_t>(i)]); });
      if (!check_family(family)) return false;
      if (s == limit) break;
    }
    return true;
  }
  std::vector<int> canonical;
  for (int j : irr)
    if (l.leq(j, x)) canonical.push_back(j);
  return check_family(canonical);
}

inline Mask compact_elements(const Lattice& f) {
  require_frame(f, "compact_elements");
  Mask out = 0;
  for (int x = 0; x < f.size(); ++x) {
    check_equiv(is_compact_element(f, x),
                "finite lattice has a non-compact element '" + f.name(x) + "'");
    out |= bit(x);
  }
  return out;
}

// Coherent: compacts form a bounded sublattice and join-generate.
inline bool is_coherent(const Lattice& f) {
  require_frame(f, "is_coherent");
  Mask compacts = compact_elements(f);
  if (!has(compacts, f.bottom) || !has(compacts, f.top)) return false;
  bool ok = true;
  for_each_bit(compacts, [&](int a) {
    for_each_bit(compacts, [&](int b) {
      if (!has(compacts, f.meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])) ok = false;
      if (!has(compacts, f.join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])) ok = false;
    });
  });
  for (int x = 0; x < f.size() && ok; ++x) {
    Mask below = compacts & f.down_set(x);
    if (f.join_of(below) != x) ok = false;
  }
  return ok;
}

// --- primes ----------------------------------------------------------------

inline bool is_prime_ideal_elementwise(const Lattice& l, Mask p) {
  if (!is_ideal(l, p) || p == full_mask(l.size())) return false;
  bool prime = true;
  for (int x = 0; x < l.size() && prime; ++x)
    for (int y = 0; y < l.size() && prime; ++y)
      if (has(p, l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) &&
          !has(p, x) && !has(p, y))
        prime = false;
  return prime;
}

// Proper ideals P with I /\ J <= P forcing I <= P or J <= P, verified to
// agree with the elementwise formulation.
inline std::vector<Mask> prime_ideals(const Lattice& l) {
  if (!is_distributive(l)) fail(ErrorKind::not_distributive, "prime_ideals requires a distributive lattice");
  IdealLattice id = all_ideals(l);
  const Mask full = full_mask(l.size());
  std::vector<Mask> out;
  for (Mask p : id.ideals) {
    if (p == full) continue;
    bool pairwise = true;
    for (Mask a : id.ideals)
      for (Mask b : id.ideals)
        if (subset(a & b, p) && !subset(a, p) && !subset(b, p)) pairwise = false;
    check_equiv(pairwise == is_prime_ideal_elementwise(l, p),
                "prime ideal: pairwise and elementwise tests disagree on " + mask_name(p, l.names()));
    if (pairwise) out.push_back(p);
  }
  return out;
}

// Prime lifting: greedily enlarges `ideal` to an ideal maximal among those
// disjoint from `filter`; maximal disjoint ideals are prime. Canonical
// element order makes the result deterministic.
inline Mask prime_lift(const Lattice& l, Mask ideal, Mask filter) {
  if (!is_ideal(l, ideal)) fail(ErrorKind::not_an_ideal, "prime_lift: not an ideal");
  if (!is_filter(l, filter)) fail(ErrorKind::not_an_ideal, "prime_lift: not a filter");
  if ((ideal & filter) != 0)
    fail(ErrorKind::not_disjoint, "ideal meets filter in " + mask_name(ideal & filter, l.names()));
  Mask cur = ideal;
  for (int x = 0; x < l.size(); ++x) {
    if (has(cur, x)) continue;
    Mask enlarged = ideal_closure(l, cur | bit(x));
    if ((enlarged & filter) == 0) cur = enlarged;
  }
  check_equiv(is_prime_ideal_elementwise(l, cur),
              "prime_lift produced a non-prime ideal " + mask_name(cur, l.names()));
  return cur;
}

// Spatial: every element is a meet of meet-primes (top = empty meet).
inline bool is_spatial(const Lattice& f) {
  require_frame(f, "is_spatial");
  Mask primes = meet_primes(f);
  for (int x = 0; x < f.size(); ++x) {
    Mask above = 0;
    for_each_bit(primes, [&](int p) {
      if (f.leq(x, p)) above |= bit(p);
    });
    if (f.meet_of(above) != x) return false;
  }
  return true;
}

// --- frame quotient ---------------------------------------------------------

struct FrameQuotient {
  Lattice lattice;
  std::vector<int> projection;  // base element -> class index
};

// Quotient by the congruence a ~ b iff a \/ i' = b \/ j' for some i',j' <= i.
inline FrameQuotient quotient_frame(const Lattice& f, int i) {
  require_frame(f, "quotient_frame");
  if (i < 0 || i >= f.size()) fail(ErrorKind::unknown_element, "quotient_frame: no such element");
  const int n = f.size();
  Mask below = f.down_set(i);
  auto related = [&](int a, int b) {
    bool found = false;
    for_each_bit(below, [&](int ip) {
      for_each_bit(below, [&](int jp) {
        if (f.join[static_cast<std::size_t>(a)][static_cast<std::size_t>(ip)] ==
            f.join[static_cast<std::size_t>(b)][static_cast<std::size_t>(jp)])
          found = true;
      });
    });
    return found;
  };

  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<Mask> members;
  for (int a = 0; a < n; ++a) {
    if (cls[static_cast<std::size_t>(a)] >= 0) continue;
    int id = static_cast<int>(members.size());
    Mask m = 0;
    for (int b = 0; b < n; ++b)
      if (related(a, b)) {
        check_equiv(cls[static_cast<std::size_t>(b)] < 0, "frame congruence is not transitive");
        cls[static_cast<std::size_t>(b)] = id;
        m |= bit(b);
      }
    members.push_back(m);
  }

  const int k = static_cast<int>(members.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (Mask m : members) names.push_back(mask_name(m, f.names()));
  // Class order: [a] <= [b] iff a \/ b ~ b; well-definedness is asserted.
  std::vector<Mask> down(static_cast<std::size_t>(k), 0);
  for (int ca = 0; ca < k; ++ca)
    for (int cb = 0; cb < k; ++cb) {
      int a = bits_of(members[static_cast<std::size_t>(ca)]).front();
      int b = bits_of(members[static_cast<std::size_t>(cb)]).front();
      bool le = cls[static_cast<std::size_t>(
                    f.join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])] == cb;
      for_each_bit(members[static_cast<std::size_t>(ca)], [&](int a2) {
        for_each_bit(members[static_cast<std::size_t>(cb)], [&](int b2) {
          bool le2 = cls[static_cast<std::size_t>(
                         f.join[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b2)])] == cb;
          check_equiv(le2 == le, "frame congruence does not respect joins");
        });
      });
      if (le) down[static_cast<std::size_t>(cb)] |= bit(ca);
    }

  FrameQuotient q;
  q.lattice = to_lattice(from_down_masks(std::move(names), std::move(down)));
  q.projection = cls;

  // The projection preserves finite meets and all (finite) joins.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int pm = q.projection[static_cast<std::size_t>(
          f.meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
      int pj = q.projection[static_cast<std::size_t>(
          f.join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
      int qa = q.projection[static_cast<std::size_t>(a)], qb = q.projection[static_cast<std::size_t>(b)];
      check_equiv(pm == q.lattice.meet[static_cast<std::size_t>(qa)][static_cast<std::size_t>(qb)],
                  "quotient projection does not preserve meets");
      check_equiv(pj == q.lattice.join[static_cast<std::size_t>(qa)][static_cast<std::size_t>(qb)],
                  "quotient projection does not preserve joins");
    }
  return q;
}

// --- Cohen / Barthel verdicts ------------------------------------------------

struct BarthelVerdict {
  bool all_ideals_principal = false;
  bool all_primes_principal = false;
  bool spc_dual_weakly_noetherian = false;
  bool spc_dual_finite = false;
  bool spc_noetherian = false;
};
// (Computed in spectrum.hpp, where the spectrum machinery lives.)

}  // namespace stoneworks
