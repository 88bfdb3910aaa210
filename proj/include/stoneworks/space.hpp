#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/frames.hpp"
#include "stoneworks/lattice.hpp"
#include "stoneworks/poset.hpp"

namespace stoneworks {

// Finite topological space as an explicit family of open point-sets. The
// family always contains the empty and full sets and is closed under union
// and intersection; it is kept sorted and deduplicated, so equal spaces
// compare equal structurally.
struct Space {
  std::vector<std::string> points;
  std::vector<Mask> opens;

  int size() const { return static_cast<int>(points.size()); }
  Mask full() const { return full_mask(size()); }

  bool is_open(Mask m) const { return std::binary_search(opens.begin(), opens.end(), m); }
  bool is_closed(Mask m) const { return is_open(full() & ~m); }

  std::vector<Mask> closeds() const {
    std::vector<Mask> out;
    out.reserve(opens.size());
    for (Mask u : opens) out.push_back(full() & ~u);
    std::sort(out.begin(), out.end());
    return out;
  }

  Mask closure(Mask m) const {
    Mask acc = full();
    for (Mask c : closeds())
      if (subset(m, c)) acc &= c;
    return acc;
  }

  bool operator==(const Space& other) const {
    return points == other.points && opens == other.opens;
  }
};

namespace detail {
inline std::vector<Mask> close_family(Mask full, std::vector<Mask> fam) {
  fam.push_back(0);
  fam.push_back(full);
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    const std::size_t k = fam.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        for (Mask m : {fam[i] | fam[j], fam[i] & fam[j]}) {
          if (!std::binary_search(fam.begin(), fam.begin() + static_cast<std::ptrdiff_t>(k), m) &&
              std::find(fam.begin() + static_cast<std::ptrdiff_t>(k), fam.end(), m) == fam.end()) {
            fam.push_back(m);
            changed = true;
          }
        }
      }
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}
}  // namespace detail

inline Space from_open_basis(std::vector<std::string> points, const std::vector<Mask>& basis) {
  const int n = static_cast<int>(points.size());
  if (n > max_elements) fail(ErrorKind::unknown_element, "too many points");
  Space x;
  x.points = std::move(points);
  for (Mask b : basis)
    if (!subset(b, full_mask(n))) fail(ErrorKind::unknown_element, "basis set mentions unknown points");
  x.opens = detail::close_family(full_mask(n), basis);
  return x;
}

inline Space from_closed_basis(std::vector<std::string> points, const std::vector<Mask>& basis) {
  const Mask full = full_mask(static_cast<int>(points.size()));
  std::vector<Mask> complements;
  complements.reserve(basis.size());
  for (Mask b : basis) complements.push_back(full & ~b);
  return from_open_basis(std::move(points), complements);
}

inline bool is_t0(const Space& x) {
  for (int p = 0; p < x.size(); ++p)
    for (int q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (Mask u : x.opens)
        if (has(u, p) != has(u, q)) separated = true;
      if (!separated) return false;
    }
  return true;
}

// Specialization order: p <= q iff p lies in the closure of q.
inline Poset specialization_order(const Space& x) {
  if (!is_t0(x)) fail(ErrorKind::not_t0, "specialization order needs a T0 space");
  std::vector<Mask> down(static_cast<std::size_t>(x.size()), 0);
  for (int q = 0; q < x.size(); ++q) {
    Mask cl = x.closure(bit(q));
    for_each_bit(cl, [&](int p) { down[static_cast<std::size_t>(q)] |= bit(p); });
  }
  return from_down_masks(x.points, std::move(down));
}

// Irreducible: nonempty and never covered by two closed sets unless one
// already covers it.
inline bool is_irreducible_closed(const Space& x, Mask c) {
  if (c == 0 || !x.is_closed(c)) return false;
  for (Mask a : x.closeds())
    for (Mask b : x.closeds())
      if (subset(c, a | b) && !subset(c, a) && !subset(c, b)) return false;
  return true;
}

inline bool is_sober(const Space& x) {
  for (Mask c : x.closeds()) {
    if (c == 0) continue;
    if (!is_irreducible_closed(x, c)) continue;
    int generic_points = 0;
    for (int p = 0; p < x.size(); ++p)
      if (x.closure(bit(p)) == c) ++generic_points;
    if (generic_points != 1) return false;
  }
  return true;
}

// --- quasi-compactness -------------------------------------------------------
//
// Every open of a finite space is quasi-compact; the definitional check is
// still run. All covering subfamilies are enumerated when the open family is
// small, otherwise the maximal cover { V open : V <= U } stands in; in both
// cases a finite (irredundant) subcover is actually extracted.

inline constexpr int cover_enumeration_cap = 14;

namespace detail {
inline bool has_finite_subcover(Mask u, const std::vector<Mask>& family) {
  Mask all = 0;
  for (Mask v : family) all |= v;
  if (!subset(u, all)) return true;  // not a cover: nothing to verify
  std::vector<Mask> kept = family;
  for (std::size_t i = 0; i < kept.size();) {
    Mask rest = 0;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest |= kept[j];
    if (subset(u, rest))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  Mask covered = 0;
  for (Mask v : kept) covered |= v;
  return subset(u, covered);
}
}  // namespace detail

inline bool is_quasi_compact(const Space& x, Mask u) {
  const int k = static_cast<int>(x.opens.size());
  if (k <= cover_enumeration_cap) {
    const Mask limit = full_mask(k);
    for (Mask s = 0;; ++s) {
      std::vector<Mask> family;
      for_each_bit(s, [&](int i) { family.push_back(x.opens[static_cast<std::size_t>(i)]); });
      if (!detail::has_finite_subcover(u, family)) return false;
      if (s == limit) break;
    }
    return true;
  }
  std::vector<Mask> maximal;
  for (Mask v : x.opens)
    if (subset(v, u)) maximal.push_back(v);
  return detail::has_finite_subcover(u, maximal);
}

inline std::vector<Mask> quasi_compact_opens(const Space& x) {
  std::vector<Mask> out;
  for (Mask u : x.opens)
    if (is_quasi_compact(x, u)) out.push_back(u);
  return out;
}

inline bool is_spectral(const Space& x) {
  if (!is_quasi_compact(x, x.full())) return false;
  if (!is_t0(x)) return false;
  std::vector<Mask> qc = quasi_compact_opens(x);
  for (Mask a : qc)
    for (Mask b : qc)
      if (std::find(qc.begin(), qc.end(), a & b) == qc.end()) return false;
  // qc opens form a basis: every open is a union of them.
  for (Mask u : x.opens) {
    Mask acc = 0;
    for (Mask b : qc)
      if (subset(b, u)) acc |= b;
    if (acc != u) return false;
  }
  return is_sober(x);
}

inline void require_spectral(const Space& x, const char* who) {
  if (!is_spectral(x)) fail(ErrorKind::not_spectral, std::string(who) + " requires a spectral space");
}

// Thomason subsets: unions of complements of quasi-compact opens.
inline std::vector<Mask> thomason_subsets(const Space& x) {
  require_spectral(x, "thomason_subsets");
  std::vector<Mask> gen;
  for (Mask u : quasi_compact_opens(x)) gen.push_back(x.full() & ~u);
  std::vector<Mask> out = {0};
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Mask> next = out;
    for (Mask a : out)
      for (Mask g : gen) {
        Mask m = a | g;
        if (std::find(next.begin(), next.end(), m) == next.end()) {
          next.push_back(m);
          changed = true;
        }
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Hochster dual: same points, Thomason-closed sets of x as an open basis.
inline Space hochster_dual(const Space& x) {
  require_spectral(x, "hochster_dual");
  std::vector<Mask> basis;
  for (Mask u : quasi_compact_opens(x)) basis.push_back(x.full() & ~u);
  return from_open_basis(x.points, basis);
}

// Noetherian = ascending chain condition; finite spaces satisfy it via every
// open being quasi-compact, which is what gets checked.
inline bool is_noetherian(const Space& x) {
  require_spectral(x, "is_noetherian");
  for (Mask u : x.opens)
    if (!is_quasi_compact(x, u)) return false;
  return true;
}

inline bool is_weakly_visible(const Space& x, int point) {
  require_spectral(x, "weakly_visible");
  std::vector<Mask> th = thomason_subsets(x);
  for (Mask t : th)
    for (Mask t2 : th)
      if ((t & (x.full() & ~t2)) == bit(point)) return true;
  return false;
}

inline bool is_weakly_noetherian(const Space& x) {
  for (int p = 0; p < x.size(); ++p)
    if (!is_weakly_visible(x, p)) return false;
  return true;
}

// Lattice of opens under union/intersection.
inline Lattice omega(const Space& x) {
  const int k = static_cast<int>(x.opens.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (Mask u : x.opens) names.push_back(mask_name(u, x.points));
  std::vector<Mask> down(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subset(x.opens[static_cast<std::size_t>(j)], x.opens[static_cast<std::size_t>(i)]))
        down[static_cast<std::size_t>(i)] |= bit(j);
  Lattice l = to_lattice(from_down_masks(std::move(names), std::move(down)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      check_equiv(x.opens[static_cast<std::size_t>(
                      l.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] ==
                      (x.opens[static_cast<std::size_t>(i)] & x.opens[static_cast<std::size_t>(j)]),
                  "omega: meet is not intersection");
      check_equiv(x.opens[static_cast<std::size_t>(
                      l.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] ==
                      (x.opens[static_cast<std::size_t>(i)] | x.opens[static_cast<std::size_t>(j)]),
                  "omega: join is not union");
    }
  return l;
}

}  // namespace stoneworks
