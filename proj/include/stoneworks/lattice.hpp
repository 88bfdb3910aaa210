#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/poset.hpp"

namespace stoneworks {

// Bounded lattice with materialized meet/join tables. Finite lattices are
// complete, so a bounded lattice here is the same thing as a frame candidate.
struct Lattice {
  Poset poset;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  int bottom = 0;
  int top = 0;

  int size() const { return poset.size(); }
  bool leq(int a, int b) const { return poset.leq(a, b); }
  const std::vector<std::string>& names() const { return poset.elements; }
  const std::string& name(int i) const { return poset.elements[static_cast<std::size_t>(i)]; }

  int meet_of(Mask m) const {  // empty meet = top
    int acc = top;
    for_each_bit(m, [&](int i) { acc = meet[static_cast<std::size_t>(acc)][static_cast<std::size_t>(i)]; });
    return acc;
  }
  int join_of(Mask m) const {  // empty join = bottom
    int acc = bottom;
    for_each_bit(m, [&](int i) { acc = join[static_cast<std::size_t>(acc)][static_cast<std::size_t>(i)]; });
    return acc;
  }
  Mask down_set(int a) const { return poset.down[static_cast<std::size_t>(a)]; }
};

// Computes meet/join tables from the order; fails with a witness pair when
// some glb/lub is missing or not unique.
inline Lattice to_lattice(const Poset& p) {
  const int n = p.size();
  if (n == 0) fail(ErrorKind::not_a_lattice, "empty carrier has no bounds");
  Lattice l;
  l.poset = p;
  l.meet.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  l.join = l.meet;

  auto bound = [&](int a, int b, bool lower) -> int {
    Mask cands = 0;
    for (int c = 0; c < n; ++c) {
      bool ok = lower ? (p.leq(c, a) && p.leq(c, b)) : (p.leq(a, c) && p.leq(b, c));
      if (ok) cands |= bit(c);
    }
    int best = -1;
    for_each_bit(cands, [&](int c) {
      bool extremal = true;
      for_each_bit(cands, [&](int d) {
        if (lower ? !p.leq(d, c) : !p.leq(c, d)) extremal = false;
      });
      if (extremal) best = c;
    });
    return best;  // unique by antisymmetry when it exists
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = bound(a, b, true);
      int j = bound(a, b, false);
      if (m < 0)
        fail(ErrorKind::not_a_lattice, "no meet for '" + p.elements[static_cast<std::size_t>(a)] +
                                           "' and '" + p.elements[static_cast<std::size_t>(b)] + "'");
      if (j < 0)
        fail(ErrorKind::not_a_lattice, "no join for '" + p.elements[static_cast<std::size_t>(a)] +
                                           "' and '" + p.elements[static_cast<std::size_t>(b)] + "'");
      l.meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m;
      l.join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = j;
    }

  int bot = -1, top = -1;
  for (int c = 0; c < n; ++c) {
    bool least = true, greatest = true;
    for (int d = 0; d < n; ++d) {
      if (!p.leq(c, d)) least = false;
      if (!p.leq(d, c)) greatest = false;
    }
    if (least) bot = c;
    if (greatest) top = c;
  }
  if (bot < 0 || top < 0) fail(ErrorKind::not_a_lattice, "missing bottom or top");
  l.bottom = bot;
  l.top = top;
  return l;
}

inline Lattice lattice_from_covers(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& covers) {
  return to_lattice(from_covers(std::move(elements), covers));
}

// Exhaustive triple check of x /\ (y \/ z) = (x /\ y) \/ (x /\ z).
inline bool is_distributive(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(l.join[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)])];
        int rhs = l.join[static_cast<std::size_t>(l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])]
                        [static_cast<std::size_t>(l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)])];
        if (lhs != rhs) return false;
      }
  return true;
}

// A finite lattice is complete, so frame = distributive.
inline bool is_frame(const Lattice& l) { return is_distributive(l); }

inline void require_frame(const Lattice& l, const char* who) {
  if (!is_frame(l)) fail(ErrorKind::not_a_frame, std::string(who) + " requires a frame (distributive lattice)");
}

// Meet-primes: p with x /\ y <= p implying x <= p or y <= p. The top element
// is excluded: primes are proper.
inline Mask meet_primes(const Lattice& l) {
  const int n = l.size();
  Mask out = 0;
  for (int p = 0; p < n; ++p) {
    if (p == l.top) continue;
    bool prime = true;
    for (int x = 0; x < n && prime; ++x)
      for (int y = 0; y < n && prime; ++y)
        if (l.leq(l.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], p) &&
            !l.leq(x, p) && !l.leq(y, p))
          prime = false;
    if (prime) out |= bit(p);
  }
  return out;
}

// Join-primes, the order-dual notion (bottom excluded).
inline Mask join_primes(const Lattice& l) {
  const int n = l.size();
  Mask out = 0;
  for (int p = 0; p < n; ++p) {
    if (p == l.bottom) continue;
    bool prime = true;
    for (int x = 0; x < n && prime; ++x)
      for (int y = 0; y < n && prime; ++y)
        if (l.leq(p, l.join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) &&
            !l.leq(p, x) && !l.leq(p, y))
          prime = false;
    if (prime) out |= bit(p);
  }
  return out;
}

// j != bottom with j = a \/ b forcing j in {a,b}.
inline Mask join_irreducibles(const Lattice& l) {
  const int n = l.size();
  Mask out = 0;
  for (int j = 0; j < n; ++j) {
    if (j == l.bottom) continue;
    bool irr = true;
    for (int a = 0; a < n && irr; ++a)
      for (int b = 0; b < n && irr; ++b)
        if (l.join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == j && a != j && b != j)
          irr = false;
    if (irr) out |= bit(j);
  }
  return out;
}

}  // namespace stoneworks
