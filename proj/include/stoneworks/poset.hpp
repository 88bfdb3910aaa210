#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"

namespace stoneworks {

// Finite poset over named elements. Immutable after construction; element
// order is declaration order and fixes every enumeration downstream.
struct Poset {
  std::vector<std::string> elements;
  // down[i] = mask of all j with j <= i (includes i).
  std::vector<Mask> down;

  int size() const { return static_cast<int>(elements.size()); }

  bool leq(int a, int b) const { return has(down[static_cast<std::size_t>(b)], a); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (elements[static_cast<std::size_t>(i)] == name) return i;
    fail(ErrorKind::unknown_element, "no element named '" + name + "'");
  }

  Mask up_set(int a) const {
    Mask m = 0;
    for (int b = 0; b < size(); ++b)
      if (leq(a, b)) m |= bit(b);
    return m;
  }

  // Covering pairs (a,b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < size(); ++b)
      for (int a = 0; a < size(); ++a) {
        if (a == b || !leq(a, b)) continue;
        bool covering = true;
        for (int c = 0; c < size() && covering; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) covering = false;
        if (covering) out.emplace_back(a, b);
      }
    return out;
  }
};

// Builds a poset as the reflexive-transitive closure of cover pairs.
inline Poset from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  const int n = static_cast<int>(elements.size());
  if (n > max_elements)
    fail(ErrorKind::unknown_element, "carrier exceeds " + std::to_string(max_elements) + " elements");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (elements[static_cast<std::size_t>(i)] == elements[static_cast<std::size_t>(j)])
        fail(ErrorKind::unknown_element,
             "duplicate element '" + elements[static_cast<std::size_t>(i)] + "'");

  Poset p;
  p.elements = std::move(elements);
  p.down.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) p.down[static_cast<std::size_t>(i)] = bit(i);
  for (const auto& [lo, hi] : cover_pairs) {
    int a = p.index_of(lo);
    int b = p.index_of(hi);
    p.down[static_cast<std::size_t>(b)] |= bit(a);
  }
  // Transitive closure to fixpoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < n; ++b) {
      Mask acc = p.down[static_cast<std::size_t>(b)];
      for_each_bit(acc, [&](int a) { acc |= p.down[static_cast<std::size_t>(a)]; });
      if (acc != p.down[static_cast<std::size_t>(b)]) {
        p.down[static_cast<std::size_t>(b)] = acc;
        changed = true;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        fail(ErrorKind::cycle, "antisymmetry fails between '" +
                                   p.elements[static_cast<std::size_t>(a)] + "' and '" +
                                   p.elements[static_cast<std::size_t>(b)] + "'");
  return p;
}

// Opposite poset: same carrier, order reversed.
inline Poset dual(const Poset& p) {
  Poset d;
  d.elements = p.elements;
  d.down.assign(static_cast<std::size_t>(p.size()), 0);
  for (int b = 0; b < p.size(); ++b)
    for (int a = 0; a < p.size(); ++a)
      if (p.leq(b, a)) d.down[static_cast<std::size_t>(b)] |= bit(a);
  return d;
}

// Builds a poset directly from per-element down-set masks (internal use for
// already-closed relations; validates poset axioms).
inline Poset from_down_masks(std::vector<std::string> elements, std::vector<Mask> down) {
  Poset p;
  p.elements = std::move(elements);
  p.down = std::move(down);
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    if (!has(p.down[static_cast<std::size_t>(i)], i))
      fail(ErrorKind::cycle, "relation is not reflexive");
  for (int b = 0; b < n; ++b)
    for_each_bit(p.down[static_cast<std::size_t>(b)], [&](int a) {
      if (!subset(p.down[static_cast<std::size_t>(a)], p.down[static_cast<std::size_t>(b)]))
        fail(ErrorKind::cycle, "relation is not transitive");
    });
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a)) fail(ErrorKind::cycle, "antisymmetry fails");
  return p;
}

}  // namespace stoneworks
