#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/lattice.hpp"

namespace stoneworks {

// Finite rule-based model of an essentially small monoidal-triangulated
// category. Triangulated structure appears only through Horn rules; the
// optional sum table makes the system additive. Ideals are subsets closed
// under every rule and under two-sided tensor absorption.
struct Rule {
  Mask premises = 0;
  int conclusion = 0;
};

struct TensorSystem {
  std::vector<std::string> elements;
  int zero = 0;
  int unit = 0;
  std::vector<std::vector<int>> tensor;
  std::vector<Rule> rules;
  std::optional<std::vector<std::vector<int>>> sum;

  int size() const { return static_cast<int>(elements.size()); }
  bool additive() const { return sum.has_value(); }

  int tprod(int a, int b) const {
    return tensor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int splus(int a, int b) const {
    return (*sum)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  const std::string& name(int i) const { return elements[static_cast<std::size_t>(i)]; }

  int index_of(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
      if (elements[static_cast<std::size_t>(i)] == n) return i;
    fail(ErrorKind::unknown_element, "no element named '" + n + "'");
  }

  // Conclusions of nullary rules together with the designated zero.
  Mask zero_class() const {
    Mask z = bit(zero);
    for (const Rule& r : rules)
      if (r.premises == 0) z |= bit(r.conclusion);
    return z;
  }

  Mask set_tensor(Mask a, Mask b) const {  // elementwise product set
    Mask out = 0;
    for_each_bit(a, [&](int x) { for_each_bit(b, [&](int y) { out |= bit(tprod(x, y)); }); });
    return out;
  }
};

// Least ideal containing s: forward chaining over rules plus two-sided
// absorption, to fixpoint.
inline Mask ideal_generated(const TensorSystem& ts, Mask s) {
  Mask m = s;
  for (bool changed = true; changed;) {
    changed = false;
    Mask next = m;
    for (const Rule& r : ts.rules)
      if (subset(r.premises, next)) next |= bit(r.conclusion);
    for_each_bit(m, [&](int x) {
      for (int a = 0; a < ts.size(); ++a) next |= bit(ts.tprod(a, x)) | bit(ts.tprod(x, a));
    });
    if (next != m) {
      m = next;
      changed = true;
    }
  }
  return m;
}

// Thick closure: rules plus, on additive systems, sums and summands, but no
// tensor absorption.
inline Mask thick_closure(const TensorSystem& ts, Mask s) {
  Mask m = s;
  for (bool changed = true; changed;) {
    changed = false;
    Mask next = m;
    for (const Rule& r : ts.rules)
      if (subset(r.premises, next)) next |= bit(r.conclusion);
    if (ts.additive()) {
      for_each_bit(m, [&](int x) {
        for_each_bit(m, [&](int y) { next |= bit(ts.splus(x, y)); });
      });
      for (int x = 0; x < ts.size(); ++x)
        for (int y = 0; y < ts.size(); ++y)
          if (has(m, ts.splus(x, y))) next |= bit(x) | bit(y);
    }
    if (next != m) {
      m = next;
      changed = true;
    }
  }
  return m;
}

inline bool is_ideal_set(const TensorSystem& ts, Mask m) {
  for (const Rule& r : ts.rules)
    if (subset(r.premises, m) && !has(m, r.conclusion)) return false;
  bool ok = true;
  for_each_bit(m, [&](int x) {
    for (int a = 0; a < ts.size(); ++a)
      if (!has(m, ts.tprod(a, x)) || !has(m, ts.tprod(x, a))) ok = false;
  });
  return ok;
}

inline void require_ideal(const TensorSystem& ts, Mask m, const char* who) {
  if (!is_ideal_set(ts, m))
    fail(ErrorKind::not_an_ideal,
         std::string(who) + ": " + mask_name(m, ts.elements) + " is not a thick tensor ideal");
}

// --- validation --------------------------------------------------------------

struct SystemValidation {
  bool ok = true;
  bool additive = false;
  std::string violation;  // named invariant that failed
  std::string witness;
};

inline SystemValidation validate(const TensorSystem& ts) {
  SystemValidation v;
  v.additive = ts.additive();
  auto bad = [&](const std::string& what, const std::string& witness) {
    v.ok = false;
    v.violation = what;
    v.witness = witness;
    return v;
  };

  const int n = ts.size();
  if (n == 0 || n > max_elements) return bad("shape", "carrier size out of range");
  if (ts.zero < 0 || ts.zero >= n || ts.unit < 0 || ts.unit >= n)
    return bad("shape", "zero or unit is not an element");
  if (static_cast<int>(ts.tensor.size()) != n) return bad("shape", "tensor table is not total");
  for (const auto& row : ts.tensor) {
    if (static_cast<int>(row.size()) != n) return bad("shape", "tensor table is not total");
    for (int c : row)
      if (c < 0 || c >= n) return bad("shape", "tensor table mentions a non-element");
  }
  for (const Rule& r : ts.rules)
    if (!subset(r.premises, full_mask(n)) || r.conclusion < 0 || r.conclusion >= n)
      return bad("shape", "rule mentions a non-element");
  if (ts.additive()) {
    if (static_cast<int>(ts.sum->size()) != n) return bad("shape", "sum table is not total");
    for (const auto& row : *ts.sum) {
      if (static_cast<int>(row.size()) != n) return bad("shape", "sum table is not total");
      for (int c : row)
        if (c < 0 || c >= n) return bad("shape", "sum table mentions a non-element");
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ts.tprod(ts.tprod(a, b), c) != ts.tprod(a, ts.tprod(b, c)))
          return bad("associativity", ts.name(a) + "," + ts.name(b) + "," + ts.name(c));

  for (int x = 0; x < n; ++x) {
    if (ts.tprod(ts.unit, x) != x || ts.tprod(x, ts.unit) != x)
      return bad("unit", ts.name(x));
  }

  bool zero_rule = false;
  for (const Rule& r : ts.rules)
    if (r.premises == 0 && r.conclusion == ts.zero) zero_rule = true;
  if (!zero_rule) return bad("zero-rule", "rule {} -> " + ts.name(ts.zero) + " missing");

  // The zero class (nullary conclusions) absorbs tensoring on both sides;
  // for a singleton class this is the strict absorber law.
  Mask zclass = ts.zero_class();
  for (int x = 0; x < n; ++x) {
    bool okz = true;
    for_each_bit(zclass, [&](int z) {
      if (!has(zclass, ts.tprod(z, x)) || !has(zclass, ts.tprod(x, z))) okz = false;
    });
    if (!okz) return bad("zero-absorber", ts.name(x));
  }

  // Tensor-stability of every rule: conclusions tensored by t stay inside
  // the ideal generated by the premises tensored by t, on both sides.
  for (const Rule& r : ts.rules)
    for (int t = 0; t < n; ++t) {
      Mask right = 0, left = 0;
      for_each_bit(r.premises, [&](int p) {
        right |= bit(ts.tprod(p, t));
        left |= bit(ts.tprod(t, p));
      });
      if (!has(ideal_generated(ts, right), ts.tprod(r.conclusion, t)))
        return bad("tensor-stability", "rule -> " + ts.name(r.conclusion) + " against right tensoring by " + ts.name(t));
      if (!has(ideal_generated(ts, left), ts.tprod(t, r.conclusion)))
        return bad("tensor-stability", "rule -> " + ts.name(r.conclusion) + " against left tensoring by " + ts.name(t));
    }

  if (ts.additive()) {
    for (int x = 0; x < n; ++x) {
      if (ts.splus(x, x) != x) return bad("sum-idempotent", ts.name(x));
      if (ts.splus(ts.zero, x) != x || ts.splus(x, ts.zero) != x)
        return bad("sum-zero", ts.name(x));
      for (int y = 0; y < n; ++y) {
        if (ts.splus(x, y) != ts.splus(y, x)) return bad("sum-commutative", ts.name(x) + "," + ts.name(y));
        for (int z = 0; z < n; ++z)
          if (ts.splus(ts.splus(x, y), z) != ts.splus(x, ts.splus(y, z)))
            return bad("sum-associative", ts.name(x) + "," + ts.name(y) + "," + ts.name(z));
      }
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int s = ts.splus(x, y);
        if (!has(ideal_generated(ts, bit(x) | bit(y)), s))
          return bad("sum-rules", "{" + ts.name(x) + "," + ts.name(y) + "} -> " + ts.name(s) +
                                      " is not derivable");
        if (!has(ideal_generated(ts, bit(s)), x) || !has(ideal_generated(ts, bit(s)), y))
          return bad("sum-rules", "summands of " + ts.name(s) + " are not derivable");
        for (int t = 0; t < n; ++t) {
          if (ts.tprod(t, s) != ts.splus(ts.tprod(t, x), ts.tprod(t, y)))
            return bad("sum-distributivity", ts.name(t) + " (x) (" + ts.name(x) + "+" + ts.name(y) + ")");
          if (ts.tprod(s, t) != ts.splus(ts.tprod(x, t), ts.tprod(y, t)))
            return bad("sum-distributivity", "(" + ts.name(x) + "+" + ts.name(y) + ") (x) " + ts.name(t));
        }
      }
  }
  return v;
}

inline void require_valid(const TensorSystem& ts) {
  SystemValidation v = validate(ts);
  if (!v.ok) fail(ErrorKind::axiom_violation, "tensor system " + v.violation + " at " + v.witness);
}

// --- the ideal lattice T(K) ---------------------------------------------------

struct SystemIdeals {
  std::vector<Mask> ideals;  // lectic order
  Lattice lattice;

  int index_of(Mask m) const {
    for (int i = 0; i < static_cast<int>(ideals.size()); ++i)
      if (ideals[static_cast<std::size_t>(i)] == m) return i;
    fail(ErrorKind::not_an_ideal, "subset is not a thick tensor ideal");
  }
};

inline std::vector<Mask> all_ideal_masks(const TensorSystem& ts) {
  return next_closure(ts.size(), [&](Mask s) { return ideal_generated(ts, s); });
}

inline SystemIdeals all_ideals(const TensorSystem& ts) {
  SystemIdeals out;
  out.ideals = all_ideal_masks(ts);
  const int k = static_cast<int>(out.ideals.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (Mask m : out.ideals) names.push_back(mask_name(m, ts.elements));
  std::vector<Mask> down(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subset(out.ideals[static_cast<std::size_t>(j)], out.ideals[static_cast<std::size_t>(i)]))
        down[static_cast<std::size_t>(i)] |= bit(j);
  out.lattice = to_lattice(from_down_masks(std::move(names), std::move(down)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mask a = out.ideals[static_cast<std::size_t>(i)], b = out.ideals[static_cast<std::size_t>(j)];
      check_equiv(out.ideals[static_cast<std::size_t>(
                      out.lattice.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] == (a & b),
                  "T(K): meet is not intersection");
      check_equiv(out.ideals[static_cast<std::size_t>(
                      out.lattice.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] ==
                      ideal_generated(ts, a | b),
                  "T(K): join is not the generated ideal");
    }
  return out;
}

// --- the primality hierarchy --------------------------------------------------

inline bool is_prime(const TensorSystem& ts, Mask ideal) {
  require_ideal(ts, ideal, "is_prime");
  if (ideal == full_mask(ts.size())) return false;  // primes are proper
  for (int x = 0; x < ts.size(); ++x)
    for (int y = 0; y < ts.size(); ++y) {
      if (has(ideal, x) || has(ideal, y)) continue;
      bool contained = true;
      for (int z = 0; z < ts.size() && contained; ++z)
        if (!has(ideal, ts.tprod(ts.tprod(x, z), y))) contained = false;
      if (contained) return false;
    }
  return true;
}

inline bool is_completely_prime(const TensorSystem& ts, Mask ideal) {
  require_ideal(ts, ideal, "is_completely_prime");
  if (ideal == full_mask(ts.size())) return false;
  for (int x = 0; x < ts.size(); ++x)
    for (int y = 0; y < ts.size(); ++y)
      if (has(ideal, ts.tprod(x, y)) && !has(ideal, x) && !has(ideal, y)) return false;
  return true;
}

inline bool is_semiprime(const TensorSystem& ts, Mask ideal) {
  require_ideal(ts, ideal, "is_semiprime");
  if (ideal == full_mask(ts.size())) return true;  // empty intersection convention
  for (int x = 0; x < ts.size(); ++x) {
    if (has(ideal, x)) continue;
    bool contained = true;
    for (int z = 0; z < ts.size() && contained; ++z)
      if (!has(ideal, ts.tprod(ts.tprod(x, z), x))) contained = false;
    if (contained) return false;
  }
  return true;
}

// x^{(x)n} membership with cycle detection; finiteness bounds the orbit.
inline bool is_radical(const TensorSystem& ts, Mask ideal) {
  require_ideal(ts, ideal, "is_radical");
  for (int x = 0; x < ts.size(); ++x) {
    if (has(ideal, x)) continue;
    int power = x;
    Mask seen = 0;
    while (!has(seen, power)) {
      seen |= bit(power);
      if (has(ideal, power)) return false;
      power = ts.tprod(power, x);
    }
  }
  return true;
}

inline std::vector<Mask> prime_ideals(const TensorSystem& ts) {
  std::vector<Mask> out;
  for (Mask m : all_ideal_masks(ts))
    if (is_prime(ts, m)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Mask> completely_prime_ideals(const TensorSystem& ts) {
  std::vector<Mask> out;
  for (Mask m : all_ideal_masks(ts))
    if (is_completely_prime(ts, m)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Mask> semiprime_ideals(const TensorSystem& ts) {
  std::vector<Mask> out;
  for (Mask m : all_ideal_masks(ts))
    if (is_semiprime(ts, m)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

// Intersection of all primes containing the generated ideal; the whole
// system when none exist.
inline Mask semiprime_hull(const TensorSystem& ts, Mask s) {
  Mask base = ideal_generated(ts, s);
  Mask acc = full_mask(ts.size());
  for (Mask p : prime_ideals(ts))
    if (subset(base, p)) acc &= p;
  return acc;
}

inline Mask radical_hull(const TensorSystem& ts, Mask s) {
  Mask base = ideal_generated(ts, s);
  Mask acc = full_mask(ts.size());
  for (Mask p : completely_prime_ideals(ts))
    if (subset(base, p)) acc &= p;
  return acc;
}

// --- the five-way prime equivalence -------------------------------------------

struct PrimeEquivalences {
  bool ideal_pair = false;        // I (x) J inside P forces I or J inside P
  bool product_ideal = false;     // same, through the generated product ideal
  bool elementwise = false;       // x (x) K (x) y
  bool semiprime_pair = false;    // quantified over semiprime pairs
  bool meet_prime_in_ts = false;  // member of T_s and meet-prime there
};

inline PrimeEquivalences prime_equivalences(const TensorSystem& ts, Mask ideal) {
  require_ideal(ts, ideal, "prime_equivalences");
  if (ideal == full_mask(ts.size()))
    fail(ErrorKind::precondition_unmet, "prime_equivalences needs a proper ideal");
  PrimeEquivalences e;
  std::vector<Mask> ideals = all_ideal_masks(ts);
  std::vector<Mask> semiprimes = semiprime_ideals(ts);

  auto pair_prime = [&](const std::vector<Mask>& family, bool through_ideal) {
    for (Mask a : family)
      for (Mask b : family) {
        Mask prod = ts.set_tensor(a, b);
        if (through_ideal) prod = ideal_generated(ts, prod);
        if (subset(prod, ideal) && !subset(a, ideal) && !subset(b, ideal)) return false;
      }
    return true;
  };
  e.ideal_pair = pair_prime(ideals, false);
  e.product_ideal = pair_prime(ideals, true);
  e.elementwise = is_prime(ts, ideal);
  e.semiprime_pair = pair_prime(semiprimes, false);

  e.meet_prime_in_ts = is_semiprime(ts, ideal);
  if (e.meet_prime_in_ts)
    for (Mask a : semiprimes)
      for (Mask b : semiprimes)
        if (subset(a & b, ideal) && !subset(a, ideal) && !subset(b, ideal))
          e.meet_prime_in_ts = false;

  const bool all_same = e.ideal_pair == e.product_ideal && e.ideal_pair == e.elementwise &&
                        e.ideal_pair == e.semiprime_pair && e.ideal_pair == e.meet_prime_in_ts;
  check_equiv(all_same, "five-way prime equivalence fails on " + mask_name(ideal, ts.elements));
  return e;
}

// --- the spatial frame T_s(K) --------------------------------------------------

struct SemiprimeLattice {
  std::vector<Mask> semiprimes;  // ascending mask order
  Lattice lattice;

  int index_of(Mask m) const {
    for (int i = 0; i < static_cast<int>(semiprimes.size()); ++i)
      if (semiprimes[static_cast<std::size_t>(i)] == m) return i;
    fail(ErrorKind::not_an_ideal, "not a semiprime ideal of the system");
  }
};

inline SemiprimeLattice ts_lattice(const TensorSystem& ts) {
  SemiprimeLattice out;
  out.semiprimes = semiprime_ideals(ts);
  const int k = static_cast<int>(out.semiprimes.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (Mask m : out.semiprimes) names.push_back(mask_name(m, ts.elements));
  std::vector<Mask> down(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subset(out.semiprimes[static_cast<std::size_t>(j)], out.semiprimes[static_cast<std::size_t>(i)]))
        down[static_cast<std::size_t>(i)] |= bit(j);
  out.lattice = to_lattice(from_down_masks(std::move(names), std::move(down)));

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mask a = out.semiprimes[static_cast<std::size_t>(i)], b = out.semiprimes[static_cast<std::size_t>(j)];
      check_equiv(out.semiprimes[static_cast<std::size_t>(
                      out.lattice.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] == (a & b),
                  "FrameViolation: T_s meet is not intersection");
      check_equiv(out.semiprimes[static_cast<std::size_t>(
                      out.lattice.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] ==
                      semiprime_hull(ts, a | b),
                  "FrameViolation: T_s join is not the semiprime hull");
      check_equiv((a & b) == semiprime_hull(ts, ts.set_tensor(a, b)),
                  "FrameViolation: meet differs from the hull of the tensor product");
    }
  check_equiv(is_frame(out.lattice), "FrameViolation: T_s is not a frame");
  check_equiv(is_spatial(out.lattice), "FrameViolation: T_s is not spatial");
  return out;
}

// Lemma: hulls multiply into the hull of the two-sided product,
// <M>_s (x) <N>_s inside <M (x) K (x) N>_s.
inline void hull_inclusion_check(const TensorSystem& ts, Mask m, Mask n) {
  Mask hull_m = semiprime_hull(ts, m);
  Mask hull_n = semiprime_hull(ts, n);
  Mask mid = 0;
  for_each_bit(m, [&](int a) {
    for (int z = 0; z < ts.size(); ++z)
      for_each_bit(n, [&](int b) { mid |= bit(ts.tprod(ts.tprod(a, z), b)); });
  });
  Mask rhs = semiprime_hull(ts, mid);
  bool ok = true;
  for_each_bit(hull_m, [&](int a) {
    for_each_bit(hull_n, [&](int b) {
      if (!has(rhs, ts.tprod(a, b))) ok = false;
    });
  });
  check_equiv(ok, "InclusionViolation: hull product escapes the two-sided hull for M = " +
                      mask_name(m, ts.elements) + ", N = " + mask_name(n, ts.elements));
}

}  // namespace stoneworks
