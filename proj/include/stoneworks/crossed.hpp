#pragma once

// Finite group actions on tensor systems and the crossed-product verifiers.
// Two models are built: the pure model E x G matching the object-level
// definition of K x| G, and the additive full model of G-tuples. The
// Huang-Vashaw bijection runs on the pure model, the finite-G principal
// closure proposition on the full one.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stoneworks/bits.hpp"
#include "stoneworks/classification.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/tensor_system.hpp"

namespace stoneworks {

struct Group {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mul;
  int identity = 0;
  std::vector<int> inverse;

  int size() const { return static_cast<int>(elements.size()); }
  int times(int g, int h) const {
    return mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
  }
  int inv(int g) const { return inverse[static_cast<std::size_t>(g)]; }
};

inline Group make_group(std::vector<std::string> elements, std::vector<std::vector<int>> mul) {
  Group g;
  g.elements = std::move(elements);
  g.mul = std::move(mul);
  const int k = g.size();
  if (k == 0) fail(ErrorKind::invalid_action, "empty group");
  if (static_cast<int>(g.mul.size()) != k) fail(ErrorKind::invalid_action, "group table not total");
  for (const auto& row : g.mul) {
    if (static_cast<int>(row.size()) != k) fail(ErrorKind::invalid_action, "group table not total");
    for (int c : row)
      if (c < 0 || c >= k) fail(ErrorKind::invalid_action, "group table mentions a non-element");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c)))
          fail(ErrorKind::invalid_action, "group multiplication is not associative");
  g.identity = -1;
  for (int e = 0; e < k; ++e) {
    bool id = true;
    for (int a = 0; a < k; ++a)
      if (g.times(e, a) != a || g.times(a, e) != a) id = false;
    if (id) g.identity = e;
  }
  if (g.identity < 0) fail(ErrorKind::invalid_action, "group has no identity");
  g.inverse.assign(static_cast<std::size_t>(k), -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b)
      if (g.times(a, b) == g.identity && g.times(b, a) == g.identity)
        g.inverse[static_cast<std::size_t>(a)] = b;
    if (g.inverse[static_cast<std::size_t>(a)] < 0)
      fail(ErrorKind::invalid_action, "group element '" + g.elements[static_cast<std::size_t>(a)] +
                                          "' has no inverse");
  }
  return g;
}

inline Group trivial_group() { return make_group({"e"}, {{0}}); }

inline Group cyclic2() { return make_group({"e", "c"}, {{0, 1}, {1, 0}}); }

// A group acting by automorphisms of the system: act[g] is a permutation of
// elements preserving tensor, rules, zero, unit, and sum when present.
struct GroupAction {
  Group group;
  TensorSystem system;
  std::vector<std::vector<int>> act;  // act[g][x]

  int apply(int g, int x) const {
    return act[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)];
  }
};

inline void require_valid(const GroupAction& a) {
  const int k = a.group.size();
  const int n = a.system.size();
  if (static_cast<int>(a.act.size()) != k) fail(ErrorKind::invalid_action, "action table not total");
  for (int g = 0; g < k; ++g) {
    const auto& row = a.act[static_cast<std::size_t>(g)];
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::invalid_action, "action table not total");
    Mask image = 0;
    for (int x : row) {
      if (x < 0 || x >= n) fail(ErrorKind::invalid_action, "action maps outside the carrier");
      image |= bit(x);
    }
    if (image != full_mask(n))
      fail(ErrorKind::invalid_action,
           "action of '" + a.group.elements[static_cast<std::size_t>(g)] + "' is not a permutation");
  }
  for (int x = 0; x < n; ++x)
    if (a.apply(a.group.identity, x) != x)
      fail(ErrorKind::invalid_action, "identity does not act trivially");
  for (int g = 0; g < k; ++g)
    for (int h = 0; h < k; ++h)
      for (int x = 0; x < n; ++x)
        if (a.apply(a.group.times(g, h), x) != a.apply(g, a.apply(h, x)))
          fail(ErrorKind::invalid_action, "action is not a homomorphism");
  for (int g = 0; g < k; ++g) {
    if (a.apply(g, a.system.zero) != a.system.zero || a.apply(g, a.system.unit) != a.system.unit)
      fail(ErrorKind::invalid_action, "action moves zero or unit");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (a.apply(g, a.system.tprod(x, y)) != a.system.tprod(a.apply(g, x), a.apply(g, y)))
          fail(ErrorKind::invalid_action,
               "action of '" + a.group.elements[static_cast<std::size_t>(g)] +
                   "' does not preserve the tensor table");
        if (a.system.additive() &&
            a.apply(g, a.system.splus(x, y)) != a.system.splus(a.apply(g, x), a.apply(g, y)))
          fail(ErrorKind::invalid_action, "action does not preserve the sum table");
      }
    for (const Rule& r : a.system.rules) {
      Mask moved = 0;
      for_each_bit(r.premises, [&](int p) { moved |= bit(a.apply(g, p)); });
      bool found = false;
      for (const Rule& r2 : a.system.rules)
        if (r2.premises == moved && r2.conclusion == a.apply(g, r.conclusion)) found = true;
      if (!found) fail(ErrorKind::invalid_action, "action does not preserve the rule set");
    }
  }
}

inline Mask apply_to_mask(const GroupAction& a, int g, Mask m) {
  Mask out = 0;
  for_each_bit(m, [&](int x) { out |= bit(a.apply(g, x)); });
  return out;
}

// --- the pure crossed product ---------------------------------------------------

// Elements x|g with (x|g)(y|h) = (x g(y))|gh; one zero per group element,
// collected into the zero class by nullary rules; base rules lift
// componentwise at every index. Non-additive as soon as |G| > 1.
inline TensorSystem crossed_product_pure(const GroupAction& a) {
  require_valid(a);
  const int n = a.system.size();
  const int k = a.group.size();
  if (n * k > max_elements) fail(ErrorKind::invalid_action, "crossed product exceeds the carrier cap");
  auto idx = [&](int x, int g) { return x * k + g; };

  TensorSystem out;
  out.elements.reserve(static_cast<std::size_t>(n * k));
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < k; ++g)
      out.elements.push_back(a.system.name(x) + "@" + a.group.elements[static_cast<std::size_t>(g)]);
  out.zero = idx(a.system.zero, a.group.identity);
  out.unit = idx(a.system.unit, a.group.identity);
  out.tensor.assign(static_cast<std::size_t>(n * k), std::vector<int>(static_cast<std::size_t>(n * k), 0));
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < k; ++g)
      for (int y = 0; y < n; ++y)
        for (int h = 0; h < k; ++h)
          out.tensor[static_cast<std::size_t>(idx(x, g))][static_cast<std::size_t>(idx(y, h))] =
              idx(a.system.tprod(x, a.apply(g, y)), a.group.times(g, h));
  for (int g = 0; g < k; ++g) out.rules.push_back({0, idx(a.system.zero, g)});
  for (const Rule& r : a.system.rules) {
    if (r.premises == 0) continue;  // zero rules already lifted per index
    for (int g = 0; g < k; ++g) {
      Mask prem = 0;
      for_each_bit(r.premises, [&](int p) { prem |= bit(idx(p, g)); });
      out.rules.push_back({prem, idx(r.conclusion, g)});
    }
  }
  if (k == 1 && a.system.additive()) out.sum = a.system.sum;
  require_valid(out);
  return out;
}

// Mask of I x| G inside the pure product.
inline Mask crossed_mask(const GroupAction& a, Mask base_ideal) {
  const int k = a.group.size();
  Mask out = 0;
  for_each_bit(base_ideal, [&](int x) {
    for (int g = 0; g < k; ++g) out |= bit(x * k + g);
  });
  return out;
}

// --- the full (additive) crossed product ----------------------------------------

// G-tuples over an additive base with componentwise sums and the bilinear
// twisted tensor.
inline TensorSystem crossed_product_full(const GroupAction& a) {
  require_valid(a);
  if (!a.system.additive())
    fail(ErrorKind::not_additive, "the full crossed product needs an additive base");
  const int n = a.system.size();
  const int k = a.group.size();
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= n;
    if (total > max_elements) fail(ErrorKind::invalid_action, "crossed product exceeds the carrier cap");
  }
  const int m = static_cast<int>(total);

  auto component = [&](int t, int g) {
    for (int i = 0; i < g; ++i) t /= n;
    return t % n;
  };
  auto tuple_of = [&](const std::vector<int>& comps) {
    int t = 0;
    for (int i = k - 1; i >= 0; --i) t = t * n + comps[static_cast<std::size_t>(i)];
    return t;
  };
  auto delta = [&](int x, int g) {
    std::vector<int> comps(static_cast<std::size_t>(k), a.system.zero);
    comps[static_cast<std::size_t>(g)] = x;
    return tuple_of(comps);
  };

  TensorSystem out;
  out.elements.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    std::string name = "[";
    for (int g = 0; g < k; ++g) {
      if (g) name += ",";
      name += a.system.name(component(t, g));
    }
    name += "]";
    out.elements.push_back(name);
  }
  out.zero = delta(a.system.zero, a.group.identity);
  out.unit = delta(a.system.unit, a.group.identity);

  out.tensor.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  std::vector<std::vector<int>> sum(static_cast<std::size_t>(m),
                                    std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int t = 0; t < m; ++t)
    for (int u = 0; u < m; ++u) {
      std::vector<int> prod(static_cast<std::size_t>(k), a.system.zero);
      std::vector<int> add(static_cast<std::size_t>(k), a.system.zero);
      for (int g = 0; g < k; ++g) {
        add[static_cast<std::size_t>(g)] =
            a.system.splus(component(t, g), component(u, g));
        for (int h = 0; h < k; ++h) {
          int dest = a.group.times(g, h);
          int term = a.system.tprod(component(t, g), a.apply(g, component(u, h)));
          prod[static_cast<std::size_t>(dest)] =
              a.system.splus(prod[static_cast<std::size_t>(dest)], term);
        }
      }
      out.tensor[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] = tuple_of(prod);
      sum[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] = tuple_of(add);
    }
  out.sum = std::move(sum);

  out.rules.push_back({0, out.zero});
  for (const Rule& r : a.system.rules) {
    if (r.premises == 0) continue;
    for (int g = 0; g < k; ++g) {
      Mask prem = 0;
      for_each_bit(r.premises, [&](int p) { prem |= bit(delta(p, g)); });
      out.rules.push_back({prem, delta(r.conclusion, g)});
    }
  }
  // sums and summands, stated as rules so ideal chasing can use them
  for (int t = 0; t < m; ++t)
    for (int u = t; u < m; ++u) {
      int s = out.splus(t, u);
      out.rules.push_back({bit(t) | bit(u), s});
      if (s != t) out.rules.push_back({bit(s), t});
      if (s != u) out.rules.push_back({bit(s), u});
    }
  std::sort(out.rules.begin(), out.rules.end(), [](const Rule& x, const Rule& y) {
    return x.premises != y.premises ? x.premises < y.premises : x.conclusion < y.conclusion;
  });
  out.rules.erase(std::unique(out.rules.begin(), out.rules.end(),
                              [](const Rule& x, const Rule& y) {
                                return x.premises == y.premises && x.conclusion == y.conclusion;
                              }),
                  out.rules.end());
  require_valid(out);
  return out;
}

// --- G-ideals and G-primes --------------------------------------------------------

struct GIdealLattice {
  std::vector<Mask> ideals;  // G-stable ideals, ascending
  Lattice lattice;
};

inline std::vector<Mask> g_ideal_masks(const GroupAction& a) {
  require_valid(a);
  std::vector<Mask> out;
  for (Mask m : all_ideal_masks(a.system)) {
    bool stable = true;
    for (int g = 0; g < a.group.size(); ++g)
      if (apply_to_mask(a, g, m) != m) stable = false;
    if (stable) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline GIdealLattice g_ideals(const GroupAction& a) {
  GIdealLattice out;
  out.ideals = g_ideal_masks(a);
  const int k = static_cast<int>(out.ideals.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (Mask m : out.ideals) names.push_back(mask_name(m, a.system.elements));
  std::vector<Mask> down(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subset(out.ideals[static_cast<std::size_t>(j)], out.ideals[static_cast<std::size_t>(i)]))
        down[static_cast<std::size_t>(i)] |= bit(j);
  out.lattice = to_lattice(from_down_masks(std::move(names), std::move(down)));
  return out;
}

inline std::vector<Mask> g_primes(const GroupAction& a) {
  std::vector<Mask> gideals = g_ideal_masks(a);
  const Mask full = full_mask(a.system.size());
  std::vector<Mask> out;
  for (Mask p : gideals) {
    if (p == full) continue;  // G-primes are proper
    bool prime = true;
    for (Mask i : gideals)
      for (Mask j : gideals)
        if (subset(a.system.set_tensor(i, j), p) && !subset(i, p) && !subset(j, p)) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

// --- the crossed-product verifiers -------------------------------------------------

struct HvBijectionVerdict {
  int g_ideal_count = 0;
  int crossed_ideal_count = 0;
  bool ideal_bijection = false;
  bool spc_homeomorphism = false;
};

// I -> I x| G is an order bijection G-ideals -> ideals of the pure product,
// restricting to G-Spc ~ Spc(K x| G).
inline HvBijectionVerdict hv_bijection_check(const GroupAction& a) {
  TensorSystem pure = crossed_product_pure(a);
  std::vector<Mask> gideals = g_ideal_masks(a);
  std::vector<Mask> crossed_ideals = all_ideal_masks(pure);
  std::sort(crossed_ideals.begin(), crossed_ideals.end());

  HvBijectionVerdict v;
  v.g_ideal_count = static_cast<int>(gideals.size());
  v.crossed_ideal_count = static_cast<int>(crossed_ideals.size());

  std::vector<Mask> image;
  image.reserve(gideals.size());
  for (Mask i : gideals) image.push_back(crossed_mask(a, i));
  std::vector<Mask> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  check_equiv(std::unique(sorted.begin(), sorted.end()) == sorted.end(),
              "HV bijection: the crossed map is not injective");
  check_equiv(sorted == crossed_ideals, "HV bijection: not onto the ideals of the crossed product");
  for (std::size_t i = 0; i < gideals.size(); ++i)
    for (std::size_t j = 0; j < gideals.size(); ++j)
      check_equiv(subset(gideals[i], gideals[j]) == subset(image[i], image[j]),
                  "HV bijection: order is not preserved");
  v.ideal_bijection = true;

  // Point level: G-primes map onto the primes of the crossed product, and
  // the G-support topology transports to the support topology.
  std::vector<Mask> gp = g_primes(a);
  std::vector<Mask> crossed_primes = prime_ideals(pure);
  std::vector<Mask> gp_image;
  gp_image.reserve(gp.size());
  for (Mask p : gp) gp_image.push_back(crossed_mask(a, p));
  std::vector<Mask> gp_sorted = gp_image;
  std::sort(gp_sorted.begin(), gp_sorted.end());
  check_equiv(gp_sorted == crossed_primes, "HV bijection: G-primes do not match the crossed primes");

  SystemSpectrum s = spc(pure);
  std::vector<Mask> gsupp;  // per base element: mask over gp indices
  gsupp.assign(static_cast<std::size_t>(a.system.size()), 0);
  for (int x = 0; x < a.system.size(); ++x)
    for (int i = 0; i < static_cast<int>(gp.size()); ++i)
      if (!has(gp[static_cast<std::size_t>(i)], x)) gsupp[static_cast<std::size_t>(x)] |= bit(i);
  std::vector<std::string> gnames;
  gnames.reserve(gp.size());
  for (Mask p : gp) gnames.push_back(mask_name(p, a.system.elements));
  Space gspc = from_closed_basis(gnames, gsupp);
  // transport opens through the point bijection
  std::vector<int> to_crossed(gp.size());
  for (std::size_t i = 0; i < gp.size(); ++i)
    to_crossed[i] = s.point_of(crossed_mask(a, gp[i]));
  std::vector<Mask> transported;
  transported.reserve(gspc.opens.size());
  for (Mask u : gspc.opens) {
    Mask t = 0;
    for_each_bit(u, [&](int i) { t |= bit(to_crossed[static_cast<std::size_t>(i)]); });
    transported.push_back(t);
  }
  std::sort(transported.begin(), transported.end());
  check_equiv(transported == s.space.opens, "HV bijection: G-Spc is not homeomorphic to Spc(K x| G)");
  v.spc_homeomorphism = true;
  return v;
}

struct RespSemiprimeVerdict {
  bool all_g_primes_semiprime = false;
  bool bijection_restricts = false;
};

// Every G-prime is semiprime iff the HV bijection restricts to semiprime
// G-ideals <-> semiprime ideals of the crossed product. The forward image of
// a semiprime G-ideal is semiprime unconditionally.
inline RespSemiprimeVerdict resp_semiprime_check(const GroupAction& a) {
  TensorSystem pure = crossed_product_pure(a);
  RespSemiprimeVerdict v;
  v.all_g_primes_semiprime = true;
  for (Mask p : g_primes(a))
    if (!is_semiprime(a.system, p)) v.all_g_primes_semiprime = false;

  v.bijection_restricts = true;
  for (Mask i : g_ideal_masks(a)) {
    bool base_sp = is_semiprime(a.system, i);
    bool crossed_sp = is_semiprime(pure, crossed_mask(a, i));
    check_equiv(!base_sp || crossed_sp,
                "semiprime G-ideal with non-semiprime crossed image: " +
                    mask_name(i, a.system.elements));
    if (base_sp != crossed_sp) v.bijection_restricts = false;
  }
  check_equiv(v.all_g_primes_semiprime == v.bijection_restricts,
              "resp_semiprime: the two sides of the equivalence disagree");
  return v;
}

// Witness transport s_{x|g} = g^{-1}(s_x) | g^{-1} for compact detection in
// the pure product.
inline void cd_inheritance_check(const GroupAction& a) {
  RespSemiprimeVerdict rs = resp_semiprime_check(a);
  if (!rs.all_g_primes_semiprime)
    fail(ErrorKind::precondition_unmet, "cd_inheritance needs every G-prime semiprime");
  CompactDetectionVerdict base_cd = compact_detection(a.system);
  if (!base_cd.element_level)
    fail(ErrorKind::precondition_unmet, "cd_inheritance needs element-level compact detection");

  TensorSystem pure = crossed_product_pure(a);
  const int k = a.group.size();
  for (int x = 0; x < a.system.size(); ++x) {
    int sx = *base_cd.witness[static_cast<std::size_t>(x)];
    for (int g = 0; g < k; ++g) {
      int ginv = a.group.inv(g);
      int pure_x = x * k + g;
      int pure_s = a.apply(ginv, sx) * k + ginv;
      int sandwich = pure.tprod(pure.tprod(pure_x, pure_s), pure_x);
      check_equiv(semiprime_hull(pure, bit(pure_x)) == semiprime_hull(pure, bit(sandwich)),
                  "cd_inheritance: transported witness fails for " + pure.name(pure_x));
    }
  }
}

// Finite-G principal closure of the full model, with the generator
// transport x = (+)_i (+)_g g(x_i).
inline void pc_finite_g_check(const GroupAction& a) {
  RespSemiprimeVerdict rs = resp_semiprime_check(a);
  if (!rs.all_g_primes_semiprime)
    fail(ErrorKind::precondition_unmet, "pc_finite_g needs every G-prime semiprime");
  if (!is_principally_closed(a.system).ok)
    fail(ErrorKind::precondition_unmet, "pc_finite_g needs a principally closed base");
  if (!a.system.additive())
    fail(ErrorKind::precondition_unmet, "pc_finite_g needs an additive base for the full model");

  TensorSystem full = crossed_product_full(a);
  check_equiv(is_principally_closed(full).ok, "pc_finite_g: full crossed product is not principally closed");

  const int n = a.system.size();
  const int k = a.group.size();
  auto component = [&](int t, int g) {
    for (int i = 0; i < g; ++i) t /= n;
    return t % n;
  };
  int stride = 1;  // identity component slot within the tuple index
  for (int i = 0; i < a.group.identity; ++i) stride *= n;
  int zero_tuple = 0;
  for (int i = 0; i < k; ++i) zero_tuple = zero_tuple * n + a.system.zero;
  auto delta_identity = [&](int e) { return zero_tuple + (e - a.system.zero) * stride; };

  for (int t = 0; t < full.size(); ++t) {
    // base generator transported from t's components across the orbit
    int x = a.system.zero;
    for (int g = 0; g < k; ++g)
      for (int h = 0; h < k; ++h) x = a.system.splus(x, a.apply(h, component(t, g)));
    Mask hull_t = semiprime_hull(full, bit(t));
    Mask base_side = 0;
    for (int e = 0; e < n; ++e)
      if (has(hull_t, delta_identity(e))) base_side |= bit(e);
    check_equiv(base_side == semiprime_hull(a.system, bit(x)),
                "pc_finite_g: generator transport fails for " + full.name(t));
  }
}

}  // namespace stoneworks
