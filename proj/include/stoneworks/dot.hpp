#pragma once

#include <string>

#include "stoneworks/classification.hpp"
#include "stoneworks/lattice.hpp"
#include "stoneworks/poset.hpp"
#include "stoneworks/space.hpp"
#include "stoneworks/tensor_system.hpp"

namespace stoneworks {

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}
}  // namespace detail

// Hasse diagram: cover edges only, low-to-high, nodes in carrier order.
inline std::string emit_dot(const Poset& p, const std::string& name = "poset") {
  std::string out = "digraph " + detail::dot_quote(name) + " {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" +
           detail::dot_quote(p.elements[static_cast<std::size_t>(i)]) + "];\n";
  for (auto [a, b] : p.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

inline std::string emit_dot(const Lattice& l, const std::string& name = "lattice") {
  return emit_dot(l.poset, name);
}

// Specialization order of a (T0) space.
inline std::string emit_dot(const Space& x, const std::string& name = "space") {
  return emit_dot(specialization_order(x), name);
}

// The translation table between lattice-theoretic and geometric properties,
// instantiated with this system's verdicts. The sublattice row carries the
// meet side (principal closure); joins of principals need sums, which
// non-additive systems lack.
inline std::string emit_table1(const TensorSystem& ts) {
  SemiprimeLattice t = ts_lattice(ts);
  PrincipalPart pp = principal_part(ts);
  auto yesno = [](bool b) { return b ? "yes" : "no"; };

  std::string rows[5][3] = {
      {"T_s(K) is coherent", "Spc(K) and Spc(K)^v are spectral", yesno(is_coherent(t.lattice))},
      {"T_s(K) is spatial", "Spc(K)^nu is sober", yesno(is_spatial(t.lattice))},
      {"t_s(K) = T_s(K)^c", "K has compact detection", yesno(pp.equals_compacts_of_ts)},
      {"t_s(K) is a sublattice of T_s(K)", "K has principal closure",
       yesno(is_principally_closed(ts).ok)},
      {"all elements of T_s(K) are compact", "all semiprime ideals are principal",
       yesno(pp.principals == t.semiprimes)},
  };
  std::string out;
  auto pad = [](const std::string& s, std::size_t w) {
    std::string p = s;
    while (p.size() < w) p += ' ';
    return p;
  };
  out += pad("lattice property", 36) + "| " + pad("geometric/categorical property", 36) + "| verdict\n";
  out += std::string(36, '-') + "+" + std::string(37, '-') + "+--------\n";
  for (const auto& row : rows)
    out += pad(row[0], 36) + "| " + pad(row[1], 36) + "| " + row[2] + "\n";
  return out;
}

}  // namespace stoneworks
