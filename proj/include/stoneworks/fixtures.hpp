#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stoneworks/crossed.hpp"
#include "stoneworks/lattice.hpp"
#include "stoneworks/poset.hpp"
#include "stoneworks/space.hpp"
#include "stoneworks/tensor_system.hpp"

namespace stoneworks::fixtures {

// Desk-scale corpus shared by tests and the CLI bundle.

inline Lattice chain(int n) {  // 0 < 1 < ... < n-1
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(names[static_cast<std::size_t>(i)],
                                                      names[static_cast<std::size_t>(i) + 1]);
  return lattice_from_covers(std::move(names), covers);
}

inline Lattice one() { return chain(1); }
inline Lattice two() { return chain(2); }

inline Lattice c3() {
  return lattice_from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
}

// Boolean square {0,a,b,1}.
inline Lattice b2() {
  return lattice_from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// Boolean cube on three atoms.
inline Lattice b3() {
  return lattice_from_covers({"0", "x", "y", "z", "xy", "xz", "yz", "1"},
                             {{"0", "x"}, {"0", "y"}, {"0", "z"},
                              {"x", "xy"}, {"x", "xz"}, {"y", "xy"}, {"y", "yz"},
                              {"z", "xz"}, {"z", "yz"},
                              {"xy", "1"}, {"xz", "1"}, {"yz", "1"}});
}

inline Lattice diamond_m3() {
  return lattice_from_covers({"0", "a", "b", "c", "1"},
                             {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline Lattice pentagon_n5() {
  return lattice_from_covers({"0", "a", "b", "c", "1"},
                             {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

inline Lattice b2_top() {  //  B2 with a pendant top
  return lattice_from_covers({"0", "a", "b", "1", "t"},
                             {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}, {"1", "t"}});
}

inline Lattice b2_bottom() {  // B2 with a pendant bottom
  return lattice_from_covers({"z", "0", "a", "b", "1"},
                             {{"z", "0"}, {"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// Product of chains C2 x C3 (a 2x3 grid).
inline Lattice grid2x3() {
  return lattice_from_covers({"00", "01", "02", "10", "11", "12"},
                             {{"00", "01"}, {"01", "02"},
                              {"10", "11"}, {"11", "12"},
                              {"00", "10"}, {"01", "11"}, {"02", "12"}});
}

// Product of chains C3 x C3.
inline Lattice grid3x3() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) names.push_back(std::to_string(i) + std::to_string(j));
  auto nm = [](int i, int j) { return std::to_string(i) + std::to_string(j); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i + 1 < 3) covers.emplace_back(nm(i, j), nm(i + 1, j));
      if (j + 1 < 3) covers.emplace_back(nm(i, j), nm(i, j + 1));
    }
  return lattice_from_covers(std::move(names), covers);
}

// Downsets of the vee poset {0 < a, 0 < b}: a 5-element distributive lattice.
inline Lattice vee_downsets() {
  return lattice_from_covers({"e", "0", "0a", "0b", "0ab"},
                             {{"e", "0"}, {"0", "0a"}, {"0", "0b"}, {"0a", "0ab"}, {"0b", "0ab"}});
}

inline std::vector<Lattice> distributive_corpus() {
  return {one(),     two(),      c3(),       chain(4),  chain(5),      b2(),
          b3(),      b2_top(),   b2_bottom(), grid2x3(), grid3x3(),    vee_downsets()};
}

// --- spaces ------------------------------------------------------------------

inline Space sierpinski() { return from_open_basis({"p", "q"}, {bit(0)}); }

inline Space discrete(int n) {
  std::vector<std::string> names;
  std::vector<Mask> basis;
  for (int i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    basis.push_back(bit(i));
  }
  return from_open_basis(std::move(names), basis);
}

inline Space indiscrete2() { return from_open_basis({"p", "q"}, {}); }

// --- tensor systems ------------------------------------------------------------

// Two orthogonal idempotents summing to the unit; additive. The smallest
// system whose zero ideal is semiprime but not prime.
inline TensorSystem matrix2() {
  TensorSystem ts;
  ts.elements = {"0", "e1", "e2", "1"};
  ts.zero = 0;
  ts.unit = 3;
  ts.tensor = {{0, 0, 0, 0},   //
               {0, 1, 0, 1},   // e1*e1=e1, e1*e2=0, e1*1=e1
               {0, 0, 2, 2},   //
               {0, 1, 2, 3}};
  ts.rules = {{0, 0}, {bit(1) | bit(2), 3}, {bit(3), 1}, {bit(3), 2}};
  ts.sum = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  return ts;
}

// Commutative chain with an idempotent middle.
inline TensorSystem comm3() {
  TensorSystem ts;
  ts.elements = {"0", "x", "1"};
  ts.zero = 0;
  ts.unit = 2;
  ts.tensor = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  ts.rules = {{0, 0}};
  ts.sum = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  return ts;
}

// Nilpotent middle: a*a = 0, so {0} is not semiprime.
inline TensorSystem nilp3() {
  TensorSystem ts;
  ts.elements = {"0", "a", "1"};
  ts.zero = 0;
  ts.unit = 2;
  ts.tensor = {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}};
  ts.rules = {{0, 0}};
  ts.sum = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  return ts;
}

// Two orthogonal idempotents with no sums: the finite witness of a
// non-coherent T_s (one compact semiprime is not principal).
inline TensorSystem freepair() {
  TensorSystem ts;
  ts.elements = {"0", "a", "b", "1"};
  ts.zero = 0;
  ts.unit = 3;
  ts.tensor = {{0, 0, 0, 0},  //
               {0, 1, 0, 1},  //
               {0, 0, 2, 2},  //
               {0, 1, 2, 3}};
  ts.rules = {{0, 0}};
  return ts;
}

// One element, zero = unit: no proper primes, empty spectrum.
inline TensorSystem unit_only() {
  TensorSystem ts;
  ts.elements = {"z"};
  ts.zero = 0;
  ts.unit = 0;
  ts.tensor = {{0}};
  ts.rules = {{0, 0}};
  ts.sum = std::vector<std::vector<int>>{{0}};
  return ts;
}

inline std::vector<TensorSystem> system_corpus() {
  return {matrix2(), comm3(), nilp3(), freepair(), unit_only()};
}

// Deliberately broken variants for validator tests.

inline TensorSystem matrix2_missing_sum_rule() {
  TensorSystem ts = matrix2();
  ts.rules = {{0, 0}};  // sum kept, generating rules dropped
  return ts;
}

// A rule {a} -> b whose conclusion escapes the premise ideal after
// tensoring: b*b = b but a*b = 0.
inline TensorSystem broken_tensor_stability() {
  TensorSystem ts;
  ts.elements = {"0", "a", "b", "1"};
  ts.zero = 0;
  ts.unit = 3;
  ts.tensor = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  ts.rules = {{0, 0}, {bit(1), 2}};
  return ts;
}

inline TensorSystem broken_associativity() {
  TensorSystem ts = freepair();
  ts.tensor[1][2] = 1;  // a*b = a while b*a = 0
  return ts;
}

inline TensorSystem broken_absorber() {
  TensorSystem ts = comm3();
  ts.sum.reset();
  ts.tensor[0][1] = 1;  // 0*x = x
  return ts;
}

// --- group actions -------------------------------------------------------------

inline GroupAction trivial_action(TensorSystem ts) {
  GroupAction a;
  a.group = trivial_group();
  a.system = std::move(ts);
  std::vector<int> id(static_cast<std::size_t>(a.system.size()));
  for (int i = 0; i < a.system.size(); ++i) id[static_cast<std::size_t>(i)] = i;
  a.act = {id};
  return a;
}

inline GroupAction c2_identity_action(TensorSystem ts) {
  GroupAction a;
  a.group = cyclic2();
  a.system = std::move(ts);
  std::vector<int> id(static_cast<std::size_t>(a.system.size()));
  for (int i = 0; i < a.system.size(); ++i) id[static_cast<std::size_t>(i)] = i;
  a.act = {id, id};
  return a;
}

// The order-two symmetry of MATRIX2 swapping the idempotents.
inline GroupAction c2_swap_matrix2() {
  GroupAction a;
  a.group = cyclic2();
  a.system = matrix2();
  a.act = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  return a;
}

// Swapping the orthogonal idempotents of FREEPAIR (non-additive base).
inline GroupAction c2_swap_freepair() {
  GroupAction a;
  a.group = cyclic2();
  a.system = freepair();
  a.act = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  return a;
}

}  // namespace stoneworks::fixtures
