#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stoneworks {

// Element subsets are 64-bit masks; every carrier in this library is capped
// at 64 elements (desk scale).
using Mask = std::uint64_t;

inline constexpr int max_elements = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr bool has(Mask m, int i) { return (m >> i) & 1; }

inline constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline constexpr int count(Mask m) { return std::popcount(m); }

// Full mask on n elements (n may be 0).
inline constexpr Mask full_mask(int n) {
  return n >= max_elements ? ~Mask{0} : (Mask{1} << n) - 1;
}

template <class Fn>
void for_each_bit(Mask m, Fn fn) {
  while (m != 0) {
    int i = std::countr_zero(m);
    fn(i);
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

// Enumerates all closed sets of a closure operator on {0..n-1} in lectic
// order (Ganter's next-closure). `cl` must be extensive, monotone and
// idempotent; the enumeration is deterministic.
inline std::vector<Mask> next_closure(int n, const std::function<Mask(Mask)>& cl) {
  std::vector<Mask> out;
  Mask a = cl(0);
  out.push_back(a);
  for (;;) {
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (has(a, i)) continue;
      Mask low = full_mask(i);
      Mask b = cl((a & low) | bit(i));
      if (subset(b & low, a)) {
        a = b;
        out.push_back(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

// Canonical "{x,y}" rendering of a subset, members in carrier order.
inline std::string mask_name(Mask m, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) out += ",";
    out += names[static_cast<std::size_t>(i)];
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace stoneworks
