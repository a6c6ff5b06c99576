#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

// Subset of {1,...,n} stored as a bitmask; bit (i-1) set means i is a member.
using IndexSet = std::uint32_t;

inline IndexSet full_set(int n) { return (IndexSet{1} << n) - 1; }
inline IndexSet range_set(int lo, int hi) {  // {lo,...,hi}, empty if hi < lo
  if (hi < lo) return 0;
  return (full_set(hi)) & ~full_set(lo - 1);
}
inline IndexSet singleton(int i) { return IndexSet{1} << (i - 1); }
inline bool contains(IndexSet s, int i) { return (s >> (i - 1)) & 1; }
inline int set_size(IndexSet s) { return std::popcount(s); }

inline std::vector<int> set_elements(IndexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline std::string set_to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : set_elements(s)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// Canonically ordered product of Clifford generators e_{i1}...e_{im} with
// i1 < ... < im, encoded by the index subset. The empty set is the unit.
// Generators obey {e_i, e_j} = -2 delta_ij, i.e. e_i^2 = -1.
struct Blade {
  IndexSet bits = 0;

  friend bool operator==(const Blade&, const Blade&) = default;
  friend auto operator<=>(const Blade&, const Blade&) = default;

  int grade() const { return std::popcount(bits); }

  std::string to_string() const {
    if (bits == 0) return "1";
    std::string out;
    for (int i : set_elements(bits)) out += "e" + std::to_string(i);
    return out;
  }
};

inline Blade unit_blade() { return Blade{0}; }
inline Blade generator(int i) { return Blade{singleton(i)}; }

// Product of two blades in canonical form. The sign accumulates one
// transposition per out-of-order generator pair and one factor -1 per
// contracted index (negative signature).
inline std::pair<int, Blade> blade_mul(Blade a, Blade b) {
  int swaps = 0;
  IndexSet a_high = a.bits >> 1;
  while (a_high) {
    swaps += std::popcount(a_high & b.bits);
    a_high >>= 1;
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  if (std::popcount(a.bits & b.bits) % 2 == 1) sign = -sign;
  return {sign, Blade{a.bits ^ b.bits}};
}

}  // namespace dunkl
