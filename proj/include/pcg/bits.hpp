#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "pcg/error.hpp"

namespace pcg {

// Qubit subsets as bitmasks: bit (k-1) holds qubit k. Qubit indices are
// 1-based on every external surface.
using QubitSet = std::uint32_t;

// Structural limit of the mask representation; the practical limits are much
// lower and enforced by per-operation guards.
inline constexpr int kMaxQubits = 30;

constexpr QubitSet qubit_bit(int qubit) { return QubitSet{1} << (qubit - 1); }

constexpr bool contains(QubitSet set, int qubit) {
  return (set >> (qubit - 1)) & 1u;
}

inline int set_size(QubitSet set) { return std::popcount(set); }

inline bool odd_parity(QubitSet set) { return std::popcount(set) & 1; }

inline QubitSet full_set(int n) {
  if (n < 0 || n > kMaxQubits) throw PcgError("qubit count out of range");
  return n == 0 ? 0 : (QubitSet{1} << n) - 1;
}

inline std::vector<int> set_to_indices(QubitSet set) {
  std::vector<int> out;
  out.reserve(set_size(set));
  for (int q = 1; set != 0; ++q, set >>= 1) {
    if (set & 1u) out.push_back(q);
  }
  return out;
}

// Ascending-index-list lexicographic order: {} < {1,2} < {1,2,3} < {1,3} < {2}.
inline bool support_lex_less(QubitSet a, QubitSet b) {
  const std::vector<int> va = set_to_indices(a);
  const std::vector<int> vb = set_to_indices(b);
  return va < vb;
}

// Maps ordinal 0..2^n-1 to a mask with qubit 1 as the most significant digit,
// so ascending ordinals enumerate bitstrings in lexicographic order.
inline QubitSet mask_from_ordinal(std::uint32_t ordinal, int n) {
  QubitSet mask = 0;
  for (int q = 1; q <= n; ++q) {
    if ((ordinal >> (n - q)) & 1u) mask |= qubit_bit(q);
  }
  return mask;
}

}  // namespace pcg
