#pragma once

#include <bit>
#include <cstdint>

namespace wrd::detail {

// Deterministic preference between two subsets given as bitmasks: smaller
// cardinality first, then the lexicographically smaller sorted member list.
inline bool subset_preferred(std::uint64_t a, std::uint64_t b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  std::uint64_t diff = a ^ b;
  if (!diff) return false;
  // With equal cardinality the set holding the lowest differing vertex wins.
  return (a & diff & (~diff + 1)) != 0;
}

}  // namespace wrd::detail
