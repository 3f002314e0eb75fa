#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "fibcordial/oracle.hpp"

namespace fibcordial::kernels::detail {

inline std::size_t cut_of(const std::vector<std::uint64_t>& adj, std::uint64_t subset) {
  std::size_t cut = 0;
  for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    cut += static_cast<std::size_t>(std::popcount(adj[static_cast<std::size_t>(v)] & ~subset));
  }
  return cut;
}

/// Next mask with the same popcount in increasing numeric order (Gosper's hack).
inline std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

inline std::uint64_t low_bits(unsigned count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

/// Scans masks of the given popcount from `first` while below `end`.
inline std::optional<std::uint64_t> scan(const std::vector<std::uint64_t>& adj, std::size_t edges,
                                         std::uint64_t first, std::uint64_t end) {
  for (std::uint64_t x = first; x < end; x = next_combination(x)) {
    if (balanced_cut(edges, cut_of(adj, x))) return x;
    if (x == 0) break;
  }
  return std::nullopt;
}

}  // namespace fibcordial::kernels::detail
