#include <algorithm>
#include <string>

#include "fibcordial/errors.hpp"
#include "fibcordial/oracle.hpp"

namespace fibcordial {

namespace kernels {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > 64) throw SizeLimitExceeded("bitmask kernels support at most 64 vertices");
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  return adj;
}

}  // namespace kernels

std::optional<ParityPattern> exhaustive_exists(const Graph& g, const LabelPool& pool,
                                               const ExhaustiveOptions& options) {
  const std::size_t v = g.vertex_count();
  const std::size_t limit = std::min(options.limit, kMaxExhaustiveLimit);
  if (v > limit)
    throw SizeLimitExceeded("exhaustive search limited to " + std::to_string(limit) + " vertices, graph has " +
                            std::to_string(v));
  const auto adj = kernels::adjacency_masks(g);
  const std::size_t lo = v > pool.odd_capacity ? v - pool.odd_capacity : 0;
  const std::size_t hi = std::min<std::size_t>(pool.even_capacity, v);
  for (std::size_t k = lo; k <= hi; ++k) {
    const auto size = static_cast<unsigned>(k);
    const auto mask = options.parallel
                          ? kernels::first_balanced_subset_parallel(adj, g.edge_count(), size)
                          : kernels::first_balanced_subset_serial(adj, g.edge_count(), size);
    if (!mask) continue;
    ParityPattern p = ParityPattern::all_odd(v);
    for (std::size_t i = 0; i < v; ++i) p.even[i] = ((*mask >> i) & 1U) != 0;
    return p;
  }
  return std::nullopt;
}

}  // namespace fibcordial
