#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibcordial/fib.hpp"
#include "fibcordial/graph.hpp"
#include "fibcordial/verifier.hpp"

namespace fibcordial {

/// Which vertices carry even-parity labels. Edge labels depend on nothing else.
struct ParityPattern {
  std::vector<bool> even;  // positional, aligned with Graph::vertices()

  static ParityPattern all_odd(std::size_t vertex_count) {
    return ParityPattern{std::vector<bool>(vertex_count, false)};
  }
  std::size_t even_count() const noexcept;
  bool operator==(const ParityPattern&) const = default;
};

/// Pattern of a labeling; unlabeled vertices count as odd.
ParityPattern parity_of(const Labeling& l);

/// |even_set| <= even_capacity and |V| - |even_set| <= odd_capacity.
bool capacity_feasible(const ParityPattern& p, const LabelPool& pool) noexcept;

/// Edges with exactly one endpoint in the even set (= epsilon1 of any realization).
std::size_t cut_size(const Graph& g, const ParityPattern& p);

/// | |E| - 2 cut | <= 1.
constexpr bool balanced_cut(std::size_t edges, std::size_t cut) noexcept {
  const auto twice = 2 * cut;
  return (twice >= edges ? twice - edges : edges - twice) <= 1;
}

inline constexpr std::size_t kDefaultExhaustiveLimit = 24;
inline constexpr std::size_t kMaxExhaustiveLimit = 63;

/// FIBCORDIAL_EXHAUSTIVE_LIMIT if set and valid, otherwise the default.
std::size_t exhaustive_limit_from_env();

struct ExhaustiveOptions {
  std::size_t limit = kDefaultExhaustiveLimit;
  bool parallel = true;
};

/// First balanced, capacity-feasible pattern in the fixed order (even-set size
/// ascending, then subset bitmask ascending), or nullopt if none exists.
/// Throws SizeLimitExceeded when |V| > options.limit.
std::optional<ParityPattern> exhaustive_exists(const Graph& g, const LabelPool& pool,
                                               const ExhaustiveOptions& options = {});

namespace kernels {

/// Bitmask adjacency for graphs with at most 64 vertices.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

/// Smallest mask (in increasing numeric order) among subsets of exactly
/// `size` vertices whose cut is balanced. Serial reference implementation.
std::optional<std::uint64_t> first_balanced_subset_serial(const std::vector<std::uint64_t>& adj,
                                                          std::size_t edge_count,
                                                          unsigned size);

/// OpenMP version of the above. Subsets are split into blocks by their two
/// highest set bits and the minimal witness is kept, so it returns the same mask.
std::optional<std::uint64_t> first_balanced_subset_parallel(const std::vector<std::uint64_t>& adj,
                                                            std::size_t edge_count,
                                                            unsigned size);

}  // namespace kernels

struct AnnealResult {
  std::optional<ParityPattern> pattern;
  std::uint64_t moves = 0;
};

/// Simulated annealing over single-vertex parity flips. Capacity is a hard
/// constraint; the objective is the distance of the cut from the balanced
/// window. A seed outside the capacity window is first projected into it.
/// Deterministic for a given rng_seed.
AnnealResult anneal_repair(const Graph& g, const LabelPool& pool, const ParityPattern& seed_pattern,
                           std::uint64_t rng_seed, std::uint64_t budget);

/// Even-set vertices take unused multiples of 3 ascending, the rest take the
/// remaining subscripts ascending. Throws CapacityViolation if infeasible.
Labeling concretize(const Graph& g, const ParityPattern& p, const LabelPool& pool);

/// Proof that no labeling exists. `even_degree_mod4` is the analytic
/// certificate; `exhaustive` records a complete negative search;
/// `complete_count` is the K_n argument (the pattern is fixed by its even count).
struct ObstructionCertificate {
  enum class Kind { even_degree_mod4, exhaustive, complete_count };
  Kind kind = Kind::even_degree_mod4;
  bool all_degrees_even = true;
  unsigned edge_count_mod4 = 2;
  std::size_t edge_count = 0;
  std::string conclusion;
};

/// Issued iff every degree is even and |E| = 2 (mod 4). With even degrees a
/// single parity flip moves epsilon1 by an even amount, so epsilon1 is always
/// even and epsilon0 - epsilon1 = |E| (mod 4); |E| = 2 (mod 4) then forces
/// |epsilon0 - epsilon1| >= 2.
std::optional<ObstructionCertificate> even_degree_obstruction(const Graph& g);

/// |E| mod 4 for graphs whose degrees are all even. Throws
/// std::invalid_argument if some degree is odd.
unsigned epsilon_mod4_class(const Graph& g);

/// Analytic: K_n admits a labeling iff some even count k in the capacity
/// window gives | n(n-1)/2 - 2k(n-k) | <= 1.
bool complete_graph_feasible(int n);

/// Smallest even count k achieving the above, if any.
std::optional<std::size_t> complete_graph_even_count(int n);

/// Complete-graph orders reported in the literature as the Fibonacci cordial ones.
const std::vector<int>& cited_complete_graph_exceptions();

}  // namespace fibcordial
