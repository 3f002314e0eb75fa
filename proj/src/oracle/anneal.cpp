#include <algorithm>
#include <cmath>
#include <random>

#include "fibcordial/oracle.hpp"

namespace fibcordial {

namespace {

// Distance of a cut from the balanced window | |E| - 2 cut | <= 1.
long imbalance(std::size_t edges, std::size_t cut) {
  const long diff = static_cast<long>(edges) - 2 * static_cast<long>(cut);
  return std::max(0L, std::abs(diff) - 1);
}

// Vertex set with O(1) random pick, insert and erase.
class IndexedSet {
 public:
  explicit IndexedSet(std::size_t universe) : slot_(universe, kAbsent) {}
  void insert(std::size_t v) {
    slot_[v] = items_.size();
    items_.push_back(v);
  }
  void erase(std::size_t v) {
    const std::size_t s = slot_[v];
    items_[s] = items_.back();
    slot_[items_[s]] = s;
    items_.pop_back();
    slot_[v] = kAbsent;
  }
  std::size_t size() const noexcept { return items_.size(); }
  std::size_t at(std::size_t i) const { return items_[i]; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> items_;
  std::vector<std::size_t> slot_;
};

}  // namespace

AnnealResult anneal_repair(const Graph& g, const LabelPool& pool, const ParityPattern& seed_pattern,
                           std::uint64_t rng_seed, std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  const std::size_t edges = g.edge_count();
  const std::size_t lo = n > pool.odd_capacity ? n - pool.odd_capacity : 0;
  const std::size_t hi = std::min<std::size_t>(pool.even_capacity, n);
  if (lo > hi) return {};

  ParityPattern p = seed_pattern;
  p.even.resize(n, false);
  std::size_t count = p.even_count();
  for (std::size_t v = n; v-- > 0 && count > hi;)
    if (p.even[v]) p.even[v] = false, --count;
  for (std::size_t v = 0; v < n && count < lo; ++v)
    if (!p.even[v]) p.even[v] = true, ++count;

  const auto& adj = g.adjacency();
  std::vector<long> even_nbrs(n, 0);
  IndexedSet evens(n);
  IndexedSet odds(n);
  for (std::size_t v = 0; v < n; ++v) {
    (p.even[v] ? evens : odds).insert(v);
    for (auto w : adj[v])
      if (p.even[w]) ++even_nbrs[v];
  }
  std::size_t cut = cut_size(g, p);
  long energy = imbalance(edges, cut);
  if (energy == 0) return {p, 0};
  // With an exact-size window no single flip keeps capacity.
  if (n == 0 || lo == hi) return {std::nullopt, 0};

  std::mt19937_64 rng(rng_seed);
  const auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::size_t max_degree = 1;
  for (const auto& nbrs : adj) max_degree = std::max(max_degree, nbrs.size());
  const double t_start = static_cast<double>(max_degree);
  const double t_end = 0.05;
  const double cooling = budget > 1 ? std::pow(t_end / t_start, 1.0 / static_cast<double>(budget)) : 1.0;
  double temperature = t_start;

  for (std::uint64_t move = 1; move <= budget; ++move, temperature *= cooling) {
    bool add;
    if (count >= hi)
      add = false;
    else if (count <= lo)
      add = true;
    else
      add = (rng() & 1U) != 0;
    if (add ? odds.size() == 0 : evens.size() == 0) continue;
    const std::size_t v = add ? odds.at(rng() % odds.size()) : evens.at(rng() % evens.size());

    const long deg = static_cast<long>(adj[v].size());
    const long delta = add ? deg - 2 * even_nbrs[v] : 2 * even_nbrs[v] - deg;
    const auto new_cut = static_cast<std::size_t>(static_cast<long>(cut) + delta);
    const long new_energy = imbalance(edges, new_cut);
    if (new_energy > energy &&
        uniform01() >= std::exp(-static_cast<double>(new_energy - energy) / temperature))
      continue;

    p.even[v] = add;
    if (add) {
      odds.erase(v), evens.insert(v), ++count;
      for (auto w : adj[v]) ++even_nbrs[w];
    } else {
      evens.erase(v), odds.insert(v), --count;
      for (auto w : adj[v]) --even_nbrs[w];
    }
    cut = new_cut;
    energy = new_energy;
    if (energy == 0) return {p, move};
  }
  return {std::nullopt, budget};
}

}  // namespace fibcordial
