#include "fibcordial/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fibcordial/errors.hpp"

namespace fibcordial {

std::size_t ParityPattern::even_count() const noexcept {
  return static_cast<std::size_t>(std::count(even.begin(), even.end(), true));
}

ParityPattern parity_of(const Labeling& l) {
  ParityPattern p = ParityPattern::all_odd(l.index.size());
  for (std::size_t i = 0; i < l.index.size(); ++i)
    p.even[i] = l.index[i] && fib_parity(*l.index[i]) == Parity::even;
  return p;
}

bool capacity_feasible(const ParityPattern& p, const LabelPool& pool) noexcept {
  const auto evens = p.even_count();
  return evens <= pool.even_capacity && p.even.size() - evens <= pool.odd_capacity;
}

std::size_t cut_size(const Graph& g, const ParityPattern& p) {
  std::size_t cut = 0;
  for (const auto& [a, b] : g.edges())
    if (p.even.at(a) != p.even.at(b)) ++cut;
  return cut;
}

std::size_t exhaustive_limit_from_env() {
  const char* raw = std::getenv("FIBCORDIAL_EXHAUSTIVE_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultExhaustiveLimit;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0 || v > kMaxExhaustiveLimit) return kDefaultExhaustiveLimit;
  return static_cast<std::size_t>(v);
}

Labeling concretize(const Graph& g, const ParityPattern& p, const LabelPool& pool) {
  if (p.even.size() != g.vertex_count())
    throw std::invalid_argument("concretize: pattern size does not match graph");
  if (!capacity_feasible(p, pool))
    throw CapacityViolation("concretize: pattern needs " + std::to_string(p.even_count()) +
                            " even labels (capacity " + std::to_string(pool.even_capacity) + ") and " +
                            std::to_string(p.even.size() - p.even_count()) + " odd labels (capacity " +
                            std::to_string(pool.odd_capacity) + ")");
  Labeling l{pool, std::vector<std::optional<FibIndex>>(g.vertex_count())};
  std::uint32_t next_even = 0;
  std::uint32_t next_odd = 1;
  for (std::size_t i = 0; i < p.even.size(); ++i) {
    if (p.even[i]) {
      l.index[i] = FibIndex{next_even};
      next_even += 3;
    } else {
      l.index[i] = FibIndex{next_odd};
      next_odd += (next_odd % 3 == 2) ? 2 : 1;
    }
  }
  return l;
}

std::optional<ObstructionCertificate> even_degree_obstruction(const Graph& g) {
  if (!g.all_degrees_even() || g.edge_count() % 4 != 2) return std::nullopt;
  ObstructionCertificate c;
  c.all_degrees_even = true;
  c.edge_count_mod4 = 2;
  c.edge_count = g.edge_count();
  c.conclusion = "all degrees even and |E| = " + std::to_string(g.edge_count()) +
                 " = 2 (mod 4): epsilon1 is always even, so |epsilon0 - epsilon1| >= 2; "
                 "no Fibonacci cordial labeling exists";
  return c;
}

unsigned epsilon_mod4_class(const Graph& g) {
  if (!g.all_degrees_even())
    throw std::invalid_argument("epsilon_mod4_class: graph has a vertex of odd degree");
  return static_cast<unsigned>(g.edge_count() % 4);
}

bool complete_graph_feasible(int n) { return complete_graph_even_count(n).has_value(); }

std::optional<std::size_t> complete_graph_even_count(int n) {
  if (n < 1) throw ParameterOutOfRange("complete_graph_feasible: n must be >= 1");
  const auto pool = pool_for(static_cast<std::size_t>(n));
  const std::size_t vn = static_cast<std::size_t>(n);
  const std::size_t edges = vn * (vn - 1) / 2;
  const std::size_t lo = vn > pool.odd_capacity ? vn - pool.odd_capacity : 0;
  const std::size_t hi = std::min<std::size_t>(pool.even_capacity, vn);
  for (std::size_t k = lo; k <= hi; ++k)
    if (balanced_cut(edges, k * (vn - k))) return k;
  return std::nullopt;
}

const std::vector<int>& cited_complete_graph_exceptions() {
  static const std::vector<int> cited{4, 6, 7, 9, 11, 18, 22};
  return cited;
}

}  // namespace fibcordial
