#pragma once

// Reference implementations for tests. Nothing here calls the oracle or the
// verifier: parity comes from the Fibonacci values themselves.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fibcordial/families.hpp"
#include "fibcordial/graph.hpp"

namespace fibtest {

// F_i mod 2 by iterating the recurrence on residues.
inline bool fib_value_odd(unsigned i) {
  unsigned a = 0, b = 1;  // F_0, F_1 mod 2
  for (unsigned s = 0; s < i; ++s) {
    const unsigned c = (a + b) & 1u;
    a = b;
    b = c;
  }
  return a == 1;
}

struct BruteResult {
  bool exists = false;
  std::vector<unsigned> witness;  // subscript per vertex position
  std::size_t labelings_checked = 0;
};

// Enumerates every injective map V -> {0..|V|} (drop one index, permute the
// rest) and stops at the first one with |eps0 - eps1| <= 1.
inline BruteResult brute_force_cordial(const fibcordial::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> odd(n + 1);
  for (unsigned i = 0; i <= n; ++i) odd[i] = fib_value_odd(i);
  BruteResult res;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<unsigned> idx;
    for (unsigned i = 0; i <= n; ++i)
      if (i != skip) idx.push_back(i);
    do {
      ++res.labelings_checked;
      long ones = 0;
      for (const auto& [a, b] : g.edges()) ones += odd[idx[a]] != odd[idx[b]];
      const long zeros = static_cast<long>(g.edge_count()) - ones;
      if (std::labs(zeros - ones) <= 1) {
        res.exists = true;
        res.witness = idx;
        return res;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return res;
}

// Every graph the builders can produce with at most `max_vertices` vertices.
inline std::vector<fibcordial::Graph> small_corpus(std::size_t max_vertices = 8) {
  using namespace fibcordial;
  std::vector<Graph> out;
  const auto keep = [&](Graph g) {
    if (g.vertex_count() <= max_vertices) out.push_back(std::move(g));
  };
  const int cap = static_cast<int>(max_vertices);
  for (int n = 3; 2 * n <= cap; ++n)
    for (int k = 1; k <= (n - 1) / 2; ++k) keep(build_gp(n, k));
  for (int n = 3; 2 * n + 1 <= cap; ++n) {
    keep(build_helm(n));
    keep(build_closed_helm(n));
  }
  for (int n = 3; n <= cap; ++n) keep(build_cycle(n));
  for (int n = 1; n <= cap; ++n) keep(build_path(n));
  for (int m = 2; m + 1 <= cap; ++m) keep(build_fan(m));
  for (int n = 1; n <= cap; ++n) keep(build_complete(n));
  for (int n = 3; n <= cap; ++n) {
    // every connection set drawn from 1..n/2
    const int half = n / 2;
    for (int mask = 1; mask < (1 << half); ++mask) {
      std::vector<int> s;
      for (int b = 0; b < half; ++b)
        if (mask & (1 << b)) s.push_back(b + 1);
      keep(build_circulant(n, s));
    }
  }
  for (int m = 3; m <= cap; ++m)
    for (int n = 1; m + n <= cap; ++n)
      keep(joint_sum(build_cycle(m), {Role::cycle, m}, build_path(n), {Role::path, 1}));
  for (int m = 2; m + 1 <= cap; ++m)
    for (int n = 1; m + 1 + n <= cap; ++n)
      keep(joint_sum(build_fan(m), {Role::apex, 0}, build_path(n), {Role::path, 1}));
  return out;
}

}  // namespace fibtest
