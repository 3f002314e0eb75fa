#include <cstdlib>
#include <random>

#include <doctest.h>

#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"
#include "fibcordial/oracle.hpp"
#include "fibcordial/verifier.hpp"
#include "support/brute.hpp"

using namespace fibcordial;

TEST_CASE("cut_size and balanced_cut") {
  const auto g = build_cycle(6);
  ParityPattern p = ParityPattern::all_odd(6);
  CHECK(cut_size(g, p) == 0);
  p.even[0] = true;
  CHECK(cut_size(g, p) == 2);
  p.even[3] = true;
  CHECK(cut_size(g, p) == 4);
  CHECK(balanced_cut(18, 9));
  CHECK(balanced_cut(31, 15));
  CHECK(balanced_cut(31, 16));
  CHECK_FALSE(balanced_cut(31, 14));
}

TEST_CASE("capacity window") {
  const auto pool = pool_for(8);  // evens 0,3,6 -> capacity 3
  ParityPattern p = ParityPattern::all_odd(8);
  CHECK_FALSE(capacity_feasible(p, pool));  // 8 odd vertices, only 6 odd labels
  p.even[0] = p.even[1] = true;
  CHECK(capacity_feasible(p, pool));
  p.even[2] = true;
  CHECK(capacity_feasible(p, pool));
  p.even[3] = true;
  CHECK_FALSE(capacity_feasible(p, pool));
}

TEST_CASE("exhaustive search agrees with brute force on small graphs") {
  for (const auto& g : fibtest::small_corpus(7)) {
    CAPTURE(g.family().describe());
    const auto brute = fibtest::brute_force_cordial(g);
    const auto pool = Labeling::pool_for_graph(g);
    const auto serial = exhaustive_exists(g, pool, ExhaustiveOptions{24, false});
    const auto parallel = exhaustive_exists(g, pool, ExhaustiveOptions{24, true});
    CHECK(serial.has_value() == brute.exists);
    CHECK(parallel.has_value() == brute.exists);
    if (serial && parallel) {
      CHECK(serial->even == parallel->even);
      const auto l = concretize(g, *serial, pool);
      CHECK(verify(g, l).verdict == Verdict::cordial);
    }
  }
}

TEST_CASE("serial and parallel kernels return the same first subset") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 10 + trial % 12;
    std::vector<int> s{1};
    if (trial % 2) s.push_back(3);
    if (trial % 3 == 0) s.push_back(2);
    const auto g = build_circulant(n, s);
    const auto adj = kernels::adjacency_masks(g);
    for (unsigned size = 1; size <= unsigned(n) / 2; ++size) {
      CAPTURE(n);
      CAPTURE(size);
      CHECK(kernels::first_balanced_subset_serial(adj, g.edge_count(), size) ==
            kernels::first_balanced_subset_parallel(adj, g.edge_count(), size));
    }
  }
}

TEST_CASE("exhaustive search respects the size limit") {
  const auto g = build_gp(13, 1);  // 26 vertices
  CHECK_THROWS_AS(exhaustive_exists(g, Labeling::pool_for_graph(g), ExhaustiveOptions{24, true}),
                  SizeLimitExceeded);
}

TEST_CASE("limit from the environment") {
  ::setenv("FIBCORDIAL_EXHAUSTIVE_LIMIT", "30", 1);
  CHECK(exhaustive_limit_from_env() == 30);
  ::setenv("FIBCORDIAL_EXHAUSTIVE_LIMIT", "63", 1);
  CHECK(exhaustive_limit_from_env() == kMaxExhaustiveLimit);
  ::setenv("FIBCORDIAL_EXHAUSTIVE_LIMIT", "64", 1);
  CHECK(exhaustive_limit_from_env() == kDefaultExhaustiveLimit);
  ::setenv("FIBCORDIAL_EXHAUSTIVE_LIMIT", "junk", 1);
  CHECK(exhaustive_limit_from_env() == kDefaultExhaustiveLimit);
  ::unsetenv("FIBCORDIAL_EXHAUSTIVE_LIMIT");
  CHECK(exhaustive_limit_from_env() == kDefaultExhaustiveLimit);
}

TEST_CASE("annealing repairs unbalanced seeds") {
  for (int n : {30, 60, 120}) {
    const auto g = build_gp(n, 1);
    const auto pool = Labeling::pool_for_graph(g);
    const auto res = anneal_repair(g, pool, ParityPattern::all_odd(g.vertex_count()), 3, 400000);
    REQUIRE(res.pattern.has_value());
    CHECK(capacity_feasible(*res.pattern, pool));
    CHECK(balanced_cut(g.edge_count(), cut_size(g, *res.pattern)));
  }
}

TEST_CASE("annealing is deterministic for a seed") {
  const auto g = build_closed_helm(40);
  const auto pool = Labeling::pool_for_graph(g);
  const auto a = anneal_repair(g, pool, ParityPattern::all_odd(g.vertex_count()), 11, 200000);
  const auto b = anneal_repair(g, pool, ParityPattern::all_odd(g.vertex_count()), 11, 200000);
  REQUIRE(a.pattern.has_value());
  CHECK(a.pattern->even == b.pattern->even);
  CHECK(a.moves == b.moves);
}

TEST_CASE("annealing cannot move when the capacity window is a single count") {
  // |V| = 3: pool {F_0..F_3}, evens {0,3}: window [0,2] -> fine; |V| = 2:
  // pool {F_0,F_1,F_2}, even capacity 1, odd capacity 2 -> window [0,1].
  // K_5 has 10 edges (all degrees even, obstruction) so it never balances.
  const auto g = build_complete(5);
  const auto res = anneal_repair(g, Labeling::pool_for_graph(g), ParityPattern::all_odd(5), 1, 10000);
  CHECK_FALSE(res.pattern.has_value());
}

TEST_CASE("concretize") {
  const auto g = build_cycle(8);
  ParityPattern p = ParityPattern::all_odd(8);
  p.even[0] = p.even[4] = true;
  const auto pool = Labeling::pool_for_graph(g);
  const auto l = concretize(g, p, pool);
  const auto r = verify(g, l);
  CHECK(r.injective);
  CHECK(r.within_pool);
  CHECK(r.epsilon1 == cut_size(g, p));
  CHECK(l.index[0]->value == 0);
  CHECK(l.index[4]->value == 3);
  CHECK(l.index[1]->value == 1);
}

TEST_CASE("even-degree obstruction") {
  // C_6: degrees 2, |E| = 6 = 2 (mod 4)
  const auto c6 = even_degree_obstruction(build_cycle(6));
  REQUIRE(c6.has_value());
  CHECK(c6->edge_count == 6);
  CHECK(c6->edge_count_mod4 == 2);
  CHECK_FALSE(even_degree_obstruction(build_cycle(8)).has_value());
  CHECK_FALSE(even_degree_obstruction(build_gp(5, 1)).has_value());  // odd degrees
  CHECK(even_degree_obstruction(build_circulant(5, {1, 2})).has_value());
  // certificate implies no labeling, checked by enumeration
  for (const auto& g : fibtest::small_corpus(7))
    if (even_degree_obstruction(g)) CHECK_FALSE(fibtest::brute_force_cordial(g).exists);
}

TEST_CASE("epsilon mod 4 class") {
  CHECK(epsilon_mod4_class(build_cycle(6)) == 2);
  CHECK(epsilon_mod4_class(build_circulant(9, {1, 2, 3})) == 3);
  CHECK_THROWS_AS(epsilon_mod4_class(build_gp(5, 1)), std::invalid_argument);
}

TEST_CASE("complete graphs: analytic feasibility agrees with enumeration") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(complete_graph_feasible(n) == fibtest::brute_force_cordial(build_complete(n)).exists);
  }
  for (int n = 9; n <= 20; ++n) {
    CAPTURE(n);
    const auto g = build_complete(n);
    CHECK(complete_graph_feasible(n) == exhaustive_exists(g, Labeling::pool_for_graph(g)).has_value());
  }
  CHECK(complete_graph_feasible(14));
  CHECK(complete_graph_feasible(16));
  CHECK_FALSE(complete_graph_feasible(22));
  CHECK(cited_complete_graph_exceptions() == std::vector<int>{4, 6, 7, 9, 11, 18, 22});
}
