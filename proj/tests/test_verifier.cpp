#include <doctest.h>

#include "fibcordial/errors.hpp"
#include "fibcordial/constructions.hpp"
#include "fibcordial/families.hpp"
#include "fibcordial/verifier.hpp"
#include "support/brute.hpp"

using namespace fibcordial;

namespace {

// Edge counts straight from the values, no verifier involved.
std::pair<long, long> value_counts(const Graph& g, const Labeling& l) {
  long ones = 0;
  for (const auto& [a, b] : g.edges())
    ones += fibtest::fib_value_odd(l.index[a]->value) != fibtest::fib_value_odd(l.index[b]->value);
  return {static_cast<long>(g.edge_count()) - ones, ones};
}

}  // namespace

TEST_CASE("figure labelings: epsilon counts match the value-based count") {
  for (Figure f : kAllFigures) {
    const auto fig = figure_labeling(f);
    const auto r = verify(fig.graph, fig.labeling);
    const auto [zeros, ones] = value_counts(fig.graph, fig.labeling);
    CAPTURE(figure_name(f));
    CHECK(r.injective);
    CHECK(r.within_pool);
    CHECK(long(r.epsilon0) == zeros);
    CHECK(long(r.epsilon1) == ones);
  }
}

TEST_CASE("figure verdicts") {
  const auto check = [](Figure f, std::size_t e0, std::size_t e1, Verdict v) {
    const auto fig = figure_labeling(f);
    const auto r = verify(fig.graph, fig.labeling);
    CAPTURE(figure_name(f));
    CHECK(r.epsilon0 == e0);
    CHECK(r.epsilon1 == e1);
    CHECK(r.verdict == v);
  };
  check(Figure::fig1_gp61, 9, 9, Verdict::cordial);
  check(Figure::fig2_h4, 6, 6, Verdict::cordial);
  // The CH_14 drawing as printed has 26 of 56 edges labeled 1.
  check(Figure::fig3_ch14, 30, 26, Verdict::not_cordial);
  check(Figure::fig4_c10p10, 10, 10, Verdict::cordial);
  check(Figure::fig5_f10p12, 15, 16, Verdict::cordial);
  check(Figure::fig6_circ8, 8, 8, Verdict::cordial);
}

TEST_CASE("edge_label") {
  const auto fig = figure_labeling(Figure::fig6_circ8);
  // plain:0 = F_0 (even), plain:2 = F_1 (odd), plain:1 = F_3 (even)
  CHECK(edge_label(fig.graph, fig.labeling, {Role::plain, 0}, {Role::plain, 2}) == 1);
  CHECK(edge_label(fig.graph, fig.labeling, {Role::plain, 0}, {Role::plain, 1}) == 0);
  Labeling partial = Labeling::empty_for(fig.graph);
  CHECK_THROWS_AS(edge_label(fig.graph, partial, {Role::plain, 0}, {Role::plain, 1}), UnlabeledVertex);
}

TEST_CASE("F_1 and F_2 are distinct labels") {
  const auto g = build_path(2);
  Labeling l = Labeling::empty_for(g);
  l.set(g, {Role::path, 1}, FibIndex{1});
  l.set(g, {Role::path, 2}, FibIndex{2});
  const auto r = verify(g, l);
  CHECK(r.injective);
  CHECK(r.verdict == Verdict::cordial);
}

TEST_CASE("invalid labelings") {
  auto fig = figure_labeling(Figure::fig6_circ8);
  const auto& g = fig.graph;

  Labeling dup = fig.labeling;
  dup.set(g, {Role::plain, 1}, FibIndex{0});
  auto r = verify(g, dup);
  CHECK(r.verdict == Verdict::invalid);
  CHECK_FALSE(r.injective);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations[0].find("duplicate index") != std::string::npos);

  Labeling big = fig.labeling;
  big.set(g, {Role::plain, 7}, FibIndex{9});
  r = verify(g, big);
  CHECK(r.verdict == Verdict::invalid);
  CHECK_FALSE(r.within_pool);

  Labeling hole = fig.labeling;
  hole.index[3].reset();
  r = verify(g, hole);
  CHECK(r.verdict == Verdict::invalid);
}

TEST_CASE("epsilon sums to the edge count on valid labelings") {
  for (const auto& g : fibtest::small_corpus(7)) {
    Labeling l = Labeling::empty_for(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) l.index[i] = FibIndex{static_cast<std::uint32_t>(i)};
    const auto r = verify(g, l);
    CHECK(r.epsilon0 + r.epsilon1 == g.edge_count());
    CHECK(r.epsilon_tilde == (r.epsilon0 > r.epsilon1 ? r.epsilon0 - r.epsilon1 : r.epsilon1 - r.epsilon0));
  }
}
