#include <algorithm>
#include <string>

#include <doctest.h>

#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"
#include "fibcordial/io.hpp"
#include "fibcordial/sweep.hpp"

using namespace fibcordial;
using io::json;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string schema_path(const json& j) {
  try {
    io::graph_from_json(j);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "";
}

}  // namespace

TEST_CASE("graph json round trip") {
  const Graph graphs[] = {build_gp(7, 2), build_helm(5), build_circulant(9, {1, 4}),
                          joint_sum(build_cycle(5), {Role::cycle, 1}, build_path(4), {Role::path, 1}),
                          build_fan(4)};
  for (const auto& g : graphs) {
    const auto text = io::graph_to_json(g).dump();
    CHECK(io::graph_from_json(json::parse(text)) == g);
  }
}

TEST_CASE("labeling json round trip") {
  auto fig = figure_labeling(Figure::fig1_gp61);
  const auto j = io::labeling_to_json(fig.graph, fig.labeling);
  CHECK(j["pool_max"] == 12);
  CHECK(j["assignment"].size() == 12);
  CHECK(io::labeling_from_json(fig.graph, j) == fig.labeling);

  Labeling partial = fig.labeling;
  partial.index[3].reset();
  const auto back = io::labeling_from_json(fig.graph, io::labeling_to_json(fig.graph, partial));
  CHECK_FALSE(back.index[3].has_value());
  CHECK(verify(fig.graph, back).verdict == Verdict::invalid);
}

TEST_CASE("schema errors carry a path") {
  json j = io::graph_to_json(build_cycle(4));
  json bad = j;
  bad["edges"][3][1] = "cycle:9";
  CHECK(schema_path(bad) == "$.edges[3][1]");
  bad = j;
  bad["edges"][1] = json::array({"cycle:1"});
  CHECK(schema_path(bad) == "$.edges[1]");
  bad = j;
  bad["vertices"][0]["role"] = "hub";
  CHECK(schema_path(bad) == "$.vertices[0].role");
  bad = j;
  bad.erase("edges");
  CHECK(schema_path(bad) == "$.edges");
  bad = j;
  bad["family"]["kind"] = "tree";
  CHECK(schema_path(bad) == "$.family.kind");

  const auto g = build_cycle(4);
  json l = io::labeling_to_json(g, Labeling::empty_for(g));
  l["assignment"]["cycle:7"] = 1;
  try {
    io::labeling_from_json(g, l);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "$.assignment[\"cycle:7\"]");
  }
  l = io::labeling_to_json(g, Labeling::empty_for(g));
  l["pool_max"] = -1;
  CHECK_THROWS_AS(io::labeling_from_json(g, l), SchemaError);
}

TEST_CASE("dot export") {
  auto circ = figure_labeling(Figure::fig6_circ8);
  auto dot = io::to_dot(circ.graph, circ.labeling);
  CHECK(count(dot, "[style=solid]") == 8);
  CHECK(count(dot, "[style=dashed]") == 8);
  CHECK(dot == io::to_dot(circ.graph, circ.labeling));

  auto helm = figure_labeling(Figure::fig2_h4);
  dot = io::to_dot(helm.graph, helm.labeling);
  CHECK(count(dot, " -- ") == 12);
  CHECK(count(dot, "[style=solid]") == 6);

  // all labels odd: every edge dashed
  const auto p = build_path(3);
  Labeling mono = Labeling::empty_for(p);
  mono.index = {FibIndex{1}, FibIndex{2}, FibIndex{4}};
  dot = io::to_dot(p, mono);
  CHECK(count(dot, "[style=solid]") == 0);
  CHECK(count(dot, "[style=dashed]") == 2);
  CHECK(count(dot, "grey80") == 0);

  mono.index[1].reset();
  dot = io::to_dot(p, mono);
  CHECK(count(dot, "fillcolor=red") == 1);
}

TEST_CASE("sweep: parallel output matches serial") {
  using namespace fibcordial::sweep;
  std::vector<Instance> insts;
  for (Family f : {Family::gp1, Family::closed_helm, Family::circulant12, Family::circulant123}) {
    auto part = instances(f, f == Family::circulant123 ? 6 : 4, 40);
    insts.insert(insts.end(), part.begin(), part.end());
  }
  auto part = instances(Family::fan_path, 2, 8, 1, 8);
  insts.insert(insts.end(), part.begin(), part.end());

  const auto a = run(insts, {});
  const auto b = run_serial(insts, {});
  CHECK(to_csv(a.rows) == to_csv(b.rows));
  CHECK(to_jsonl(a.discrepancies) == to_jsonl(b.discrepancies));
  CHECK(to_json(a.rows) == to_json(b.rows));

  const auto csv = to_csv(a.rows);
  CHECK(csv.rfind("family,parameters,vertices,edges,epsilon0,epsilon1,verdict,source,case_id,runtime_ms\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(a.rows.size() + 1));
}

TEST_CASE("sweep rows") {
  using namespace fibcordial::sweep;
  auto [row, rec] = run_instance({Family::circulant12, 7, 0}, {});
  CHECK(row.verdict == "not_cordial");
  CHECK(row.source == Source::obstruction);
  CHECK_FALSE(rec.has_value());

  std::tie(row, rec) = run_instance({Family::circulant12, 8, 0}, {});
  CHECK(row.verdict == "cordial");
  CHECK(row.source == Source::formula);

  std::tie(row, rec) = run_instance({Family::gp1, 6, 0}, {});
  CHECK(row.source == Source::formula_repaired);
  REQUIRE(rec.has_value());
  CHECK(rec->resolution == Resolution::repaired);
  CHECK(rec->instance == "gp1(n=6)");

  std::tie(row, rec) = run_instance({Family::fan_path, 10, 12}, {});
  CHECK(row.parameters == "m=10;n=12");

  CHECK_THROWS_AS(instances(Family::helm, 2, 5), ParameterOutOfRange);
}

TEST_CASE("complete graph claims") {
  const auto recs = sweep::complete_graph_claims(30);
  std::vector<std::string> names;
  for (const auto& r : recs) names.push_back(r.instance);
  CHECK(names == std::vector<std::string>{"complete(n=1)", "complete(n=2)", "complete(n=3)",
                                                "complete(n=14)", "complete(n=16)", "complete(n=22)"});
}
