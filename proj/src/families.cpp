#include "fibcordial/families.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fibcordial/errors.hpp"

namespace fibcordial {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterOutOfRange(what);
}

// 1-based cyclic successor.
int next_on_cycle(int i, int n, int step = 1) { return (i - 1 + step) % n + 1; }

}  // namespace

Graph build_gp(int n, int k) {
  require(n >= 3, "gp: n must be >= 3");
  require(k >= 1 && k <= (n - 1) / 2, "gp: k must satisfy 1 <= k <= floor((n-1)/2)");
  std::vector<VertexId> vs;
  for (int i = 1; i <= n; ++i) vs.push_back({Role::outer, i});
  for (int i = 1; i <= n; ++i) vs.push_back({Role::inner, i});
  const auto outer = [](int i) { return static_cast<std::size_t>(i - 1); };
  const auto inner = [n](int i) { return static_cast<std::size_t>(n + i - 1); };
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) es.emplace_back(outer(i), outer(next_on_cycle(i, n, k)));
  for (int i = 1; i <= n; ++i) es.emplace_back(outer(i), inner(i));
  for (int i = 1; i <= n; ++i) es.emplace_back(inner(i), inner(next_on_cycle(i, n)));
  return Graph(FamilySpec{.kind = FamilyKind::gp, .n = n, .k = k}, std::move(vs), std::move(es));
}

namespace {

Graph helm_like(int n, bool closed) {
  require(n >= 3, std::string(closed ? "closed_helm" : "helm") + ": n must be >= 3");
  std::vector<VertexId> vs{{Role::apex, 0}};
  for (int i = 1; i <= n; ++i) vs.push_back({Role::rim, i});
  for (int i = 1; i <= n; ++i) vs.push_back({Role::pendant, i});
  const auto rim = [](int i) { return static_cast<std::size_t>(i); };
  const auto pendant = [n](int i) { return static_cast<std::size_t>(n + i); };
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) es.emplace_back(0, rim(i));
  for (int i = 1; i <= n; ++i) es.emplace_back(rim(i), rim(next_on_cycle(i, n)));
  for (int i = 1; i <= n; ++i) es.emplace_back(rim(i), pendant(i));
  if (closed)
    for (int i = 1; i <= n; ++i) es.emplace_back(pendant(i), pendant(next_on_cycle(i, n)));
  FamilySpec spec{.kind = closed ? FamilyKind::closed_helm : FamilyKind::helm, .n = n};
  return Graph(std::move(spec), std::move(vs), std::move(es));
}

}  // namespace

Graph build_helm(int n) { return helm_like(n, false); }
Graph build_closed_helm(int n) { return helm_like(n, true); }

Graph build_cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) vs.push_back({Role::cycle, i});
  for (int i = 1; i <= n; ++i)
    es.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i % n));
  return Graph(FamilySpec{.kind = FamilyKind::cycle, .n = n}, std::move(vs), std::move(es));
}

Graph build_path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) vs.push_back({Role::path, i});
  for (int i = 1; i < n; ++i)
    es.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
  return Graph(FamilySpec{.kind = FamilyKind::path, .n = n}, std::move(vs), std::move(es));
}

Graph build_fan(int m) {
  require(m >= 2, "fan: m must be >= 2");
  std::vector<VertexId> vs{{Role::apex, 0}};
  std::vector<Edge> es;
  for (int j = 1; j <= m; ++j) vs.push_back({Role::rim, j});
  for (int j = 1; j <= m; ++j) es.emplace_back(0, static_cast<std::size_t>(j));
  for (int j = 1; j < m; ++j)
    es.emplace_back(static_cast<std::size_t>(j), static_cast<std::size_t>(j + 1));
  return Graph(FamilySpec{.kind = FamilyKind::fan, .m = m}, std::move(vs), std::move(es));
}

Graph build_complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) vs.push_back({Role::plain, i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      es.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return Graph(FamilySpec{.kind = FamilyKind::complete, .n = n}, std::move(vs), std::move(es));
}

Graph joint_sum(const Graph& g1, const VertexId& a1, const Graph& g2, const VertexId& a2) {
  const auto left_anchor = g1.position(a1);
  if (!left_anchor) throw AnchorNotFound("joint_sum: left anchor " + a1.to_string() + " not found");
  const auto right_anchor = g2.position(a2);
  if (!right_anchor) throw AnchorNotFound("joint_sum: right anchor " + a2.to_string() + " not found");

  std::map<Role, int> left_max;
  for (const auto& v : g1.vertices()) left_max[v.role] = std::max(left_max[v.role], v.index);
  std::map<Role, int> shift;
  for (const auto& v : g2.vertices())
    if (g1.contains(v)) shift[v.role] = left_max[v.role];

  std::vector<VertexId> vs = g1.vertices();
  for (auto v : g2.vertices()) {
    if (auto it = shift.find(v.role); it != shift.end()) v.index += it->second;
    vs.push_back(v);
  }
  const std::size_t offset = g1.vertex_count();
  std::vector<Edge> es = g1.edges();
  for (const auto& [a, b] : g2.edges()) es.emplace_back(a + offset, b + offset);
  es.emplace_back(*left_anchor, *right_anchor + offset);

  FamilySpec spec{.kind = FamilyKind::joint_sum,
                  .parts = {g1.family(), g2.family()},
                  .anchor_left = a1,
                  .anchor_right = a2};
  return Graph(std::move(spec), std::move(vs), std::move(es));
}

std::vector<int> normalize_connection_set(int n, const std::vector<int>& s) {
  require(n >= 3, "circulant: n must be >= 3");
  std::vector<int> out;
  for (int raw : s) {
    const int r = ((raw % n) + n) % n;
    require(r != 0, "circulant: connection element " + std::to_string(raw) + " is 0 mod n");
    out.push_back(std::min(r, n - r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  require(!out.empty(), "circulant: connection set is empty");
  return out;
}

Graph build_circulant(int n, const std::vector<int>& s) {
  const auto conn = normalize_connection_set(n, s);
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) vs.push_back({Role::plain, i});
  for (int step : conn) {
    const bool diameter = 2 * step == n;
    for (int u = 0; u < (diameter ? n / 2 : n); ++u)
      es.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>((u + step) % n));
  }
  return Graph(FamilySpec{.kind = FamilyKind::circulant, .n = n, .connection = conn},
               std::move(vs), std::move(es));
}

Graph build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::gp: return build_gp(spec.n, spec.k);
    case FamilyKind::helm: return build_helm(spec.n);
    case FamilyKind::closed_helm: return build_closed_helm(spec.n);
    case FamilyKind::cycle: return build_cycle(spec.n);
    case FamilyKind::path: return build_path(spec.n);
    case FamilyKind::fan: return build_fan(spec.m);
    case FamilyKind::complete: return build_complete(spec.n);
    case FamilyKind::circulant: return build_circulant(spec.n, spec.connection);
    case FamilyKind::joint_sum: {
      require(spec.parts.size() == 2 && spec.anchor_left && spec.anchor_right,
              "joint_sum: needs two parts and both anchors");
      return joint_sum(build(spec.parts[0]), *spec.anchor_left, build(spec.parts[1]),
                       *spec.anchor_right);
    }
  }
  throw ParameterOutOfRange("unknown family");
}

}  // namespace fibcordial
