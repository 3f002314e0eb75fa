#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibcordial {

enum class Role { apex, rim, pendant, outer, inner, cycle, path, plain };

std::string_view role_name(Role r) noexcept;
std::optional<Role> role_from_name(std::string_view name) noexcept;

/// Stable vertex name. Serialized as "role:index", e.g. "outer:3".
struct VertexId {
  Role role = Role::plain;
  int index = 0;

  auto operator<=>(const VertexId&) const = default;

  std::string to_string() const;
  /// Parses "role:index"; nullopt on any syntax error.
  static std::optional<VertexId> parse(std::string_view text);
};

enum class FamilyKind { gp, helm, closed_helm, cycle, path, fan, joint_sum, circulant, complete };

std::string_view family_kind_name(FamilyKind k) noexcept;
std::optional<FamilyKind> family_kind_from_name(std::string_view name) noexcept;

/// Which family a graph was built from, with its parameters. Only the fields
/// meaningful for `kind` are populated.
struct FamilySpec {
  FamilyKind kind = FamilyKind::cycle;
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<int> connection;     // circulant: normalized connection set
  std::vector<FamilySpec> parts;   // joint_sum: {left, right}
  std::optional<VertexId> anchor_left;
  std::optional<VertexId> anchor_right;

  bool operator==(const FamilySpec&) const = default;

  /// Short human-readable form, e.g. "gp(6,1)" or "circulant(8,{1,2})".
  std::string describe() const;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph over named vertices. Vertex and edge order are part
/// of the value: constructors are deterministic and serialization preserves both.
class Graph {
 public:
  Graph() = default;
  /// Validates: unique vertex names, endpoints in range, no loops, no duplicate edges.
  Graph(FamilySpec family, std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const FamilySpec& family() const noexcept { return family_; }

  const VertexId& vertex(std::size_t pos) const { return vertices_.at(pos); }
  std::optional<std::size_t> position(const VertexId& v) const;
  /// Like position() but throws std::out_of_range for unknown names.
  std::size_t at(const VertexId& v) const;
  bool contains(const VertexId& v) const { return position(v).has_value(); }

  const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adjacency_; }
  std::size_t degree(std::size_t pos) const { return adjacency_.at(pos).size(); }
  bool all_degrees_even() const noexcept;

  bool operator==(const Graph& other) const {
    return family_ == other.family_ && vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  FamilySpec family_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> lookup_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace fibcordial
