#include "fibcordial/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibcordial {

namespace {

constexpr std::array<std::string_view, 8> kRoleNames = {"apex",  "rim",   "pendant", "outer",
                                                        "inner", "cycle", "path",    "plain"};

constexpr std::array<std::string_view, 9> kFamilyNames = {
    "gp", "helm", "closed_helm", "cycle", "path", "fan", "joint_sum", "circulant", "complete"};

}  // namespace

std::string_view role_name(Role r) noexcept { return kRoleNames[static_cast<std::size_t>(r)]; }

std::optional<Role> role_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kRoleNames.size(); ++i)
    if (kRoleNames[i] == name) return static_cast<Role>(i);
  return std::nullopt;
}

std::string VertexId::to_string() const {
  std::string out(role_name(role));
  out += ':';
  out += std::to_string(index);
  return out;
}

std::optional<VertexId> VertexId::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto role = role_from_name(text.substr(0, colon));
  if (!role) return std::nullopt;
  const auto digits = text.substr(colon + 1);
  if (digits.empty()) return std::nullopt;
  int index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || index < 0) return std::nullopt;
  return VertexId{*role, index};
}

std::string_view family_kind_name(FamilyKind k) noexcept {
  return kFamilyNames[static_cast<std::size_t>(k)];
}

std::optional<FamilyKind> family_kind_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (kFamilyNames[i] == name) return static_cast<FamilyKind>(i);
  return std::nullopt;
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  os << family_kind_name(kind);
  switch (kind) {
    case FamilyKind::gp:
      os << '(' << n << ',' << k << ')';
      break;
    case FamilyKind::fan:
      os << '(' << m << ')';
      break;
    case FamilyKind::circulant: {
      os << '(' << n << ",{";
      for (std::size_t i = 0; i < connection.size(); ++i) os << (i ? "," : "") << connection[i];
      os << "})";
      break;
    }
    case FamilyKind::joint_sum:
      os << '(' << (parts.size() > 0 ? parts[0].describe() : "?") << ','
         << (parts.size() > 1 ? parts[1].describe() : "?") << ')';
      break;
    default:
      os << '(' << n << ')';
  }
  return os.str();
}

Graph::Graph(FamilySpec family, std::vector<VertexId> vertices, std::vector<Edge> edges)
    : family_(std::move(family)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!lookup_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex " + vertices_[i].to_string());
  }
  adjacency_.assign(vertices_.size(), {});
  std::set<Edge> seen;
  for (const auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size())
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loop at " + vertices_[a].to_string());
    if (!seen.insert(std::minmax(a, b)).second)
      throw std::invalid_argument("duplicate edge " + vertices_[a].to_string() + " -- " +
                                  vertices_[b].to_string());
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
}

std::optional<std::size_t> Graph::position(const VertexId& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::at(const VertexId& v) const {
  auto pos = position(v);
  if (!pos) throw std::out_of_range("no vertex " + v.to_string());
  return *pos;
}

bool Graph::all_degrees_even() const noexcept {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& nbrs) { return nbrs.size() % 2 == 0; });
}

}  // namespace fibcordial
