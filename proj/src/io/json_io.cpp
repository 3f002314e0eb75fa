#include <fstream>
#include <sstream>

#include "fibcordial/errors.hpp"
#include "fibcordial/io.hpp"

namespace fibcordial::io {

namespace {

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

const std::string& as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get_ref<const std::string&>();
}

VertexId as_vertex(const json& j, const std::string& path) {
  auto v = VertexId::parse(as_string(j, path));
  if (!v) throw SchemaError(path, "expected \"role:index\", got \"" + j.get<std::string>() + "\"");
  return *v;
}

}  // namespace

json family_to_json(const FamilySpec& spec) {
  json j;
  j["kind"] = std::string(family_kind_name(spec.kind));
  switch (spec.kind) {
    case FamilyKind::gp:
      j["n"] = spec.n;
      j["k"] = spec.k;
      break;
    case FamilyKind::fan:
      j["m"] = spec.m;
      break;
    case FamilyKind::circulant:
      j["n"] = spec.n;
      j["s"] = spec.connection;
      break;
    case FamilyKind::joint_sum:
      j["left"] = family_to_json(spec.parts.at(0));
      j["right"] = family_to_json(spec.parts.at(1));
      j["anchor_left"] = spec.anchor_left ? spec.anchor_left->to_string() : "";
      j["anchor_right"] = spec.anchor_right ? spec.anchor_right->to_string() : "";
      break;
    default:
      j["n"] = spec.n;
  }
  return j;
}

FamilySpec family_from_json(const json& j, const std::string& path) {
  FamilySpec spec;
  const auto kind = family_kind_from_name(as_string(field(j, "kind", path), path + ".kind"));
  if (!kind) throw SchemaError(path + ".kind", "unknown family kind");
  spec.kind = *kind;
  switch (spec.kind) {
    case FamilyKind::gp:
      spec.n = as_int(field(j, "n", path), path + ".n");
      spec.k = as_int(field(j, "k", path), path + ".k");
      break;
    case FamilyKind::fan:
      spec.m = as_int(field(j, "m", path), path + ".m");
      break;
    case FamilyKind::circulant: {
      spec.n = as_int(field(j, "n", path), path + ".n");
      const json& s = field(j, "s", path);
      if (!s.is_array()) throw SchemaError(path + ".s", "expected an array");
      for (std::size_t i = 0; i < s.size(); ++i)
        spec.connection.push_back(as_int(s[i], path + ".s[" + std::to_string(i) + "]"));
      break;
    }
    case FamilyKind::joint_sum:
      spec.parts.push_back(family_from_json(field(j, "left", path), path + ".left"));
      spec.parts.push_back(family_from_json(field(j, "right", path), path + ".right"));
      spec.anchor_left = as_vertex(field(j, "anchor_left", path), path + ".anchor_left");
      spec.anchor_right = as_vertex(field(j, "anchor_right", path), path + ".anchor_right");
      break;
    default:
      spec.n = as_int(field(j, "n", path), path + ".n");
  }
  return spec;
}

json graph_to_json(const Graph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"role", std::string(role_name(v.role))}, {"index", v.index}});
  json es = json::array();
  for (const auto& [a, b] : g.edges()) es.push_back({g.vertex(a).to_string(), g.vertex(b).to_string()});
  return {{"family", family_to_json(g.family())}, {"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

Graph graph_from_json(const json& j) {
  FamilySpec spec = family_from_json(field(j, "family", "$"), "$.family");

  const json& vs = field(j, "vertices", "$");
  if (!vs.is_array()) throw SchemaError("$.vertices", "expected an array");
  std::vector<VertexId> vertices;
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = "$.vertices[" + std::to_string(i) + "]";
    const auto role = role_from_name(as_string(field(vs[i], "role", p), p + ".role"));
    if (!role) throw SchemaError(p + ".role", "unknown role");
    VertexId v{*role, as_int(field(vs[i], "index", p), p + ".index")};
    if (!pos.emplace(v, i).second) throw SchemaError(p, "duplicate vertex " + v.to_string());
    vertices.push_back(v);
  }

  const json& es = field(j, "edges", "$");
  if (!es.is_array()) throw SchemaError("$.edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = "$.edges[" + std::to_string(i) + "]";
    if (!es[i].is_array() || es[i].size() != 2) throw SchemaError(p, "expected a pair of vertex names");
    std::size_t ends[2];
    for (int e = 0; e < 2; ++e) {
      const std::string pe = p + "[" + std::to_string(e) + "]";
      auto it = pos.find(as_vertex(es[i][e], pe));
      if (it == pos.end()) throw SchemaError(pe, "unknown vertex");
      ends[e] = it->second;
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  try {
    return Graph(std::move(spec), std::move(vertices), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("$.edges", e.what());
  }
}

json labeling_to_json(const Graph& g, const Labeling& l) {
  // nlohmann's default object is key-sorted, which keeps output stable.
  json a = json::object();
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (l.index[i]) a[g.vertex(i).to_string()] = l.index[i]->value;
  return {{"assignment", std::move(a)}, {"pool_max", l.pool.max_index}};
}

Labeling labeling_from_json(const Graph& g, const json& j) {
  Labeling l = Labeling::empty_for(g);
  const json& pm = field(j, "pool_max", "$");
  if (!pm.is_number_unsigned()) throw SchemaError("$.pool_max", "expected a non-negative integer");
  l.pool = LabelPool::with_max(pm.get<std::uint32_t>());
  const json& a = field(j, "assignment", "$");
  if (!a.is_object()) throw SchemaError("$.assignment", "expected an object");
  for (const auto& [key, value] : a.items()) {
    const std::string p = "$.assignment[\"" + key + "\"]";
    auto v = VertexId::parse(key);
    if (!v) throw SchemaError(p, "key is not \"role:index\"");
    auto at = g.position(*v);
    if (!at) throw SchemaError(p, "vertex not in graph");
    if (!value.is_number_unsigned()) throw SchemaError(p, "expected a non-negative integer");
    l.index[*at] = FibIndex{value.get<std::uint32_t>()};
  }
  return l;
}

json report_to_json(const VerificationReport& r) {
  return {{"injective", r.injective},
          {"within_pool", r.within_pool},
          {"epsilon0", r.epsilon0},
          {"epsilon1", r.epsilon1},
          {"epsilon_tilde", r.epsilon_tilde},
          {"verdict", std::string(verdict_name(r.verdict))},
          {"violations", r.violations}};
}

json certificate_to_json(const ObstructionCertificate& c) {
  const char* kind = c.kind == ObstructionCertificate::Kind::even_degree_mod4 ? "even_degree_mod4"
                     : c.kind == ObstructionCertificate::Kind::exhaustive     ? "exhaustive"
                                                                               : "complete_count";
  return {{"kind", kind},
          {"all_degrees_even", c.all_degrees_even},
          {"edge_count", c.edge_count},
          {"edge_count_mod4", c.edge_count_mod4},
          {"conclusion", c.conclusion}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string to_dot(const Graph& g, const Labeling& l) {
  std::ostringstream os;
  os << "graph \"" << g.family().describe() << "\" {\n";
  os << "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    os << "  \"" << g.vertex(i).to_string() << "\" [label=\"";
    if (l.index[i]) {
      os << "F_" << l.index[i]->value << '"';
      if (fib_parity(*l.index[i]) == Parity::even) os << ", fillcolor=grey80";
    } else {
      os << "?\", fillcolor=red";
    }
    os << "];\n";
  }
  for (const auto& [a, b] : g.edges()) {
    os << "  \"" << g.vertex(a).to_string() << "\" -- \"" << g.vertex(b).to_string() << "\"";
    if (l.index[a] && l.index[b])
      os << (fib_parity(*l.index[a]) == fib_parity(*l.index[b]) ? " [style=dashed]" : " [style=solid]");
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fibcordial::io
