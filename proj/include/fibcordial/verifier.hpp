#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcordial/fib.hpp"
#include "fibcordial/graph.hpp"

namespace fibcordial {

/// Vertex -> subscript assignment, stored positionally against a Graph's
/// vertex order. Unassigned entries are allowed so that partial formula
/// output can be reported instead of rejected.
struct Labeling {
  LabelPool pool;
  std::vector<std::optional<FibIndex>> index;

  static Labeling empty_for(const Graph& g) {
    return Labeling{pool_for_graph(g), std::vector<std::optional<FibIndex>>(g.vertex_count())};
  }
  static LabelPool pool_for_graph(const Graph& g);

  void set(const Graph& g, const VertexId& v, FibIndex i) { index.at(g.at(v)) = i; }
  std::optional<FibIndex> get(const Graph& g, const VertexId& v) const { return index.at(g.at(v)); }

  bool operator==(const Labeling&) const = default;
};

enum class Verdict { cordial, not_cordial, invalid };

std::string_view verdict_name(Verdict v) noexcept;

struct VerificationReport {
  bool injective = true;
  bool within_pool = true;
  std::size_t epsilon0 = 0;
  std::size_t epsilon1 = 0;
  std::size_t epsilon_tilde = 0;
  Verdict verdict = Verdict::invalid;
  std::vector<std::string> violations;

  bool operator==(const VerificationReport&) const = default;
};

/// Induced label of edge uv: 1 iff the endpoint labels differ in parity.
/// Throws UnlabeledVertex when either endpoint has no label.
int edge_label(const Graph& g, const Labeling& l, const VertexId& u, const VertexId& v);

/// Counts every edge once. Injectivity is over subscripts, so F_1 and F_2 are
/// distinct labels. Problems are reported as Verdict::invalid, never thrown.
VerificationReport verify(const Graph& g, const Labeling& l);

}  // namespace fibcordial
