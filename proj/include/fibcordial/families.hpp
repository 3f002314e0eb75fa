#pragma once

#include <vector>

#include "fibcordial/graph.hpp"

namespace fibcordial {

// Vertex conventions: u_i/v_i families are 1-based (outer/inner, rim/pendant,
// cycle, path); circulant and complete graphs use plain vertices 0..n-1.
// All constructors throw ParameterOutOfRange outside their domain.

/// GP(n,k): outer u_1..u_n with chords u_i u_{i+k}, spokes u_i v_i, inner cycle v_i v_{i+1}.
Graph build_gp(int n, int k);

/// Wheel on rim v_1..v_n with apex v, plus pendant u_i at each v_i.
Graph build_helm(int n);

/// Helm whose pendants are joined into an outer cycle u_1..u_n.
Graph build_closed_helm(int n);

Graph build_cycle(int n);
Graph build_path(int n);

/// Apex joined to every vertex of a path rim(1..m).
Graph build_fan(int m);

Graph build_complete(int n);

/// Disjoint union plus the bridge {a1, a2}. Right-hand vertices whose names
/// collide with left-hand ones (e.g. P_1 + P_1) have their index shifted past
/// the largest left-hand index of the same role; `a2` names the vertex before
/// the shift.
Graph joint_sum(const Graph& g1, const VertexId& a1, const Graph& g2, const VertexId& a2);

/// Maps s -> min(s mod n, n - s mod n); drops nothing, throws on s = 0 (mod n).
/// Result is sorted and deduplicated.
std::vector<int> normalize_connection_set(int n, const std::vector<int>& s);

/// Circulant on plain(0..n-1) with the normalized connection set.
Graph build_circulant(int n, const std::vector<int>& s);

/// Rebuilds a graph from its family description.
Graph build(const FamilySpec& spec);

}  // namespace fibcordial
