#include "fibcordial/verifier.hpp"

#include <map>

#include "fibcordial/errors.hpp"

namespace fibcordial {

LabelPool Labeling::pool_for_graph(const Graph& g) {
  return g.vertex_count() == 0 ? LabelPool::with_max(0) : pool_for(g.vertex_count());
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::cordial: return "cordial";
    case Verdict::not_cordial: return "not_cordial";
    case Verdict::invalid: return "invalid";
  }
  return "invalid";
}

int edge_label(const Graph& g, const Labeling& l, const VertexId& u, const VertexId& v) {
  const auto fu = l.get(g, u);
  const auto fv = l.get(g, v);
  if (!fu) throw UnlabeledVertex("unlabeled vertex " + u.to_string());
  if (!fv) throw UnlabeledVertex("unlabeled vertex " + v.to_string());
  return fib_parity(*fu) != fib_parity(*fv) ? 1 : 0;
}

VerificationReport verify(const Graph& g, const Labeling& l) {
  VerificationReport r;
  const auto& vs = g.vertices();
  bool complete = true;
  if (l.index.size() != vs.size()) {
    r.violations.push_back("labeling covers " + std::to_string(l.index.size()) + " vertices, graph has " +
                           std::to_string(vs.size()));
    complete = false;
  }

  std::map<std::uint32_t, std::size_t> owner;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& idx = i < l.index.size() ? l.index[i] : std::nullopt;
    if (!idx) {
      r.violations.push_back("unlabeled vertex " + vs[i].to_string());
      complete = false;
      continue;
    }
    if (!l.pool.contains(*idx)) {
      r.within_pool = false;
      r.violations.push_back("index " + std::to_string(idx->value) + " at " + vs[i].to_string() +
                             " exceeds pool max " + std::to_string(l.pool.max_index));
    }
    auto [it, fresh] = owner.emplace(idx->value, i);
    if (!fresh) {
      r.injective = false;
      r.violations.push_back("duplicate index " + std::to_string(idx->value) + " at " +
                             vs[it->second].to_string() + " and " + vs[i].to_string());
    }
  }

  for (const auto& [a, b] : g.edges()) {
    if (a >= l.index.size() || b >= l.index.size() || !l.index[a] || !l.index[b]) continue;
    if (fib_parity(*l.index[a]) != fib_parity(*l.index[b]))
      ++r.epsilon1;
    else
      ++r.epsilon0;
  }
  r.epsilon_tilde = r.epsilon0 > r.epsilon1 ? r.epsilon0 - r.epsilon1 : r.epsilon1 - r.epsilon0;

  if (!complete || !r.injective || !r.within_pool)
    r.verdict = Verdict::invalid;
  else
    r.verdict = r.epsilon_tilde <= 1 ? Verdict::cordial : Verdict::not_cordial;
  return r;
}

}  // namespace fibcordial
