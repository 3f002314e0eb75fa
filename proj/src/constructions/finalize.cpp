#include <sstream>
#include <stdexcept>

#include "fibcordial/constructions.hpp"
#include "fibcordial/families.hpp"

namespace fibcordial {

namespace {

std::uint64_t attempt_seed(std::uint64_t base, std::uint64_t attempt) {
  // splitmix64 step keeps attempts decorrelated but reproducible.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (attempt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr int kAnnealAttempts = 4;

struct SearchHit {
  ParityPattern pattern;
  std::string method;
};

std::optional<SearchHit> search_balanced(const Graph& g, const LabelPool& pool, const ParityPattern& seed,
                                         const RepairOptions& opts, bool exhaustive_first) {
  const bool small = g.vertex_count() <= opts.exhaustive_limit;
  if (exhaustive_first && small) {
    auto hit = exhaustive_exists(g, pool, ExhaustiveOptions{opts.exhaustive_limit, true});
    if (hit) return SearchHit{std::move(*hit), "exhaustive"};
    return std::nullopt;
  }
  for (int attempt = 0; attempt < kAnnealAttempts; ++attempt) {
    auto res = anneal_repair(g, pool, seed, attempt_seed(opts.seed, attempt), opts.budget);
    if (res.pattern) return SearchHit{std::move(*res.pattern), "anneal"};
  }
  if (small) {
    auto hit = exhaustive_exists(g, pool, ExhaustiveOptions{opts.exhaustive_limit, true});
    if (hit) return SearchHit{std::move(*hit), "exhaustive"};
  }
  return std::nullopt;
}

std::string summarize(const VerificationReport& r) {
  std::ostringstream os;
  os << "literal labeling " << verdict_name(r.verdict) << ": eps0=" << r.epsilon0 << " eps1=" << r.epsilon1
     << " eps_tilde=" << r.epsilon_tilde;
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) os << (i ? "; " : " (") << r.violations[i];
  if (shown) os << (r.violations.size() > shown ? "; ...)" : ")");
  return os.str();
}

}  // namespace

ConstructionOutcome finalize(Graph g, Labeling formula, ConstructionParams params, std::string case_id,
                             std::vector<std::string> notes, const RepairOptions& opts) {
  ConstructionOutcome out;
  out.report = verify(g, formula);
  out.params = params;
  out.case_id = std::move(case_id);
  out.notes = std::move(notes);
  if (out.report.verdict == Verdict::cordial) {
    out.graph = std::move(g);
    out.labeling = std::move(formula);
    return out;
  }

  const auto pool = Labeling::pool_for_graph(g);
  const ParityPattern seed = parity_of(formula);
  auto hit = search_balanced(g, pool, seed, opts, false);
  if (!hit)
    throw std::runtime_error(g.family().describe() + " [" + out.case_id +
                             "]: formula failed verification and repair found no balanced pattern");

  RepairDetail detail;
  detail.formula_labeling = formula;
  detail.formula_report = out.report;
  detail.method = hit->method;
  for (std::size_t i = 0; i < seed.even.size(); ++i)
    if (seed.even[i] != hit->pattern.even[i]) detail.flips.push_back({g.vertex(i), hit->pattern.even[i]});

  out.discrepancy = summarize(out.report);
  out.labeling = concretize(g, hit->pattern, pool);
  out.report = verify(g, out.labeling);
  out.repaired = true;
  out.repair = std::move(detail);
  out.graph = std::move(g);
  return out;
}

ConstructionOutcome label_by_search(const Graph& g, const RepairOptions& opts) {
  if (auto cert = even_degree_obstruction(g)) throw NonexistenceError(g.family().describe(), *cert);
  const auto pool = Labeling::pool_for_graph(g);
  auto hit = search_balanced(g, pool, ParityPattern::all_odd(g.vertex_count()), opts, true);
  if (!hit) {
    if (g.vertex_count() <= opts.exhaustive_limit) {
      ObstructionCertificate cert;
      cert.kind = ObstructionCertificate::Kind::exhaustive;
      cert.all_degrees_even = g.all_degrees_even();
      cert.edge_count = g.edge_count();
      cert.edge_count_mod4 = static_cast<unsigned>(g.edge_count() % 4);
      cert.conclusion = "nonexistent (exhaustive): no capacity-feasible parity pattern is balanced";
      throw NonexistenceError(g.family().describe(), std::move(cert));
    }
    throw std::runtime_error(g.family().describe() + ": annealing found no labeling; existence undecided");
  }
  ConstructionOutcome out;
  out.labeling = concretize(g, hit->pattern, pool);
  out.report = verify(g, out.labeling);
  out.case_id = "search/" + hit->method;
  out.from_oracle = true;
  out.notes.push_back("labeling found by " + hit->method + " search");
  out.graph = g;
  return out;
}

ConstructionOutcome label_complete(int n) {
  Graph g = build_complete(n);
  const auto k = complete_graph_even_count(n);
  if (!k) {
    ObstructionCertificate cert;
    cert.kind = ObstructionCertificate::Kind::complete_count;
    cert.all_degrees_even = g.all_degrees_even();
    cert.edge_count = g.edge_count();
    cert.edge_count_mod4 = static_cast<unsigned>(g.edge_count() % 4);
    cert.conclusion = "nonexistent (complete graph): no even count k in the pool window gives a balanced k(n-k)";
    throw NonexistenceError(g.family().describe(), std::move(cert));
  }
  ParityPattern p = ParityPattern::all_odd(g.vertex_count());
  for (std::size_t i = 0; i < *k; ++i) p.even[i] = true;
  ConstructionOutcome out;
  out.labeling = concretize(g, p, Labeling::pool_for_graph(g));
  out.report = verify(g, out.labeling);
  out.case_id = "complete/k=" + std::to_string(*k);
  out.from_oracle = true;
  out.graph = std::move(g);
  return out;
}

}  // namespace fibcordial
