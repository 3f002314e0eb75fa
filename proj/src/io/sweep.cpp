#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "fibcordial/errors.hpp"
#include "fibcordial/sweep.hpp"

namespace fibcordial::sweep {

namespace {

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::gp1, "gp1"},
    {Family::helm, "helm"},
    {Family::closed_helm, "closed_helm"},
    {Family::cycle_path, "cycle_path"},
    {Family::fan_path, "fan_path"},
    {Family::circulant12, "circulant12"},
    {Family::circulant123, "circulant123"},
    {Family::circulant1234, "circulant1234"},
    {Family::complete, "complete"},
};

bool cited_complete(int n) {
  const auto& cited = cited_complete_graph_exceptions();
  return std::find(cited.begin(), cited.end(), n) != cited.end();
}

ConstructionOutcome construct(const Instance& inst, const RepairOptions& opts) {
  switch (inst.family) {
    case Family::gp1: return label_gp_n1(inst.n, opts);
    case Family::helm: return label_helm(inst.n, opts);
    case Family::closed_helm: return label_closed_helm(inst.n, opts);
    case Family::cycle_path: return label_cycle_path(inst.n, inst.pn, opts);
    case Family::fan_path: return label_fan_path(inst.n, inst.pn, opts);
    case Family::circulant12: return label_circulant_12(inst.n, opts);
    case Family::circulant123: return label_circulant_123(inst.n, opts);
    case Family::circulant1234: return label_circulant_1234(inst.n, opts);
    case Family::complete: return label_complete(inst.n);
  }
  throw std::logic_error("unhandled family");
}

std::string claim_text(const Instance& inst, bool cordial) {
  return std::string("claimed ") + (claimed_cordial(inst) ? "cordial" : "not cordial") + "; observed " +
         (cordial ? "cordial" : "not cordial");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

nlohmann::json row_json(const SweepRow& r) {
  return {{"family", r.family},
          {"parameters", r.parameters},
          {"vertices", r.vertices},
          {"edges", r.edges},
          {"epsilon0", r.epsilon0},
          {"epsilon1", r.epsilon1},
          {"verdict", r.verdict},
          {"source", std::string(source_name(r.source))},
          {"case_id", r.case_id},
          {"runtime_ms", r.runtime_ms}};
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& [fam, name] : kFamilies)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) noexcept {
  for (const auto& [fam, n] : kFamilies)
    if (n == name) return fam;
  return std::nullopt;
}

bool is_two_parameter(Family f) noexcept { return f == Family::cycle_path || f == Family::fan_path; }

std::string Instance::parameters() const {
  if (is_two_parameter(family)) return "m=" + std::to_string(n) + ";n=" + std::to_string(pn);
  return "n=" + std::to_string(n);
}

std::string_view source_name(Source s) noexcept {
  switch (s) {
    case Source::formula: return "formula";
    case Source::formula_repaired: return "formula_repaired";
    case Source::oracle: return "oracle";
    case Source::obstruction: return "obstruction";
  }
  return "?";
}

bool claimed_cordial(const Instance& inst) {
  switch (inst.family) {
    case Family::circulant12: return inst.n % 2 == 0;
    case Family::circulant123: return inst.n == 6 || inst.n % 4 != 2;
    case Family::complete: return cited_complete(inst.n);
    default: return true;
  }
}

std::pair<SweepRow, std::optional<DiscrepancyRecord>> run_instance(const Instance& inst, const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.family = std::string(family_name(inst.family));
  row.parameters = inst.parameters();
  std::optional<DiscrepancyRecord> record;
  const std::string instance_text = row.family + "(" + row.parameters + ")";

  try {
    ConstructionOutcome out = construct(inst, opts.repair);
    row.vertices = out.graph.vertex_count();
    row.edges = out.graph.edge_count();
    row.epsilon0 = out.report.epsilon0;
    row.epsilon1 = out.report.epsilon1;
    row.verdict = out.report.verdict == Verdict::cordial ? "cordial" : "not_cordial";
    row.source = out.from_oracle ? Source::oracle : out.repaired ? Source::formula_repaired : Source::formula;
    row.case_id = out.case_id;
    if (out.repaired) {
      record = DiscrepancyRecord{instance_text, out.case_id, out.discrepancy.value_or(""), Resolution::repaired,
                                 out.repair ? out.repair->flips : std::vector<PatternFlip>{}};
    } else if (!claimed_cordial(inst)) {
      record = DiscrepancyRecord{instance_text, out.case_id, claim_text(inst, true), Resolution::unresolved, {}};
    }
  } catch (const NonexistenceError& e) {
    const auto& cert = e.certificate();
    row.edges = cert.edge_count;
    row.verdict = "not_cordial";
    row.source = cert.kind == ObstructionCertificate::Kind::even_degree_mod4 ? Source::obstruction : Source::oracle;
    row.case_id = cert.kind == ObstructionCertificate::Kind::even_degree_mod4 ? "obstruction/even_degree_mod4"
                  : cert.kind == ObstructionCertificate::Kind::exhaustive     ? "oracle/exhaustive"
                                                                               : "oracle/complete_count";
    if (claimed_cordial(inst))
      record = DiscrepancyRecord{instance_text, row.case_id, claim_text(inst, false), Resolution::unresolved, {}};
  } catch (const std::runtime_error& e) {
    row.verdict = "not_cordial";
    row.source = Source::oracle;
    row.case_id = "undecided";
    record = DiscrepancyRecord{instance_text, "undecided", e.what(), Resolution::unresolved, {}};
  }
  if (row.vertices == 0) {
    // Failure paths still report the instance's size.
    row.vertices = [&] {
      switch (inst.family) {
        case Family::gp1: return 2 * inst.n;
        case Family::helm:
        case Family::closed_helm: return 2 * inst.n + 1;
        case Family::cycle_path: return inst.n + inst.pn;
        case Family::fan_path: return inst.n + 1 + inst.pn;
        default: return inst.n;
      }
    }();
  }
  if (opts.timing)
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  return {std::move(row), std::move(record)};
}

std::vector<Instance> instances(Family f, int lo, int hi, int pn_lo, int pn_hi) {
  static constexpr int kMinOrder[] = {3, 3, 3, 3, 2, 4, 6, 9, 1};
  const int min_order = kMinOrder[static_cast<int>(f)];
  if (lo < min_order)
    throw ParameterOutOfRange(std::string(family_name(f)) + ": range must start at " + std::to_string(min_order) +
                              " or above");
  if (is_two_parameter(f) && pn_lo < 1) throw ParameterOutOfRange("path order must be >= 1");
  std::vector<Instance> out;
  for (int n = lo; n <= hi; ++n) {
    if (is_two_parameter(f)) {
      for (int pn = pn_lo; pn <= pn_hi; ++pn) out.push_back({f, n, pn});
    } else {
      out.push_back({f, n, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Result collect(std::vector<std::pair<SweepRow, std::optional<DiscrepancyRecord>>>&& slots) {
  Result r;
  r.rows.reserve(slots.size());
  for (auto& [row, rec] : slots) {
    r.rows.push_back(std::move(row));
    if (rec) r.discrepancies.push_back(std::move(*rec));
  }
  return r;
}

}  // namespace

Result run(const std::vector<Instance>& insts, const Options& opts) {
  std::vector<std::pair<SweepRow, std::optional<DiscrepancyRecord>>> slots(insts.size());
  const long count = static_cast<long>(insts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) slots[i] = run_instance(insts[i], opts);
  return collect(std::move(slots));
}

Result run_serial(const std::vector<Instance>& insts, const Options& opts) {
  std::vector<std::pair<SweepRow, std::optional<DiscrepancyRecord>>> slots;
  slots.reserve(insts.size());
  for (const auto& inst : insts) slots.push_back(run_instance(inst, opts));
  return collect(std::move(slots));
}

std::vector<DiscrepancyRecord> complete_graph_claims(int hi) {
  std::vector<DiscrepancyRecord> out;
  for (int n = 1; n <= hi; ++n) {
    const bool feasible = complete_graph_feasible(n);
    if (feasible == cited_complete(n)) continue;
    DiscrepancyRecord rec;
    rec.instance = "complete(n=" + std::to_string(n) + ")";
    rec.theorem_case = "cited complete-graph list";
    rec.observed = std::string(cited_complete(n) ? "listed as cordial" : "not listed") +
                   "; analytic even-count window says " + (feasible ? "cordial" : "not cordial");
    rec.resolution = Resolution::unresolved;
    out.push_back(std::move(rec));
  }
  return out;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,parameters,vertices,edges,epsilon0,epsilon1,verdict,source,case_id,runtime_ms\n";
  for (const auto& r : rows)
    os << csv_field(r.family) << ',' << csv_field(r.parameters) << ',' << r.vertices << ',' << r.edges << ','
       << r.epsilon0 << ',' << r.epsilon1 << ',' << r.verdict << ',' << source_name(r.source) << ','
       << csv_field(r.case_id) << ',' << r.runtime_ms << '\n';
  return os.str();
}

std::string to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return arr.dump(2) + "\n";
}

std::string to_markdown(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "| family | parameters | V | E | eps0 | eps1 | verdict | source | case |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.family << " | " << r.parameters << " | " << r.vertices << " | " << r.edges << " | "
       << r.epsilon0 << " | " << r.epsilon1 << " | " << r.verdict << " | " << source_name(r.source) << " | "
       << r.case_id << " |\n";
  return os.str();
}

std::string to_jsonl(const std::vector<DiscrepancyRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    nlohmann::json flips = nlohmann::json::array();
    for (const auto& f : rec.pattern_diff)
      flips.push_back({{"vertex", f.vertex.to_string()}, {"to", f.to_even ? "even" : "odd"}});
    nlohmann::json j{{"instance", rec.instance},
                     {"theorem_case", rec.theorem_case},
                     {"observed", rec.observed},
                     {"resolution", rec.resolution == Resolution::repaired ? "repaired" : "unresolved"},
                     {"pattern_diff", std::move(flips)}};
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace fibcordial::sweep
