#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"
#include "fibcordial/io.hpp"
#include "fibcordial/sweep.hpp"

using namespace fibcordial;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNotCordial = 2;
constexpr int kNonexistent = 3;

struct GraphFlags {
  std::string family;
  int n = 0;
  int k = 1;
  int m = 0;
  int pn = 0;
  std::string s;
  std::string graph_file;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f, bool allow_file) {
  cmd->add_option("--family", f.family,
                  "gp, helm, closed-helm, cycle, path, fan, complete, circulant, cycle-path, fan-path");
  cmd->add_option("--n", f.n, "order (n)");
  cmd->add_option("--k", f.k, "GP step");
  cmd->add_option("--m", f.m, "cycle/fan order for joint sums, fan order");
  cmd->add_option("--pn", f.pn, "path order for joint sums");
  cmd->add_option("--s", f.s, "circulant connection set, e.g. 1,2,3");
  if (allow_file) cmd->add_option("--graph", f.graph_file, "graph JSON instead of family flags");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw ParameterOutOfRange("bad integer in list: " + item);
    out.push_back(v);
  }
  return out;
}

Graph graph_from_flags(const GraphFlags& f) {
  if (!f.graph_file.empty()) return io::graph_from_json(io::read_json_file(f.graph_file));
  const std::string& fam = f.family;
  if (fam == "gp") return build_gp(f.n, f.k);
  if (fam == "helm") return build_helm(f.n);
  if (fam == "closed-helm") return build_closed_helm(f.n);
  if (fam == "cycle") return build_cycle(f.n);
  if (fam == "path") return build_path(f.n);
  if (fam == "fan") return build_fan(f.m ? f.m : f.n);
  if (fam == "complete") return build_complete(f.n);
  if (fam == "circulant") return build_circulant(f.n, parse_int_list(f.s));
  if (fam == "cycle-path") return joint_sum(build_cycle(f.m), {Role::cycle, f.m}, build_path(f.pn), {Role::path, 1});
  if (fam == "fan-path") return joint_sum(build_fan(f.m), {Role::apex, 0}, build_path(f.pn), {Role::path, 1});
  throw ParameterOutOfRange(fam.empty() ? "--family or --graph is required" : "unknown family '" + fam + "'");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    io::write_text_file(path, text);
}

int report_nonexistence(const NonexistenceError& e) {
  json out{{"instance", e.instance()}, {"certificate", io::certificate_to_json(e.certificate())}};
  std::cout << out.dump(2) << "\n";
  return kNonexistent;
}

// Construction for a family, or search when no theorem covers it.
ConstructionOutcome label_flags(const GraphFlags& f, const RepairOptions& opts) {
  if (f.graph_file.empty()) {
    const std::string& fam = f.family;
    if (fam == "gp" && f.k == 1) return label_gp_n1(f.n, opts);
    if (fam == "helm") return label_helm(f.n, opts);
    if (fam == "closed-helm") return label_closed_helm(f.n, opts);
    if (fam == "cycle-path") return label_cycle_path(f.m, f.pn, opts);
    if (fam == "fan-path") return label_fan_path(f.m, f.pn, opts);
    if (fam == "complete") return label_complete(f.n);
    if (fam == "circulant") {
      const auto conn = normalize_connection_set(f.n, parse_int_list(f.s));
      if (conn == std::vector<int>{1, 2}) return label_circulant_12(f.n, opts);
      if (conn == std::vector<int>{1, 2, 3}) return label_circulant_123(f.n, opts);
      if (conn == std::vector<int>{1, 2, 3, 4}) return label_circulant_1234(f.n, opts);
    }
  }
  return label_by_search(graph_from_flags(f), opts);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci cordial labelings: construct, verify, search, sweep"};
  app.require_subcommand(1);

  GraphFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "write a graph as JSON");
  add_graph_flags(gen, gen_flags, false);
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  GraphFlags label_flags_v;
  std::string label_out, label_graph_out, figure_name_v;
  std::uint64_t label_seed = 1;
  auto* label = app.add_subcommand("label", "label a family instance (theorem construction, verified)");
  add_graph_flags(label, label_flags_v, true);
  label->add_option("--figure", figure_name_v, "published drawing: gp61, h4, ch14, c10p10, f10p12, circ8");
  label->add_option("-o,--out", label_out, "labeling JSON output");
  label->add_option("--graph-out", label_graph_out, "also write the graph JSON");
  label->add_option("--seed", label_seed, "repair search seed");

  std::string verify_graph, verify_labeling;
  auto* verify_cmd = app.add_subcommand("verify", "verify a labeling against a graph");
  verify_cmd->add_option("--graph", verify_graph)->required();
  verify_cmd->add_option("--labeling", verify_labeling)->required();

  GraphFlags search_flags;
  bool exhaustive = false, anneal = false;
  std::uint64_t search_seed = 1, search_budget = 400000;
  std::size_t search_limit = exhaustive_limit_from_env();
  std::string search_out;
  auto* search = app.add_subcommand("search", "oracle search for a labeling");
  add_graph_flags(search, search_flags, true);
  auto* ex_flag = search->add_flag("--exhaustive", exhaustive, "complete search over parity patterns");
  search->add_flag("--anneal", anneal, "annealing from the all-odd pattern")->excludes(ex_flag);
  search->add_option("--seed", search_seed);
  search->add_option("--budget", search_budget);
  search->add_option("--limit", search_limit, "exhaustive size cap (default from FIBCORDIAL_EXHAUSTIVE_LIMIT or 24)");
  search->add_option("-o,--out", search_out, "labeling JSON output");

  std::string sweep_family, sweep_range, sweep_pn_range = "1..1", sweep_format = "csv", sweep_out, sweep_log;
  std::uint64_t sweep_seed = 1;
  bool sweep_timing = false, sweep_serial = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a construction over a parameter range");
  sweep_cmd->add_option("--family", sweep_family,
                        "gp1, helm, closed_helm, cycle_path, fan_path, circulant12, circulant123, circulant1234, "
                        "complete")
      ->required();
  sweep_cmd->add_option("--range", sweep_range, "A..B over n (or m for joint sums)")->required();
  sweep_cmd->add_option("--pn-range", sweep_pn_range, "C..D over the path order for joint sums");
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json", "md"}));
  sweep_cmd->add_option("-o,--out", sweep_out, "table output (default stdout)");
  sweep_cmd->add_option("--discrepancies", sweep_log, "discrepancy JSONL (default: <out>.discrepancies.jsonl)");
  sweep_cmd->add_option("--seed", sweep_seed);
  sweep_cmd->add_flag("--timing", sweep_timing, "fill runtime_ms (output no longer byte-stable)");
  sweep_cmd->add_flag("--serial", sweep_serial, "use the serial reference loop");

  std::string export_graph, export_labeling, export_out;
  auto* export_cmd = app.add_subcommand("export", "render a labeled graph");
  export_cmd->add_option("--graph", export_graph)->required();
  export_cmd->add_option("--labeling", export_labeling)->required();
  export_cmd->add_flag("--dot", "Graphviz output (the only format)");
  export_cmd->add_option("-o,--out", export_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      emit(gen_out, io::graph_to_json(graph_from_flags(gen_flags)).dump(2) + "\n");
      return kOk;
    }

    if (*label) {
      ConstructionOutcome out;
      try {
        if (!figure_name_v.empty()) {
          const auto fig = figure_from_name(figure_name_v);
          if (!fig) throw ParameterOutOfRange("unknown figure '" + figure_name_v + "'");
          FigureInstance inst = figure_labeling(*fig);
          out = finalize(std::move(inst.graph), std::move(inst.labeling), {},
                         "figure/" + std::string(figure_name(*fig)), {}, RepairOptions{.seed = label_seed});
        } else {
          out = label_flags(label_flags_v, RepairOptions{.seed = label_seed});
        }
      } catch (const NonexistenceError& e) {
        return report_nonexistence(e);
      }
      const char* source = out.from_oracle ? "oracle" : out.repaired ? "formula_repaired" : "formula";
      json summary{{"instance", out.graph.family().describe()},
                   {"case_id", out.case_id},
                   {"source", source},
                   {"report", io::report_to_json(out.report)}};
      if (out.discrepancy) summary["discrepancy"] = *out.discrepancy;
      if (!out.notes.empty()) summary["notes"] = out.notes;
      if (!label_graph_out.empty()) emit(label_graph_out, io::graph_to_json(out.graph).dump(2) + "\n");
      if (!label_out.empty()) emit(label_out, io::labeling_to_json(out.graph, out.labeling).dump(2) + "\n");
      else summary["labeling"] = io::labeling_to_json(out.graph, out.labeling);
      std::cout << summary.dump(2) << "\n";
      return out.report.verdict == Verdict::cordial ? kOk : kNotCordial;
    }

    if (*verify_cmd) {
      const Graph g = io::graph_from_json(io::read_json_file(verify_graph));
      const Labeling l = io::labeling_from_json(g, io::read_json_file(verify_labeling));
      const auto r = verify(g, l);
      std::cout << io::report_to_json(r).dump(2) << "\n";
      return r.verdict == Verdict::cordial ? kOk : kNotCordial;
    }

    if (*search) {
      const Graph g = graph_from_flags(search_flags);
      if (auto cert = even_degree_obstruction(g)) {
        json out{{"instance", g.family().describe()}, {"certificate", io::certificate_to_json(*cert)}};
        std::cout << out.dump(2) << "\n";
        return kNonexistent;
      }
      const auto pool = Labeling::pool_for_graph(g);
      std::optional<ParityPattern> pattern;
      std::string method;
      if (!anneal) {
        if (g.vertex_count() > search_limit)
          throw SizeLimitExceeded("exhaustive search limited to " + std::to_string(search_limit) +
                                  " vertices (graph has " + std::to_string(g.vertex_count()) +
                                  "); use --anneal or raise --limit");
        pattern = exhaustive_exists(g, pool, ExhaustiveOptions{search_limit, true});
        method = "exhaustive";
        if (!pattern) {
          std::cout << "nonexistent (exhaustive): " << g.family().describe() << "\n";
          return kNonexistent;
        }
      } else {
        auto res = anneal_repair(g, pool, ParityPattern::all_odd(g.vertex_count()), search_seed, search_budget);
        method = "anneal";
        if (!res.pattern) {
          std::cout << "undecided: annealing found no balanced pattern after " << res.moves << " moves\n";
          return kNotCordial;
        }
        pattern = std::move(res.pattern);
      }
      const Labeling l = concretize(g, *pattern, pool);
      const auto r = verify(g, l);
      json summary{{"instance", g.family().describe()}, {"method", method}, {"report", io::report_to_json(r)}};
      if (!search_out.empty()) emit(search_out, io::labeling_to_json(g, l).dump(2) + "\n");
      else summary["labeling"] = io::labeling_to_json(g, l);
      std::cout << summary.dump(2) << "\n";
      return r.verdict == Verdict::cordial ? kOk : kNotCordial;
    }

    if (*sweep_cmd) {
      const auto fam = sweep::family_from_name(sweep_family);
      if (!fam) throw ParameterOutOfRange("unknown sweep family '" + sweep_family + "'");
      const auto [lo, hi] = parse_range(sweep_range);
      const auto [pn_lo, pn_hi] = parse_range(sweep_pn_range);
      sweep::Options opts;
      opts.repair.seed = sweep_seed;
      opts.timing = sweep_timing;
      const auto insts = sweep::instances(*fam, lo, hi, pn_lo, pn_hi);
      const auto result = sweep_serial ? sweep::run_serial(insts, opts) : sweep::run(insts, opts);
      const std::string table = sweep_format == "json" ? sweep::to_json(result.rows)
                                : sweep_format == "md" ? sweep::to_markdown(result.rows)
                                                       : sweep::to_csv(result.rows);
      emit(sweep_out, table);
      std::string log_path = sweep_log;
      if (log_path.empty() && !sweep_out.empty() && sweep_out != "-") log_path = sweep_out + ".discrepancies.jsonl";
      if (!log_path.empty()) io::write_text_file(log_path, sweep::to_jsonl(result.discrepancies));
      std::cerr << result.rows.size() << " rows, " << result.discrepancies.size() << " discrepancies\n";
      return kOk;
    }

    if (*export_cmd) {
      const Graph g = io::graph_from_json(io::read_json_file(export_graph));
      const Labeling l = io::labeling_from_json(g, io::read_json_file(export_labeling));
      emit(export_out, io::to_dot(g, l));
      return kOk;
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error at " << e.path() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
