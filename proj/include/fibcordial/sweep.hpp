#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcordial/constructions.hpp"

namespace fibcordial::sweep {

enum class Family {
  gp1,
  helm,
  closed_helm,
  cycle_path,
  fan_path,
  circulant12,
  circulant123,
  circulant1234,
  complete,
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> family_from_name(std::string_view name) noexcept;
/// cycle_path and fan_path take a second parameter (path order).
bool is_two_parameter(Family f) noexcept;

struct Instance {
  Family family = Family::gp1;
  int n = 0;  // main order (cycle/fan order m for the joint sums)
  int pn = 0;  // path order for joint sums, 0 otherwise
  auto operator<=>(const Instance&) const = default;
  std::string parameters() const;  // "n=6" or "m=10;n=12"
};

enum class Source { formula, formula_repaired, oracle, obstruction };
std::string_view source_name(Source s) noexcept;

struct SweepRow {
  std::string family;
  std::string parameters;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t epsilon0 = 0;
  std::size_t epsilon1 = 0;
  std::string verdict;  // "cordial" or "not_cordial"
  Source source = Source::formula;
  std::string case_id;
  long long runtime_ms = 0;
};

enum class Resolution { repaired, unresolved };

struct DiscrepancyRecord {
  std::string instance;
  std::string theorem_case;
  std::string observed;
  Resolution resolution = Resolution::repaired;
  std::vector<PatternFlip> pattern_diff;
};

struct Options {
  RepairOptions repair;
  /// Record wall time per row. Off by default so outputs are byte-identical.
  bool timing = false;
};

struct Result {
  std::vector<SweepRow> rows;  // sorted by instance
  std::vector<DiscrepancyRecord> discrepancies;  // in row order
};

/// Whether the published result claims a cordial labeling for this instance.
bool claimed_cordial(const Instance& inst);

/// Runs one instance. Never throws for construction failures: nonexistence
/// becomes a not_cordial row, a claim the oracle contradicts or an
/// undecidable case becomes an unresolved record.
std::pair<SweepRow, std::optional<DiscrepancyRecord>> run_instance(const Instance& inst, const Options& opts);

/// Throws ParameterOutOfRange when the range starts below the family minimum.
std::vector<Instance> instances(Family f, int lo, int hi, int pn_lo = 1, int pn_hi = 1);

/// OpenMP over instances; rows are written into fixed slots so the output
/// matches run_serial exactly.
Result run(const std::vector<Instance>& insts, const Options& opts);
Result run_serial(const std::vector<Instance>& insts, const Options& opts);

/// Complete graphs K_1..K_hi: analytic feasibility against the cited
/// exception list. One record per disagreement.
std::vector<DiscrepancyRecord> complete_graph_claims(int hi);

std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<SweepRow>& rows);
std::string to_markdown(const std::vector<SweepRow>& rows);
std::string to_jsonl(const std::vector<DiscrepancyRecord>& records);

}  // namespace fibcordial::sweep
