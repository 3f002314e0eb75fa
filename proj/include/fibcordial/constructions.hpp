#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibcordial/graph.hpp"
#include "fibcordial/oracle.hpp"
#include "fibcordial/verifier.hpp"

namespace fibcordial {

/// Thrown when a requested instance provably has no labeling.
class NonexistenceError : public std::runtime_error {
 public:
  NonexistenceError(const std::string& instance, ObstructionCertificate cert)
      : std::runtime_error(instance + ": " + cert.conclusion), instance_(instance), certificate_(std::move(cert)) {}
  const std::string& instance() const noexcept { return instance_; }
  const ObstructionCertificate& certificate() const noexcept { return certificate_; }

 private:
  std::string instance_;
  ObstructionCertificate certificate_;
};

/// Case parameters used by a construction. Fields a case does not use stay 0.
struct ConstructionParams {
  int p = 0;
  int k_residue = 0;
  int p1 = 0;
  int p2 = 0;
  int p3 = 0;
  int ell = 0;
  int ell_adjustments = 0;  // how many times ell was incremented to reach >= 0
};

/// One vertex whose parity differs between formula output and repaired pattern.
struct PatternFlip {
  VertexId vertex;
  bool to_even = false;
};

/// What went wrong with the literal formula and how it was resolved.
struct RepairDetail {
  Labeling formula_labeling;
  VerificationReport formula_report;
  std::vector<PatternFlip> flips;
  std::string method;  // "anneal" or "exhaustive"
};

struct ConstructionOutcome {
  Graph graph;
  Labeling labeling;
  ConstructionParams params;
  std::string case_id;
  VerificationReport report;
  bool repaired = false;
  std::optional<std::string> discrepancy;
  std::optional<RepairDetail> repair;
  /// Non-fatal remarks such as ell adjustments or oracle-only cases.
  std::vector<std::string> notes;
  /// True when no formula exists for the case and the labeling came from search.
  bool from_oracle = false;
};

struct RepairOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 400000;
  std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
};

ConstructionOutcome label_gp_n1(int n, const RepairOptions& opts = {});
ConstructionOutcome label_helm(int n, const RepairOptions& opts = {});
ConstructionOutcome label_closed_helm(int n, const RepairOptions& opts = {});
ConstructionOutcome label_cycle_path(int m, int n, const RepairOptions& opts = {});
ConstructionOutcome label_fan_path(int m, int n, const RepairOptions& opts = {});
/// Throws NonexistenceError for odd n >= 5.
ConstructionOutcome label_circulant_12(int n, const RepairOptions& opts = {});
/// Throws NonexistenceError for n = 2 (mod 4), n != 6.
ConstructionOutcome label_circulant_123(int n, const RepairOptions& opts = {});
ConstructionOutcome label_circulant_1234(int n, const RepairOptions& opts = {});

/// K_n from the analytic even-count window; exact for every n. Throws
/// NonexistenceError (complete_count) when no count balances.
ConstructionOutcome label_complete(int n);

/// Any graph without a formula: obstruction check, then exhaustive search when
/// small enough, else annealing from the all-odd pattern. Throws
/// NonexistenceError on a certificate or an exhaustive negative; throws
/// std::runtime_error if annealing alone cannot decide.
ConstructionOutcome label_by_search(const Graph& g, const RepairOptions& opts = {});

enum class Figure { fig1_gp61, fig2_h4, fig3_ch14, fig4_c10p10, fig5_f10p12, fig6_circ8 };

std::string_view figure_name(Figure f) noexcept;
std::optional<Figure> figure_from_name(std::string_view name) noexcept;
inline constexpr Figure kAllFigures[] = {Figure::fig1_gp61,   Figure::fig2_h4,
                                         Figure::fig3_ch14,   Figure::fig4_c10p10,
                                         Figure::fig5_f10p12, Figure::fig6_circ8};

struct FigureInstance {
  Graph graph;
  Labeling labeling;
};

/// Vertex assignment transcribed from the published drawing.
FigureInstance figure_labeling(Figure which);

/// Verifies a formula labeling and, on failure, repairs it from its parity
/// pattern. Shared by every construction; exposed for tests.
ConstructionOutcome finalize(Graph g, Labeling formula, ConstructionParams params,
                             std::string case_id, std::vector<std::string> notes,
                             const RepairOptions& opts);

}  // namespace fibcordial
