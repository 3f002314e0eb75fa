#include "constructions/formula.hpp"
#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"

namespace fibcordial {

using formula::ceil_div;
using formula::floor_div;

namespace {

// Cycle rule: swaps the pairs (6,7), (8,9), (11,12) inside each block of 12.
long cycle_rule(long i) {
  switch (i % 12) {
    case 6:
    case 8:
    case 11:
      return i + 1;
    case 0:
    case 7:
    case 9:
      return i - 1;
    default:
      return i;
  }
}

// Path rule for m = 2 (mod 4), written in terms of j = i + m.
long path_rule_m2(long j) {
  switch (j % 12) {
    case 7:
    case 9:
    case 0:
      return j;
    case 8:
    case 10:
    case 1:
      return j - 2;
    default:
      return j - 1;
  }
}

// Offset of the path subscript from j + m, per fan residue m mod 6.
long fan_path_offset(int residue, long j) {
  const long r = j % 12;
  switch (residue) {
    case 0:
      if (r == 6 || r == 9 || r == 10) return 1;
      if (r == 7) return -1;
      if (r == 11) return -2;
      return 0;
    case 1:
      if (r == 2 || r == 4 || r == 7) return 1;
      if (r == 3 || r == 5 || r == 8) return -1;
      return 0;
    case 2:
      if (r == 3) return -2;
      if (r == 11) return -1;
      if (r == 1 || r == 2 || r == 10) return 1;
      return 0;
    case 3:
      if (r == 2 || r == 11) return -2;
      if (r == 7) return -1;
      if (r == 3 || r == 4 || r == 5 || r == 8) return 0;
      return 1;
    case 4:
      if (r == 0 || r == 3 || r == 10) return -1;
      if (r == 1 || r == 4 || r == 11) return 1;
      return 0;
    default:
      if (r == 0 || r == 3 || r == 10) return 1;
      if (r == 1 || r == 4 || r == 11) return -1;
      return 0;
  }
}

}  // namespace

ConstructionOutcome label_cycle_path(int m, int n, const RepairOptions& opts) {
  if (m < 3) throw ParameterOutOfRange("cycle_path: m must be >= 3");
  if (n < 1) throw ParameterOutOfRange("cycle_path: n must be >= 1");
  Graph g = joint_sum(build_cycle(m), {Role::cycle, m}, build_path(n), {Role::path, 1});
  formula::Builder b(g);

  for (long i = 1; i <= m; ++i) b.assign({Role::cycle, static_cast<int>(i)}, i == m ? 0 : cycle_rule(i));
  const bool stated = m % 4 == 2;
  for (long i = 1; i <= n; ++i)
    b.assign({Role::path, static_cast<int>(i)}, stated ? path_rule_m2(i + m) : cycle_rule(m + i));
  if (!stated) b.note("path labels continue the cycle rule at position m + i");

  std::string case_id = stated ? "cycle_path/m=2mod4" : "cycle_path/m!=2mod4/continued";
  return finalize(std::move(g), std::move(b.labeling()), ConstructionParams{}, std::move(case_id),
                  std::move(b.notes()), opts);
}

ConstructionOutcome label_fan_path(int m, int n, const RepairOptions& opts) {
  if (m < 2) throw ParameterOutOfRange("fan_path: m must be >= 2");
  if (n < 1) throw ParameterOutOfRange("fan_path: n must be >= 1");
  Graph g = joint_sum(build_fan(m), {Role::apex, 0}, build_path(n), {Role::path, 1});
  formula::Builder b(g);

  const int residue = m % 6;
  const long p = m / 6;
  static constexpr long kP1Offset[] = {0, 1, 2, 3, 2, 2};
  static constexpr long kP2Offset[] = {0, 0, 0, 0, 1, 1};
  const long p1 = 3 * p + kP1Offset[residue];
  const long p2 = p + kP2Offset[residue];

  const auto u = [](long j) { return VertexId{Role::rim, static_cast<int>(j)}; };
  b.assign({Role::apex, 0}, 0);
  for (long j = 1; j <= p1 + 1 && j <= m; ++j) b.assign(u(j), j + ceil_div(j - 2, 2));
  for (long j = p1 + 2; j <= p1 + 2 * p2 && j <= m; ++j)
    if ((j - p1) % 2 == 0) b.assign(u(j), 3 * (j - p1) / 2);
  for (long j = p1 + 2 * p2 + 1; j <= m; ++j) b.assign(u(j), 3 * (j - p2 - p1));
  for (long j = p1 + 3; j <= p1 + 2 * p2 - 1 && j <= m; ++j)
    if ((j - p1) % 2 != 0) b.assign(u(j), floor_div(3 * (j + p1 + 3), 2) - 2);

  // Path subscripts are offset by the fan order m.
  for (long j = 1; j <= n; ++j) b.assign({Role::path, static_cast<int>(j)}, j + m + fan_path_offset(residue, j));

  ConstructionParams params{.p = static_cast<int>(p), .k_residue = residue};
  params.p1 = static_cast<int>(p1);
  params.p2 = static_cast<int>(p2);
  static constexpr const char* kCase[] = {"m=6p", "m=6p+1", "m=6p+2", "m=6p+3", "m=6p+4", "m=6p+5"};
  return finalize(std::move(g), std::move(b.labeling()), params, std::string("fan_path/") + kCase[residue],
                  std::move(b.notes()), opts);
}

}  // namespace fibcordial
