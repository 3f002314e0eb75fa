#include "constructions/formula.hpp"
#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"

namespace fibcordial {

// Position i of the printed schedules (1-based) is vertex v_{i-1}; every
// schedule assigns even subscripts only and the remaining vertices take the
// unused odd subscripts in ascending order.

namespace {

VertexId at_position(long i) { return {Role::plain, static_cast<int>(i - 1)}; }

[[noreturn]] void throw_obstructed(const Graph& g) {
  auto cert = even_degree_obstruction(g);
  if (!cert) throw std::logic_error(g.family().describe() + ": expected an even-degree obstruction");
  throw NonexistenceError(g.family().describe(), *cert);
}

ConstructionOutcome from_search(Graph g, std::string case_id, const RepairOptions& opts) {
  ConstructionOutcome out = label_by_search(g, opts);
  out.case_id = std::move(case_id);
  return out;
}

}  // namespace

ConstructionOutcome label_circulant_12(int n, const RepairOptions& opts) {
  if (n < 4) throw ParameterOutOfRange("circulant12: n must be >= 4");
  Graph g = build_circulant(n, {1, 2});
  if (n % 2 == 1) throw_obstructed(g);
  // n = 4 collapses to K_4, outside the schedule's range.
  if (n == 4) return from_search(std::move(g), "circulant12/search/n=4", opts);

  formula::Builder b(g);
  const long last = formula::floor_div(2L * (n - 2), 3);
  for (long i = 1; i <= last; ++i) {
    if (i == 1)
      b.assign(at_position(i), 0);
    else if (i == 2)
      b.assign(at_position(i), 3);
    else if (i % 4 == 0)
      b.assign(at_position(i), 3 * i / 2);
    else if (i % 4 == 1)
      b.assign(at_position(i), 3 * (i + 1) / 2);
  }
  if (n % 6 == 4) b.assign(at_position((2L * n - 5) / 3), n - 1);
  if (n % 6 == 0) b.assign(at_position(2L * n / 3), n);
  b.fill_odd_ascending();

  ConstructionParams params{.k_residue = n % 6};
  return finalize(std::move(g), std::move(b.labeling()), params,
                  "circulant12/n=" + std::to_string(n % 6) + "mod6", std::move(b.notes()), opts);
}

ConstructionOutcome label_circulant_123(int n, const RepairOptions& opts) {
  if (n < 6) throw ParameterOutOfRange("circulant123: n must be >= 6");
  Graph g = build_circulant(n, {1, 2, 3});
  if (n != 6 && n % 4 == 2) throw_obstructed(g);
  if (n <= 28) return from_search(std::move(g), "circulant123/search", opts);

  formula::Builder b(g);
  for (long i : {2L, 6L, 10L, 14L}) b.assign(at_position(i), 3 * i / 2);
  for (long i : {1L, 5L, 9L, 13L, 17L}) b.assign(at_position(i), 3 * (i - 1) / 2);

  // Band from 21 upward, residues mod 9. The residue-8 subscript is printed
  // as (4i+5)/3, which is never an integer; it is read as (4i+4)/3, which
  // continues the progression of the other three residues.
  const auto band = [&](long i) {
    switch (i % 9) {
      case 3: b.assign(at_position(i), (4 * i - 3) / 3); break;
      case 4: b.assign(at_position(i), (4 * i + 2) / 3); break;
      case 7: b.assign(at_position(i), (4 * i - 1) / 3); break;
      case 8: b.assign(at_position(i), (4 * i + 4) / 3); break;
      default: break;
    }
  };
  const long nn = n;
  const int r = n % 12;
  switch (r) {
    case 1:
    case 3:
    case 4:
      for (long i = 21; 4 * i < 3 * (nn - 1); ++i) band(i);
      if (r == 3) b.assign(at_position(3 * (nn - 3) / 4), nn);
      if (r == 4) b.assign(at_position((3 * nn - 4) / 4), nn - 1);
      break;
    case 5:
      for (long i = 21; 4 * i <= 3 * (nn - 1); ++i) band(i);
      break;
    case 7:
      for (long i = 21; 4 * i < 3 * (nn - 7); ++i) band(i);
      b.assign(at_position(3 * (nn - 7) / 4), nn - 4);
      b.assign(at_position((3 * nn - 5) / 4), nn - 1);
      break;
    case 8:
    case 9:
      for (long i = 21; 4 * i <= 3 * nn - 8; ++i) band(i);
      if (r == 9) b.assign(at_position((3 * nn - 7) / 4), nn);
      break;
    case 11:
      for (long i = 21; 4 * i <= 3 * nn - 5; ++i) band(i);
      break;
    default:  // n = 0 (mod 12)
      for (long i = 21; i <= 3 * nn / 4 - 5; ++i) band(i);
      b.assign(at_position(3 * nn / 4 - 4), nn - 3);
      b.assign(at_position(3 * nn / 4 - 1), nn);
      break;
  }
  b.fill_odd_ascending();

  ConstructionParams params{.k_residue = r};
  return finalize(std::move(g), std::move(b.labeling()), params,
                  "circulant123/n=" + std::to_string(r) + "mod12", std::move(b.notes()), opts);
}

ConstructionOutcome label_circulant_1234(int n, const RepairOptions& opts) {
  if (n < 9) throw ParameterOutOfRange("circulant1234: n must be >= 9");
  Graph g = build_circulant(n, {1, 2, 3, 4});
  if (n == 9) return from_search(std::move(g), "circulant1234/search/n=9", opts);

  formula::Builder b(g);
  if (n == 10) {
    for (long i = 0; i < n; ++i) b.assign({Role::plain, static_cast<int>(i)}, i);
    return finalize(std::move(g), std::move(b.labeling()), ConstructionParams{}, "circulant1234/n=10",
                    std::move(b.notes()), opts);
  }

  const long nn = n;
  long bound = 0;
  switch (n % 6) {
    case 3: bound = (5 * nn - 9) / 6; break;
    case 0: bound = 5 * nn / 6 - 3; break;
    case 1: bound = (5 * nn - 23) / 6; break;
    case 4: bound = (5 * nn - 14) / 6; break;
    case 2: bound = (5 * nn - 10) / 6; break;
    default: bound = (5 * nn - 19) / 6; break;
  }

  const int r = n % 3;
  for (long i = 1; i <= bound; ++i) {
    const auto v = at_position(i);
    if (r == 0) {
      if (i <= 4) b.assign(v, 3 * (i - 1));
      else if (i == 7) b.assign(v, 9);
      else if (i > 7 && i % 5 == 1) b.assign(v, 3 * (2 * i + 3) / 5);
      else if (i > 7 && i % 5 == 2) b.assign(v, 3 * (2 * i + 6) / 3);
    } else if (r == 1) {
      if (i <= 3) b.assign(v, 3 * (i - 1));
      else if (i == 6) b.assign(v, 9);
      else if (i == 7) b.assign(v, 12);
      else if (i > 7 && i % 5 == 1) b.assign(v, 3 * (2 * i + 3) / 5);
      else if (i > 7 && i % 5 == 2) b.assign(v, 3 * (2 * i + 6) / 3);
    } else {
      if (i <= 3) b.assign(v, 3 * (i - 1));
      else if (i == 6) b.assign(v, 9);
      else if (i > 6 && i % 5 == 0) b.assign(v, 6 * i / 5);
      else if (i > 6 && i % 5 == 1) b.assign(v, 3 * (2 * i + 3) / 3);
    }
  }
  b.fill_odd_ascending();

  ConstructionParams params{.k_residue = n % 6};
  params.ell = static_cast<int>(bound);
  return finalize(std::move(g), std::move(b.labeling()), params,
                  "circulant1234/n=" + std::to_string(r) + "mod3", std::move(b.notes()), opts);
}

}  // namespace fibcordial
