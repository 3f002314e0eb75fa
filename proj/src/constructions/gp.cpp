#include "constructions/formula.hpp"
#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"

namespace fibcordial {

using formula::ceil_div;
using formula::floor_div;

namespace {

// Per-residue tables for GP(n,1), n = 3p + r, k = p mod 4.
struct GpCase {
  long p1 = 0;
  long p2 = 0;
  bool last_outer_zero = false;  // u_n gets F_0 instead of F_{3(p1+p2)}
  long ell = 0;
};

GpCase gp_case(int r, long p, int k, formula::Builder& b) {
  GpCase c;
  switch (r) {
    case 0:
      c.p1 = k == 3 ? (5 * p + 1) / 4 : (5 * p - k) / 4;
      c.p2 = k == 2 ? 2 * p + 1 - c.p1 : 2 * p - c.p1;
      c.last_outer_zero = k == 2;
      c.ell = k <= 1 ? floor_div(3 * p, 8) : k == 2 ? floor_div(3 * (p - 5), 8) : floor_div(3 * (p + 1), 8);
      break;
    case 1:
      c.p1 = k <= 1 ? (5 * p - k) / 4 : k == 2 ? (5 * p + 2) / 4 : (5 * p + 1) / 4;
      c.p2 = k == 3 ? 2 * p + 1 - c.p1 : 2 * p - c.p1;
      c.last_outer_zero = k == 3;
      c.ell = k == 0   ? floor_div(3 * (p + 2), 8)
              : k == 1 ? floor_div(3 * (p + 1), 8)
              : k == 2 ? floor_div(3 * (p + 4), 8)
                       : floor_div(3 * (p - 1), 8);
      break;
    default:
      if (k == 3) {
        c.p1 = floor_div(5 * p, 4);
        b.note("p1 = 5p/4 is not an integer for p = 3 (mod 4); floor taken");
      } else {
        c.p1 = k == 0 ? 5 * p / 4 + 1 : k == 1 ? (5 * p + 3) / 4 : (5 * p + 2) / 4;
      }
      c.p2 = k == 2 ? 2 * p + 2 - c.p1 : 2 * p + 1 - c.p1;
      c.last_outer_zero = k == 3;
      c.ell = k == 0   ? floor_div(3 * (p + 3), 8)
              : k == 1 ? floor_div(3 * (p + 2), 8)
              : k == 2 ? floor_div(3 * (p - 3), 8)
                       : floor_div(3 * (p + 4), 8);
      break;
  }
  return c;
}

// Inner labels for 2p1 + 1 <= i <= n.
long inner_tail(int r, int k, long n, long i) {
  switch (r) {
    case 0:
      return k == 2 ? n + i - 2 - ceil_div(n - i, 2) : floor_div(n + 3 * i - 1, 2);
    case 1:
      return k == 3 ? n + i - 1 - ceil_div(n - i, 2) : n + i - floor_div(n - i, 2);
    default:
      return k == 2 ? n + i - 2 - floor_div(n - i, 2) : n + i - ceil_div(n - i, 2);
  }
}

}  // namespace

ConstructionOutcome label_gp_n1(int n, const RepairOptions& opts) {
  if (n < 3) throw ParameterOutOfRange("gp1: n must be >= 3");
  Graph g = build_gp(n, 1);
  formula::Builder b(g);

  const int r = n % 3;
  const long p = n / 3;
  const int k = static_cast<int>(p % 4);
  GpCase c = gp_case(r, p, k, b);

  ConstructionParams params{.p = static_cast<int>(p), .k_residue = k};
  params.p1 = static_cast<int>(c.p1);
  params.p2 = static_cast<int>(c.p2);
  while (c.ell < 0) {
    ++c.ell;
    ++params.ell_adjustments;
  }
  params.ell = static_cast<int>(c.ell);
  if (params.ell_adjustments > 0)
    b.note("ell raised to " + std::to_string(c.ell) + " after " + std::to_string(params.ell_adjustments) +
           " increment(s)");

  const auto outer = [](long i) { return VertexId{Role::outer, static_cast<int>(i)}; };
  const auto inner = [](long i) { return VertexId{Role::inner, static_cast<int>(i)}; };
  const long p1 = c.p1;
  const long p2 = c.p2;

  for (long i = 1; i <= n - p2 && i <= n; ++i) b.assign(outer(i), floor_div(3 * i - 1, 2));
  for (long i = std::max(1L, n + 1 - p2); i <= n - 1; ++i) b.assign(outer(i), 3 * (p1 + p2 + i - n));
  b.assign(outer(n), c.last_outer_zero ? 0 : 3 * (p1 + p2));

  for (long i = 2; i <= 2 * p1 && i <= n; i += 2) b.assign(inner(i), 3 * i / 2);
  for (long i = std::max(1L, 2 * p1 + 1); i <= n; ++i) b.assign(inner(i), inner_tail(r, k, n, i));

  if (n - p2 >= 1 && n - p2 <= n) b.assign(outer(n - p2), k);

  // Odd inner labels below 2p1: the residue case n = 3p + 1 swaps which rule
  // goes with k = 1 and k = 2 (mod 3). k = 0 (mod 3) has no rule.
  const int k3 = k % 3;
  const bool quarter_rule = r == 1 ? k3 == 2 : k3 == 1;
  const bool half_rule = r == 1 ? k3 == 1 : k3 == 2;
  if (!quarter_rule && !half_rule)
    b.note("no rule for odd inner labels when k = " + std::to_string(k) + " (k = 0 mod 3)");
  for (long i = 1; i <= 2 * p1 - 1 && i <= n; i += 2) {
    if (quarter_rule)
      b.assign(inner(i), n + i + c.ell - floor_div(i, 4));
    else if (half_rule)
      b.assign(inner(i), n + i + c.ell - ceil_div(n - i, 2));
  }

  static constexpr const char* kResidue[] = {"n=3p", "n=3p+1", "n=3p+2"};
  std::string case_id = std::string("gp1/") + kResidue[r] + "/k=" + std::to_string(k);
  return finalize(std::move(g), std::move(b.labeling()), params, std::move(case_id), std::move(b.notes()),
                  opts);
}

}  // namespace fibcordial
