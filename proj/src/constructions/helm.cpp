#include "constructions/formula.hpp"
#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"

namespace fibcordial {

using formula::ceil_div;
using formula::floor_div;

namespace {

VertexId rim(long i) { return {Role::rim, static_cast<int>(i)}; }
VertexId pendant(long i) { return {Role::pendant, static_cast<int>(i)}; }
constexpr VertexId kApex{Role::apex, 0};

// n = 4 is taken verbatim from the published drawing.
ConstructionOutcome helm_four(const RepairOptions& opts) {
  FigureInstance fig = figure_labeling(Figure::fig2_h4);
  return finalize(std::move(fig.graph), std::move(fig.labeling), ConstructionParams{}, "helm/special/n=4",
                  {}, opts);
}

// n = 8 and n = 16: pendants follow i + ceil((i-2)/2), the rim is two bands,
// and the apex takes the top subscript (F_17 / F_32).
ConstructionOutcome helm_special(int n, const RepairOptions& opts) {
  Graph g = build_helm(n);
  formula::Builder b(g);
  // p2 from the general rules, using the branch that yields a valid count:
  // n = 8 is 3p+2 with p = 2 (p1 = 1); n = 16 is 3p+1 with p = 5, where
  // p1 = (p-9)/4 would be negative, so floor((p-1)/4) is used.
  const long p = n / 3;
  const long p1 = n == 8 ? 1 : floor_div(p - 1, 4);
  const long p3 = 0;
  const long p2 = 2 * p + 2 - p1 - p3;
  b.note("special-case p2 = " + std::to_string(p2) + " taken from the general rule with p1 = " +
         std::to_string(p1));

  for (long i = 1; i <= n; ++i) b.assign(pendant(i), i + ceil_div(i - 2, 2));
  for (long i = 1; i <= p2; ++i) b.assign(rim(i), 3 * (i - 1));
  for (long i = p2 + 1; i <= n; ++i) b.assign(rim(i), i + n - p2 - 1 + ceil_div(i + n - p2, 2));
  b.assign(kApex, n == 8 ? 17 : 32);

  ConstructionParams params{.p = static_cast<int>(p)};
  params.p1 = static_cast<int>(p1);
  params.p2 = static_cast<int>(p2);
  params.p3 = static_cast<int>(p3);
  return finalize(std::move(g), std::move(b.labeling()), params, "helm/special/n=" + std::to_string(n),
                  std::move(b.notes()), opts);
}

}  // namespace

ConstructionOutcome label_helm(int n, const RepairOptions& opts) {
  if (n < 3) throw ParameterOutOfRange("helm: n must be >= 3");
  if (n == 4) return helm_four(opts);
  if (n == 8 || n == 16) return helm_special(n, opts);

  Graph g = build_helm(n);
  formula::Builder b(g);

  const int r = n % 3;
  const long p = n / 3;
  const long p3 = n % 4 == 0 ? 0 : 1;
  long p1 = 0;
  long p2 = 0;
  switch (r) {
    case 0:
      p1 = floor_div(p - 1, 4);
      p2 = 2 * p - p1;
      break;
    case 1:
      p1 = p % 4 == 1 ? (p - 9) / 4 : floor_div(p - 1, 4);
      p2 = 2 * p + 2 - p1 - p3;
      break;
    default:
      p1 = p == 2 ? 1 : (p % 4 == 2 && p > 2) ? (p - 6) / 4 : floor_div(p + 1, 4);
      p2 = 2 * p + 2 - p1 - p3;
      break;
  }

  for (long i = 1; i <= p2 && i <= n; ++i) b.assign(rim(i), 3 * (i - 1));
  for (long i = p2 + 1; i <= n - 2 * p1; ++i) {
    const long t = i + n - p2;
    b.assign(rim(i), t + ceil_div(t - 5, 2));
  }
  for (long i = std::max(1L, n + 1 - 2 * p1); i <= n - 1; ++i) {
    const long half = ceil_div(i + 2 * p1 - n, 2);
    if ((n - i) % 2 == 1) {
      b.assign(rim(i), p3 == 1 ? 3 * (p2 + half) : 3 * (p2 - 1 + half));
    } else {
      b.assign(rim(i), (3 * n + i) / 2 - p1 - p2 + ceil_div(3 * n + i - 2 * p1 - 2 * p2 - 10, 4));
    }
  }
  if (p1 > 0) b.note("rim vertex v_n is not covered by any band when p1 > 0");

  b.assign(pendant(1), p3 == 1 ? 3 * p2 : 3 * n - p1 - p2 - 1 + ceil_div(-p1 - p2, 2));
  for (long i = 2; i <= n; ++i) b.assign(pendant(i), i + ceil_div(i - 5, 2));
  b.assign(kApex, p3 == 0 ? 3 * n + 1 - p1 - p2 + ceil_div(-p1 - p2 - 1, 2)
                          : 3 * n - p1 - p2 - 1 + ceil_div(-p1 - p2, 2));

  ConstructionParams params{.p = static_cast<int>(p)};
  params.p1 = static_cast<int>(p1);
  params.p2 = static_cast<int>(p2);
  params.p3 = static_cast<int>(p3);
  static constexpr const char* kResidue[] = {"n=3p", "n=3p+1", "n=3p+2"};
  return finalize(std::move(g), std::move(b.labeling()), params, std::string("helm/") + kResidue[r],
                  std::move(b.notes()), opts);
}

}  // namespace fibcordial
