#include "constructions/formula.hpp"
#include "fibcordial/errors.hpp"
#include "fibcordial/families.hpp"

namespace fibcordial {

using formula::ceil_div;
using formula::floor_div;

// Rim v_i, outer-cycle pendants u_i, apex v. The three residue cases share the
// u-bands and the first two v-bands; they differ in (p1, p2, p3), the floor
// offset of the third v-band, the terminal v-band and the apex subscript.
ConstructionOutcome label_closed_helm(int n, const RepairOptions& opts) {
  if (n < 3) throw ParameterOutOfRange("closed_helm: n must be >= 3");
  Graph g = build_closed_helm(n);
  formula::Builder b(g);

  const int r = n % 3;
  const long p = n / 3;
  long p1 = 0;
  long p2 = 0;
  long p3 = 0;
  long apex = 0;
  long band3_offset = 0;  // added inside floor((i + p3 + offset - n)/2)
  switch (r) {
    case 0:
      p2 = p3 = ceil_div(p, 2);
      p1 = 2 * (p - ceil_div(p, 2));
      apex = 2L * n + 1;
      band3_offset = 1;
      break;
    case 1:
      p2 = floor_div(p, 2);
      p3 = p2 + 1;
      p1 = 2 * p + 1 - p2 - p3;
      apex = 2L * n;
      band3_offset = 0;
      break;
    default:
      p2 = floor_div(p, 2);
      p3 = p2 + 2;
      p1 = 2 * (p - p2);
      apex = 2L * n;
      band3_offset = 1;
      break;
  }

  const auto u = [](long i) { return VertexId{Role::pendant, static_cast<int>(i)}; };
  const auto v = [](long i) { return VertexId{Role::rim, static_cast<int>(i)}; };

  for (long i = 1; i <= 2 * p1 && i <= n; ++i)
    b.assign(u(i), i % 2 == 0 ? 3 * i / 2 : floor_div(3 * i + 1, 4));
  for (long i = 2 * p1 + 1; i <= n; ++i) b.assign(u(i), ceil_div(3 * (i - p1) - 2, 2));

  for (long i = 1; i <= 2 * p2 && i <= n; ++i) {
    if (i % 2 == 1)
      b.assign(v(i), 3 * (2 * p1 + i + 1) / 2);
    else  // the free variable j in the printed rule is read as i
      b.assign(v(i), ceil_div(3 * (i / 2 + n - p1), 2) - 1);
  }
  for (long i = 2 * p2 + 1; i <= n - p3; ++i)
    b.assign(v(i), n + i + p3 + floor_div(i + p3 + band3_offset - n, 2) - 1);
  for (long i = std::max(1L, n - p3 + 1); i <= n; ++i) {
    switch (r) {
      case 0:
        b.assign(v(i), 2L * n - 3 * (n - i));
        break;
      case 1:
        b.assign(v(i), 2L * n + 1 - 3 * (n - i));
        break;
      default:
        b.assign(v(i), i == n ? 0 : 2L * n - 1 - 3 * (n - i - 2));
        break;
    }
  }
  b.assign({Role::apex, 0}, apex);

  ConstructionParams params{.p = static_cast<int>(p)};
  params.p1 = static_cast<int>(p1);
  params.p2 = static_cast<int>(p2);
  params.p3 = static_cast<int>(p3);
  static constexpr const char* kResidue[] = {"n=3p", "n=3p+1", "n=3p+2"};
  return finalize(std::move(g), std::move(b.labeling()), params, std::string("closed_helm/") + kResidue[r],
                  std::move(b.notes()), opts);
}

}  // namespace fibcordial
