#include <array>
#include <span>

#include "fibcordial/constructions.hpp"
#include "fibcordial/families.hpp"

namespace fibcordial {

namespace {

constexpr std::array<std::pair<Figure, std::string_view>, 6> kNames{{
    {Figure::fig1_gp61, "gp61"},
    {Figure::fig2_h4, "h4"},
    {Figure::fig3_ch14, "ch14"},
    {Figure::fig4_c10p10, "c10p10"},
    {Figure::fig5_f10p12, "f10p12"},
    {Figure::fig6_circ8, "circ8"},
}};

void put(const Graph& g, Labeling& l, Role role, int first, std::span<const std::uint32_t> subscripts) {
  int i = first;
  for (auto s : subscripts) l.set(g, {role, i++}, FibIndex{s});
}

using List = std::initializer_list<std::uint32_t>;

}  // namespace

std::string_view figure_name(Figure f) noexcept {
  for (const auto& [fig, name] : kNames)
    if (fig == f) return name;
  return "?";
}

std::optional<Figure> figure_from_name(std::string_view name) noexcept {
  for (const auto& [fig, n] : kNames)
    if (n == name) return fig;
  return std::nullopt;
}

FigureInstance figure_labeling(Figure which) {
  Graph g = [which] {
    switch (which) {
      case Figure::fig1_gp61: return build_gp(6, 1);
      case Figure::fig2_h4: return build_helm(4);
      case Figure::fig3_ch14: return build_closed_helm(14);
      case Figure::fig4_c10p10: return joint_sum(build_cycle(10), {Role::cycle, 10}, build_path(10), {Role::path, 1});
      case Figure::fig5_f10p12: return joint_sum(build_fan(10), {Role::apex, 0}, build_path(12), {Role::path, 1});
      case Figure::fig6_circ8: break;
    }
    return build_circulant(8, {1, 2});
  }();
  Labeling l = Labeling::empty_for(g);

  const auto set = [&](Role role, int first, List subs) {
    put(g, l, role, first, std::span<const std::uint32_t>(subs.begin(), subs.size()));
  };
  switch (which) {
    case Figure::fig1_gp61:
      set(Role::outer, 1, {5, 10, 8, 6, 7, 3});
      set(Role::inner, 1, {1, 0, 12, 9, 4, 2});
      break;
    case Figure::fig2_h4:
      set(Role::apex, 0, {7});
      set(Role::rim, 1, {5, 4, 3, 0});
      set(Role::pendant, 1, {6, 2, 1, 9});
      break;
    case Figure::fig3_ch14:
      set(Role::apex, 0, {28});
      set(Role::rim, 1, {17, 19, 20, 22, 23, 25, 26, 24, 27, 0, 21, 13, 14, 16});
      set(Role::pendant, 1, {4, 9, 5, 12, 7, 15, 8, 18, 10, 11, 1, 3, 2, 6});
      break;
    case Figure::fig4_c10p10:
      set(Role::cycle, 1, {1, 2, 3, 4, 5, 7, 8, 6, 9, 0});
      set(Role::path, 1, {10, 12, 11, 13, 14, 15, 16, 17, 19, 18});
      break;
    case Figure::fig5_f10p12:
      set(Role::apex, 0, {0});
      set(Role::rim, 1, {1, 2, 4, 5, 7, 8, 3, 10, 6, 9});
      set(Role::path, 1, {12, 11, 13, 14, 15, 16, 17, 19, 18, 20, 22, 21});
      break;
    case Figure::fig6_circ8:
      set(Role::plain, 0, {0, 3, 1, 6, 2, 4, 5, 7});
      break;
  }
  return {std::move(g), std::move(l)};
}

}  // namespace fibcordial
