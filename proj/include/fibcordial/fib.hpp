#pragma once

#include <compare>
#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace fibcordial {

enum class Parity : std::uint8_t { even, odd };

/// Subscript i standing for the label F_i.
struct FibIndex {
  std::uint32_t value = 0;

  constexpr FibIndex() = default;
  constexpr explicit FibIndex(std::uint32_t v) : value(v) {}
  constexpr auto operator<=>(const FibIndex&) const = default;
};

using BigNatural = boost::multiprecision::cpp_int;

/// Exact F_i by iterating the recurrence.
BigNatural fib_value(FibIndex i);

/// F_i is even exactly when 3 divides i.
constexpr Parity fib_parity(FibIndex i) noexcept {
  return i.value % 3 == 0 ? Parity::even : Parity::odd;
}

/// The admissible label subscripts {0, ..., max_index} split by parity.
struct LabelPool {
  std::uint32_t max_index = 0;
  std::uint32_t even_capacity = 1;
  std::uint32_t odd_capacity = 0;

  static constexpr LabelPool with_max(std::uint32_t max_index) noexcept {
    LabelPool p;
    p.max_index = max_index;
    p.even_capacity = max_index / 3 + 1;
    p.odd_capacity = max_index + 1 - p.even_capacity;
    return p;
  }

  constexpr bool contains(FibIndex i) const noexcept { return i.value <= max_index; }
  constexpr bool operator==(const LabelPool&) const = default;
};

/// Pool for a graph with `vertex_count` vertices: {F_0, ..., F_|V|}, one spare index.
LabelPool pool_for(std::size_t vertex_count);

}  // namespace fibcordial
