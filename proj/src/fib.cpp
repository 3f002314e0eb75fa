#include "fibcordial/fib.hpp"

#include "fibcordial/errors.hpp"

namespace fibcordial {

BigNatural fib_value(FibIndex i) {
  BigNatural prev = 0;
  BigNatural cur = 1;
  if (i.value == 0) return prev;
  for (std::uint32_t k = 1; k < i.value; ++k) {
    BigNatural next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LabelPool pool_for(std::size_t vertex_count) {
  if (vertex_count == 0) throw ParameterOutOfRange("pool_for: vertex_count must be >= 1");
  return LabelPool::with_max(static_cast<std::uint32_t>(vertex_count));
}

}  // namespace fibcordial
