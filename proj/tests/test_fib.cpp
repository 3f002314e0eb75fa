#include <doctest.h>

#include "fibcordial/errors.hpp"
#include "fibcordial/fib.hpp"
#include "support/brute.hpp"

using namespace fibcordial;

TEST_CASE("fib_value small terms") {
  const unsigned expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (unsigned i = 0; i < 13; ++i) CHECK(fib_value(FibIndex{i}) == expected[i]);
}

TEST_CASE("fib_value is exact beyond 64 bits") {
  // F_100 = 354224848179261915075
  CHECK(fib_value(FibIndex{100}).str() == "354224848179261915075");
}

TEST_CASE("parity rule agrees with the values") {
  for (unsigned i = 0; i <= 400; ++i) {
    const bool value_odd = fib_value(FibIndex{i}) % 2 == 1;
    CHECK(value_odd == (fib_parity(FibIndex{i}) == Parity::odd));
    CHECK(value_odd == fibtest::fib_value_odd(i));
  }
}

TEST_CASE("pool capacities") {
  const auto p = pool_for(12);
  CHECK(p.max_index == 12);
  CHECK(p.even_capacity == 5);  // 0,3,6,9,12
  CHECK(p.odd_capacity == 8);
  CHECK(p.contains(FibIndex{12}));
  CHECK_FALSE(p.contains(FibIndex{13}));
  for (std::uint32_t m = 0; m < 60; ++m) {
    const auto q = LabelPool::with_max(m);
    std::uint32_t evens = 0;
    for (std::uint32_t i = 0; i <= m; ++i) evens += fibtest::fib_value_odd(i) ? 0 : 1;
    CHECK(q.even_capacity == evens);
    CHECK(q.even_capacity + q.odd_capacity == m + 1);
  }
  CHECK_THROWS_AS(pool_for(0), ParameterOutOfRange);
}
