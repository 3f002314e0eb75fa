#include <atomic>
#include <limits>

#include "oracle/subset_kernel.hpp"

namespace fibcordial::kernels {

namespace {

struct Block {
  unsigned top;     // highest set bit
  unsigned second;  // next set bit below `top`
};

}  // namespace

// Masks are grouped by their two highest set bits. Ordering blocks by
// (top, second) ascending matches numeric order, so the lowest block holding a
// witness holds the serial answer.
std::optional<std::uint64_t> first_balanced_subset_parallel(const std::vector<std::uint64_t>& adj,
                                                            std::size_t edge_count, unsigned size) {
  const auto n = static_cast<unsigned>(adj.size());
  if (size < 2 || n >= 64) return first_balanced_subset_serial(adj, edge_count, size);
  if (size > n) return std::nullopt;

  std::vector<Block> blocks;
  for (unsigned top = size - 1; top < n; ++top)
    for (unsigned second = size - 2; second < top; ++second) blocks.push_back({top, second});

  const auto block_count = static_cast<long>(blocks.size());
  std::vector<std::optional<std::uint64_t>> found(blocks.size());
  std::atomic<long> best{std::numeric_limits<long>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (long b = 0; b < block_count; ++b) {
    if (b > best.load(std::memory_order_relaxed)) continue;
    const auto [top, second] = blocks[static_cast<std::size_t>(b)];
    const std::uint64_t head = (std::uint64_t{1} << top) | (std::uint64_t{1} << second);
    const unsigned tail_bits = size - 2;
    const std::uint64_t first = head | detail::low_bits(tail_bits);
    const std::uint64_t end = head + (std::uint64_t{1} << second);
    auto hit = tail_bits == 0 ? (balanced_cut(edge_count, detail::cut_of(adj, head))
                                     ? std::optional<std::uint64_t>{head}
                                     : std::nullopt)
                              : detail::scan(adj, edge_count, first, end);
    if (hit) {
      found[static_cast<std::size_t>(b)] = hit;
      long cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
  }

  const long winner = best.load();
  if (winner == std::numeric_limits<long>::max()) return std::nullopt;
  return found[static_cast<std::size_t>(winner)];
}

}  // namespace fibcordial::kernels
