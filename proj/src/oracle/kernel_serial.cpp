#include "oracle/subset_kernel.hpp"

namespace fibcordial::kernels {

std::optional<std::uint64_t> first_balanced_subset_serial(const std::vector<std::uint64_t>& adj,
                                                          std::size_t edge_count, unsigned size) {
  const auto n = static_cast<unsigned>(adj.size());
  if (size > n) return std::nullopt;
  if (size == 0) return balanced_cut(edge_count, 0) ? std::optional<std::uint64_t>{0} : std::nullopt;
  const std::uint64_t first = detail::low_bits(size);
  // Masks of popcount `size` strictly below 2^n; for n = 64 stop at the top mask.
  const std::uint64_t end = n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n;
  for (std::uint64_t x = first;; x = detail::next_combination(x)) {
    if (n < 64 && x >= end) break;
    if (balanced_cut(edge_count, detail::cut_of(adj, x))) return x;
    if (n >= 64 && x == (detail::low_bits(size) << (64 - size))) break;
  }
  return std::nullopt;
}

}  // namespace fibcordial::kernels
