#pragma once

#include <string>
#include <vector>

#include "fibcordial/constructions.hpp"

namespace fibcordial::formula {

constexpr long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

/// Collects a formula's vertex assignments. Later assignments overwrite
/// earlier ones; negative subscripts are noted and left unassigned so that
/// verification reports them.
class Builder {
 public:
  explicit Builder(const Graph& g) : graph_(g), labeling_(Labeling::empty_for(g)) {}

  void assign(const VertexId& v, long subscript) {
    if (subscript < 0) {
      notes_.push_back("formula gives negative subscript " + std::to_string(subscript) + " at " +
                       v.to_string());
      labeling_.index.at(graph_.at(v)).reset();
      return;
    }
    labeling_.set(graph_, v, FibIndex{static_cast<std::uint32_t>(subscript)});
  }

  /// Unassigned vertices, in vertex order, take the unused odd-parity
  /// subscripts of the pool in ascending order until the pool runs out.
  void fill_odd_ascending() {
    std::vector<bool> used(labeling_.pool.max_index + 1, false);
    for (const auto& idx : labeling_.index)
      if (idx && idx->value <= labeling_.pool.max_index) used[idx->value] = true;
    std::uint32_t next = 1;
    for (auto& idx : labeling_.index) {
      if (idx) continue;
      while (next <= labeling_.pool.max_index && (used[next] || next % 3 == 0)) ++next;
      if (next > labeling_.pool.max_index) {
        notes_.push_back("odd subscripts exhausted before every vertex was labeled");
        return;
      }
      idx = FibIndex{next};
      used[next] = true;
    }
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  Labeling& labeling() noexcept { return labeling_; }
  std::vector<std::string>& notes() noexcept { return notes_; }

 private:
  const Graph& graph_;
  Labeling labeling_;
  std::vector<std::string> notes_;
};

}  // namespace fibcordial::formula
