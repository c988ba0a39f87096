#pragma once

#include <cstdint>
#include <vector>

#include "turan/error.hpp"
#include "turan/graph.hpp"

namespace turan {

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;
  /// 0 keeps the natural lexicographic candidate order; any other value
  /// shuffles it deterministically.
  std::uint64_t order_seed = 0;
  bool symmetry_pruning = true;
};

struct SearchResult {
  std::uint64_t n;
  std::uint64_t t;
  std::uint64_t exact_value;
  std::vector<Edge> witness;  // sorted
  std::uint64_t nodes_explored;
};

/// Raised when the node budget runs out; carries the best graph found so far
/// as a lower estimate.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(SearchResult best);
  const SearchResult& best_so_far() const noexcept { return best_; }

 private:
  SearchResult best_;
};

/// Largest tripartite graph with parts of size n in which every vertex pair
/// has at most t - 1 common neighbours, by depth-first branch and bound over
/// the 3n^2 cross edges. Practical for n <= 3.
SearchResult exact_extremal(std::uint64_t n, std::uint64_t t, const SearchOptions& options = {});

TripartiteGraph graph_from_edges(std::uint64_t n, const std::vector<Edge>& edges);

}  // namespace turan
