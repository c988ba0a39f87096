#include "turan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "turan/bounds.hpp"

namespace turan {

BudgetExceeded::BudgetExceeded(SearchResult best)
    : Error(ErrorKind::cap_exceeded, "node budget of search exhausted; best so far " +
                                         std::to_string(best.exact_value) + " edges (estimate)"),
      best_(std::move(best)) {}

TripartiteGraph graph_from_edges(std::uint64_t n, const std::vector<Edge>& edges) {
  TripartiteGraph g(n);
  for (const auto& e : edges) g.add_edge(e.lo, e.hi);
  return g;
}

namespace {

constexpr std::uint64_t kMaxVertices = 30;

class BranchAndBound {
 public:
  BranchAndBound(std::uint64_t n, std::uint64_t t, const SearchOptions& options)
      : n_(n), max_codegree_(t - 1), options_(options), adj_(3 * n, 0) {
    for (VertexId u = 0; u < 3 * n; ++u)
      for (VertexId v = u + 1; v < 3 * n; ++v)
        if (u / n != v / n) candidates_.push_back({u, v});
    if (options.order_seed != 0) {
      std::mt19937_64 rng(options.order_seed);
      std::shuffle(candidates_.begin(), candidates_.end(), rng);
    }
    decision_.assign(candidates_.size(), kUnknown);
    prefix_prev_.assign(candidates_.size(), -1);
    prefix_next_.assign(candidates_.size(), -1);
    if (options.symmetry_pruning) link_first_vertex_prefixes();
  }

  void run(std::uint64_t ceiling) {
    ceiling_ = ceiling;
    chosen_.reserve(candidates_.size());
    descend(0);
  }

  SearchResult result() const {
    auto w = best_edges_;
    std::sort(w.begin(), w.end());
    return SearchResult{n_, max_codegree_ + 1, best_edges_.size(), std::move(w), nodes_};
  }

 private:
  static constexpr int kUnknown = -1;
  static constexpr int kOut = 0;
  static constexpr int kIn = 1;

  // Permuting V_2 (resp. V_3) lets vertex 0's neighbourhood there be an
  // initial segment: edge (0, v) may be present only if (0, v-1) is.
  void link_first_vertex_prefixes() {
    std::vector<int> index_of(3 * n_, -1);
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      if (candidates_[i].lo == 0) index_of[candidates_[i].hi] = static_cast<int>(i);
    for (VertexId v = 0; v < 3 * n_; ++v) {
      if (index_of[v] < 0 || v % n_ == 0) continue;
      prefix_prev_[index_of[v]] = index_of[v - 1];
      prefix_next_[index_of[v - 1]] = index_of[v];
    }
  }

  bool symmetry_allows(std::size_t i, int value) const {
    if (value == kIn && prefix_prev_[i] >= 0 && decision_[prefix_prev_[i]] == kOut) return false;
    if (value == kOut && prefix_next_[i] >= 0 && decision_[prefix_next_[i]] == kIn) return false;
    return true;
  }

  // Adding uv raises codeg(v, w) for w in N(u) and codeg(u, w) for w in N(v).
  bool can_add(const Edge& e) const {
    const auto check = [&](VertexId x, VertexId y) {
      for (std::uint32_t nb = adj_[x]; nb != 0; nb &= nb - 1) {
        const auto w = static_cast<VertexId>(std::countr_zero(nb));
        if (static_cast<std::uint64_t>(std::popcount(adj_[y] & adj_[w])) >= max_codegree_) return false;
      }
      return true;
    };
    return check(e.lo, e.hi) && check(e.hi, e.lo);
  }

  void descend(std::size_t i) {
    if (++nodes_ > options_.node_budget) throw BudgetExceeded(result());
    if (chosen_.size() > best_edges_.size()) best_edges_ = chosen_;
    if (i == candidates_.size() || best_edges_.size() >= ceiling_) return;
    if (chosen_.size() + (candidates_.size() - i) <= best_edges_.size()) return;

    const Edge e = candidates_[i];
    if (symmetry_allows(i, kIn) && can_add(e)) {
      adj_[e.lo] |= 1U << e.hi;
      adj_[e.hi] |= 1U << e.lo;
      decision_[i] = kIn;
      chosen_.push_back(e);
      descend(i + 1);
      chosen_.pop_back();
      adj_[e.lo] &= ~(1U << e.hi);
      adj_[e.hi] &= ~(1U << e.lo);
    }
    if (symmetry_allows(i, kOut)) {
      decision_[i] = kOut;
      descend(i + 1);
    }
    decision_[i] = kUnknown;
  }

  std::uint64_t n_;
  std::uint64_t max_codegree_;
  SearchOptions options_;
  std::vector<std::uint32_t> adj_;
  std::vector<Edge> candidates_;
  std::vector<int> decision_;
  std::vector<int> prefix_prev_;
  std::vector<int> prefix_next_;
  std::vector<Edge> chosen_;
  std::vector<Edge> best_edges_;
  std::uint64_t nodes_ = 0;
  std::uint64_t ceiling_ = 0;
};

}  // namespace

SearchResult exact_extremal(std::uint64_t n, std::uint64_t t, const SearchOptions& options) {
  if (n < 1 || 3 * n > kMaxVertices)
    fail(ErrorKind::invalid_params, "oracle supports 1 <= n <= " + std::to_string(kMaxVertices / 3));
  if (t < 2) fail(ErrorKind::invalid_params, "t must be >= 2");
  BranchAndBound search(n, t, options);
  search.run(upper_bound_floor(n, t));
  return search.result();
}

}  // namespace turan
