#include <doctest.h>

#include "turan/bounds.hpp"
#include "turan/construction.hpp"
#include "turan/oracle.hpp"
#include "turan/verifier.hpp"

using namespace turan;

namespace {

void check_witness(const SearchResult& r) {
  const auto g = graph_from_edges(r.n, r.witness);
  CHECK(g.edge_count() == r.exact_value);
  CHECK(is_k2t_free(g, r.t));
  CHECK(r.exact_value <= upper_bound_floor(r.n, r.t));
}

}  // namespace

// Expected values were computed by an independent exhaustive enumeration
// (all 2^12 subsets for n = 2) and an unpruned depth-first search (n = 3).
TEST_CASE("exact_extremal small values") {
  auto r = exact_extremal(1, 2);
  CHECK(r.exact_value == 3);
  CHECK(r.witness == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  check_witness(r);

  r = exact_extremal(2, 2);
  CHECK(r.exact_value == 7);
  check_witness(r);

  r = exact_extremal(2, 3);
  CHECK(r.exact_value == 9);
  check_witness(r);

  r = exact_extremal(3, 2);
  CHECK(r.exact_value == 13);
  CHECK(r.exact_value >= build_graph(derive_params(2, 3)).edge_count());
  check_witness(r);
}

TEST_CASE("exact_extremal is independent of candidate order and symmetry pruning") {
  for (auto [n, t] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    SearchOptions plain;
    plain.symmetry_pruning = false;
    const auto reference = exact_extremal(n, t, plain).exact_value;
    for (std::uint64_t seed : {0, 1, 2, 17}) {
      SearchOptions opt;
      opt.order_seed = seed;
      const auto r = exact_extremal(n, t, opt);
      CHECK(r.exact_value == reference);
      check_witness(r);
    }
  }
}

TEST_CASE("large t: complete tripartite graph is optimal") {
  // every codegree in K_{n,n,n} is at most 2n, so t = 2n + 1 allows all 3n^2 edges
  const auto r = exact_extremal(2, 5);
  CHECK(r.exact_value == 12);
}

TEST_CASE("exact_extremal budget") {
  SearchOptions opt;
  opt.node_budget = 50;
  try {
    exact_extremal(3, 2, opt);
    FAIL("expected budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.kind() == ErrorKind::cap_exceeded);
    const auto& best = e.best_so_far();
    CHECK(best.exact_value <= 13);
    CHECK(is_k2t_free(graph_from_edges(3, best.witness), 2));
  }
  CHECK_THROWS_AS(exact_extremal(0, 2), Error);
  CHECK_THROWS_AS(exact_extremal(11, 2), Error);
  CHECK_THROWS_AS(exact_extremal(2, 1), Error);
}
