#include "turan/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <utility>

#include <omp.h>

#include "turan/error.hpp"

namespace turan {

namespace {

std::vector<VertexId> common_neighbors(const TripartiteGraph& g, VertexId u, VertexId v) {
  std::vector<VertexId> out;
  const auto a = g.row(u);
  const auto b = g.row(v);
  for (std::size_t w = 0; w < a.size(); ++w)
    for (Word bits = a[w] & b[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<VertexId>(w * kWordBits + std::countr_zero(bits)));
  return out;
}

std::uint64_t pair_total(const TripartiteGraph& g) {
  const std::uint64_t n = g.vertex_count();
  return n * (n - 1) / 2;
}

constexpr std::pair<VertexId, VertexId> kNoPair{~VertexId{0}, ~VertexId{0}};

// Running state for one worker; merged by max / elementwise sum / min pair.
struct ScanAccumulator {
  std::uint64_t max_codegree = 0;
  CodegreeHistogram histogram{};
  std::uint64_t scanned = 0;
  std::pair<VertexId, VertexId> first_violation = kNoPair;

  void scan_row(const TripartiteGraph& g, VertexId u, std::uint64_t t) {
    const auto ru = g.row(u);
    const auto total = static_cast<VertexId>(g.vertex_count());
    for (VertexId v = u + 1; v < total; ++v) {
      const std::uint64_t c = intersection_count(ru, g.row(v));
      ++histogram[std::min<std::uint64_t>(c, kHistogramCap + 1)];
      if (c > max_codegree) max_codegree = c;
      if (c >= t && std::pair{u, v} < first_violation) first_violation = {u, v};
    }
    scanned += total - u - 1;
  }

  void merge(const ScanAccumulator& other) {
    max_codegree = std::max(max_codegree, other.max_codegree);
    for (std::size_t i = 0; i < histogram.size(); ++i) histogram[i] += other.histogram[i];
    scanned += other.scanned;
    first_violation = std::min(first_violation, other.first_violation);
  }

  CodegreeReport finish(const TripartiteGraph& g, std::uint64_t t) const {
    CodegreeReport r;
    r.t = t;
    r.max_codegree = max_codegree;
    r.histogram = histogram;
    r.scanned_pairs = scanned;
    r.complete_scan = scanned == pair_total(g);
    if (first_violation != kNoPair) {
      const auto [u, v] = first_violation;
      r.witness = CodegreeWitness{u, v, common_neighbors(g, u, v)};
    }
    return r;
  }
};

}  // namespace

std::uint64_t codegree(const TripartiteGraph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    fail(ErrorKind::invalid_params, "vertex id out of range: " + std::to_string(std::max(u, v)));
  if (u == v) fail(ErrorKind::invalid_params, "codegree needs two distinct vertices");
  return intersection_count(g.row(u), g.row(v));
}

CodegreeReport scan_codegrees_serial(const TripartiteGraph& g, std::uint64_t t) {
  ScanAccumulator acc;
  for (VertexId u = 0; u < g.vertex_count(); ++u) acc.scan_row(g, u, t);
  return acc.finish(g, t);
}

CodegreeReport scan_codegrees(const TripartiteGraph& g, std::uint64_t t, const ScanOptions& options) {
  if (t < 2) fail(ErrorKind::invalid_params, "t must be >= 2");
  ScanAccumulator merged;
  std::atomic<bool> violated{false};
  const auto total = static_cast<std::int64_t>(g.vertex_count());

#pragma omp parallel
  {
    ScanAccumulator local;
    // rows shrink with u; dynamic chunks keep the triangle balanced
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t u = 0; u < total; ++u) {
      if (options.early_exit && violated.load(std::memory_order_relaxed)) continue;
      local.scan_row(g, static_cast<VertexId>(u), t);
      if (local.first_violation != kNoPair) violated.store(true, std::memory_order_relaxed);
    }
#pragma omp critical(turan_scan_merge)
    merged.merge(local);
  }
  return merged.finish(g, t);
}

bool is_k2t_free(const TripartiteGraph& g, std::uint64_t t) {
  return !scan_codegrees(g, t, {.early_exit = true}).witness.has_value();
}

CodegreeSumReport check_codegree_sum(const TripartiteGraph& g, std::uint64_t t) {
  if (t < 2) fail(ErrorKind::invalid_params, "t must be >= 2");
  const std::uint64_t n = g.part_size();
  CodegreeSumReport r;
  r.holds = true;
  const std::uint64_t limit = (t - 1) * (n * (n - 1) / 2);
  for (int k = 0; k < 3; ++k) {
    std::uint64_t sum = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (g.part_of(u) == k) continue;
      const std::uint64_t d = g.degree_into_part(u, k);
      sum += d * (d - (d > 0 ? 1 : 0)) / 2;
    }
    r.parts[k] = {sum, limit, sum <= limit};
    r.holds = r.holds && r.parts[k].holds;
  }
  const auto m = g.pair_edge_counts();
  const double nd = static_cast<double>(n);
  const double pair_limit = nd * (1.0 + std::sqrt(2.0 * static_cast<double>(t - 1) * (nd - 1.0) + 1.0));
  const std::array<std::uint64_t, 3> sums{m[0] + m[1], m[0] + m[2], m[1] + m[2]};
  for (int i = 0; i < 3; ++i) {
    r.pair_sums[i] = {sums[i], pair_limit, static_cast<double>(sums[i]) <= pair_limit};
    r.holds = r.holds && r.pair_sums[i].holds;
  }
  return r;
}

std::uint64_t same_part_codegree_total(const TripartiteGraph& g, int k) {
  const std::uint64_t n = g.part_size();
  const auto begin = static_cast<VertexId>(k * n);
  const auto end = static_cast<VertexId>((k + 1) * n);
  std::uint64_t total = 0;
  for (VertexId u = begin; u < end; ++u)
    for (VertexId v = u + 1; v < end; ++v) total += intersection_count(g.row(u), g.row(v));
  return total;
}

}  // namespace turan
