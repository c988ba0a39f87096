#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Codegree histogram; bucket 256 collects every value above 255.
inline constexpr std::size_t kHistogramCap = 255;
using CodegreeHistogram = std::array<std::uint64_t, kHistogramCap + 2>;

struct CodegreeWitness {
  VertexId u;
  VertexId v;
  std::vector<VertexId> common;

  friend bool operator==(const CodegreeWitness&, const CodegreeWitness&) = default;
};

struct CodegreeReport {
  std::uint64_t t = 0;
  std::uint64_t max_codegree = 0;
  CodegreeHistogram histogram{};
  std::optional<CodegreeWitness> witness;  // lexicographically first (u, v) with codegree >= t
  std::uint64_t scanned_pairs = 0;
  bool complete_scan = false;

  friend bool operator==(const CodegreeReport&, const CodegreeReport&) = default;
};

struct ScanOptions {
  /// Stop handing out new rows once a violating pair is seen. The report then
  /// has complete_scan = false unless the scan finished anyway.
  bool early_exit = false;
};

/// |N(u) ∩ N(v)|. Throws Error(invalid_params) if u == v or an id is out of range.
std::uint64_t codegree(const TripartiteGraph& g, VertexId u, VertexId v);

/// All (3n choose 2) unordered pairs, parallel over rows. The result is
/// identical to scan_codegrees_serial for every thread count.
CodegreeReport scan_codegrees(const TripartiteGraph& g, std::uint64_t t,
                              const ScanOptions& options = {});

/// Plain nested loop; the reference the parallel kernel is tested against.
CodegreeReport scan_codegrees_serial(const TripartiteGraph& g, std::uint64_t t);

bool is_k2t_free(const TripartiteGraph& g, std::uint64_t t);

struct PartCodegreeSum {
  std::uint64_t sum;    // sum over u outside V_k of C(deg_into_k(u), 2)
  std::uint64_t limit;  // (t-1) C(n, 2)
  bool holds;
};

struct PairSumCheck {
  std::uint64_t value;  // m_i + m_j
  double limit;         // n (1 + sqrt(2(t-1)(n-1) + 1))
  bool holds;
};

struct CodegreeSumReport {
  std::array<PartCodegreeSum, 3> parts;  // target part V_1, V_2, V_3
  std::array<PairSumCheck, 3> pair_sums;  // m_1+m_2, m_1+m_3, m_2+m_3
  bool holds = false;
};

/// Counting inequalities behind the upper bound, evaluated on a concrete graph.
CodegreeSumReport check_codegree_sum(const TripartiteGraph& g, std::uint64_t t);

/// Sum over pairs {u, v} inside 0-based part k of |N(u) ∩ N(v)|, by direct
/// row intersection. Equals PartCodegreeSum::sum by double counting.
std::uint64_t same_part_codegree_total(const TripartiteGraph& g, int k);

}  // namespace turan
