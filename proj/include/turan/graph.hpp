#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace turan {

using VertexId = std::uint32_t;
using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

struct Edge {
  VertexId lo;
  VertexId hi;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edges between V_2V_3, V_1V_3 and V_1V_2, in that order (m_1, m_2, m_3).
using PairEdgeCounts = std::array<std::uint64_t, 3>;

/// Three parts of n vertices each, ids [k*n, (k+1)*n) belong to part k+1.
/// Adjacency is a dense bit matrix; each row is padded to whole words and
/// padding bits are always zero.
class TripartiteGraph {
 public:
  explicit TripartiteGraph(std::uint64_t part_size);

  std::uint64_t part_size() const noexcept { return n_; }
  std::uint64_t vertex_count() const noexcept { return 3 * n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  /// 0-based part index of v.
  int part_of(VertexId v) const noexcept { return static_cast<int>(v / n_); }

  /// Throws Error(invalid_params) on out-of-range ids, self-loops, or
  /// endpoints in the same part. Adding an existing edge is a no-op.
  void add_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const noexcept {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::span<const Word> row(VertexId u) const noexcept {
    return {bits_.data() + u * words_, words_};
  }

  /// Mutable row access for builders that fill one row per vertex. The caller
  /// keeps the matrix symmetric.
  std::span<Word> mutable_row(VertexId u) noexcept {
    return {bits_.data() + u * words_, words_};
  }

  std::uint64_t degree(VertexId u) const noexcept;
  /// Number of neighbours of u inside 0-based part k.
  std::uint64_t degree_into_part(VertexId u, int k) const noexcept;
  std::vector<VertexId> neighbors(VertexId u) const;

  std::uint64_t edge_count() const noexcept;
  PairEdgeCounts pair_edge_counts() const noexcept;

  /// All edges as (min id, max id), sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Symmetric, loop-free, no intra-part edges, zero padding.
  bool is_well_formed() const noexcept;

  friend bool operator==(const TripartiteGraph& a, const TripartiteGraph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::uint64_t count_range(VertexId u, std::uint64_t begin, std::uint64_t end) const noexcept;

  std::uint64_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

/// Every cross-part edge present; used as a dense negative example.
TripartiteGraph complete_tripartite(std::uint64_t n);

inline std::uint64_t intersection_count(std::span<const Word> a,
                                        std::span<const Word> b) noexcept {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return c;
}

}  // namespace turan
