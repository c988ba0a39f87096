#include "turan/graph.hpp"

#include <string>

#include "turan/error.hpp"

namespace turan {

TripartiteGraph::TripartiteGraph(std::uint64_t part_size)
    : n_(part_size), words_((3 * part_size + kWordBits - 1) / kWordBits) {
  if (part_size == 0) fail(ErrorKind::invalid_params, "part size must be >= 1");
  bits_.assign(3 * n_ * words_, 0);
}

void TripartiteGraph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count() || v >= vertex_count())
    fail(ErrorKind::invalid_params, "vertex id out of range: " + std::to_string(std::max(u, v)));
  if (part_of(u) == part_of(v))
    fail(ErrorKind::invalid_params,
         "edge " + std::to_string(u) + "-" + std::to_string(v) + " lies inside one part");
  bits_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  bits_[v * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
}

std::uint64_t TripartiteGraph::count_range(VertexId u, std::uint64_t begin,
                                           std::uint64_t end) const noexcept {
  const auto r = row(u);
  std::uint64_t c = 0;
  for (std::uint64_t i = begin; i < end;) {
    const std::size_t w = i / kWordBits;
    const std::uint64_t lo = i % kWordBits;
    const std::uint64_t hi = std::min<std::uint64_t>(kWordBits, lo + (end - i));
    Word mask = hi == kWordBits ? ~Word{0} : ((Word{1} << hi) - 1);
    mask &= ~((Word{1} << lo) - 1);
    c += static_cast<std::uint64_t>(std::popcount(r[w] & mask));
    i += hi - lo;
  }
  return c;
}

std::uint64_t TripartiteGraph::degree(VertexId u) const noexcept {
  std::uint64_t c = 0;
  for (Word w : row(u)) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::uint64_t TripartiteGraph::degree_into_part(VertexId u, int k) const noexcept {
  return count_range(u, static_cast<std::uint64_t>(k) * n_, static_cast<std::uint64_t>(k + 1) * n_);
}

std::vector<VertexId> TripartiteGraph::neighbors(VertexId u) const {
  std::vector<VertexId> out;
  const auto r = row(u);
  for (std::size_t w = 0; w < r.size(); ++w)
    for (Word bits = r[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<VertexId>(w * kWordBits + std::countr_zero(bits)));
  return out;
}

std::uint64_t TripartiteGraph::edge_count() const noexcept {
  std::uint64_t twice = 0;
  for (Word w : bits_) twice += static_cast<std::uint64_t>(std::popcount(w));
  return twice / 2;
}

PairEdgeCounts TripartiteGraph::pair_edge_counts() const noexcept {
  // m_1: V_2V_3, m_2: V_1V_3, m_3: V_1V_2
  PairEdgeCounts m{};
  for (VertexId u = 0; u < n_; ++u) {
    m[2] += degree_into_part(u, 1);
    m[1] += degree_into_part(u, 2);
  }
  for (VertexId u = static_cast<VertexId>(n_); u < 2 * n_; ++u) m[0] += degree_into_part(u, 2);
  return m;
}

std::vector<Edge> TripartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (v > u) out.push_back({u, v});
  return out;
}

bool TripartiteGraph::is_well_formed() const noexcept {
  const std::uint64_t total = vertex_count();
  for (VertexId u = 0; u < total; ++u) {
    if (degree_into_part(u, part_of(u)) != 0) return false;
    if (count_range(u, total, words_ * kWordBits) != 0) return false;
    for (VertexId v = u + 1; v < total; ++v)
      if (has_edge(u, v) != has_edge(v, u)) return false;
  }
  return true;
}

TripartiteGraph complete_tripartite(std::uint64_t n) {
  TripartiteGraph g(n);
  for (VertexId u = 0; u < 3 * n; ++u)
    for (VertexId v = u + 1; v < 3 * n; ++v)
      if (g.part_of(u) != g.part_of(v)) g.add_edge(u, v);
  return g;
}

}  // namespace turan
