#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/finite_field.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Validated (t, p, a, n_t, g) with p - 1 = a(t - 1), t even and n_t = (a/2)p.
struct ConstructionParams {
  std::uint64_t t;
  PrimeModulus p;
  std::uint64_t a;
  std::uint64_t n;  // part size n_t
  PrimitiveRoot g;

  std::uint64_t half_a() const noexcept { return a / 2; }
};

/// Rejects odd t, t < 2, composite p, and (t - 1) not dividing p - 1, all
/// with Error(invalid_params).
ConstructionParams derive_params(std::uint64_t t, std::uint64_t p);

struct GeneratorSets {
  std::vector<Residue> b;        // b[e-1] = g^e, e = 1..a/2
  std::vector<std::uint64_t> w;  // w[j-1] = j*a, j = 1..t-1 (raw exponents)
};

GeneratorSets build_generator_sets(const ConstructionParams& params);

/// Vertex (b, x) of part `part` with b = g^{b_index}.
struct Vertex {
  int part;              // 1..3
  std::uint64_t b_index;  // 1..a/2
  Residue x;              // 0..p-1

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

VertexId vertex_id(const Vertex& v, const ConstructionParams& params);
Vertex vertex_from_id(VertexId id, const ConstructionParams& params);

struct BuildOptions {
  std::uint64_t max_vertices = 98'304;
};

/// Materializes the construction: (b,x) in V_i is adjacent to (c,y) in
/// V_{i+1} (parts cycled 1->2->3->1) iff bc = g^w (x - y) for some w in W.
/// Rows are filled independently per vertex, in parallel.
///
/// Throws Error(cap_exceeded) when 3 n_t exceeds options.max_vertices.
TripartiteGraph build_graph(const ConstructionParams& params, const BuildOptions& options = {});

/// Single-threaded edge-by-edge builder in the fixed generation order
/// (part, b_index, x, c index, w index). Reference for build_graph.
TripartiteGraph build_graph_serial(const ConstructionParams& params,
                                   const BuildOptions& options = {});

/// 3 (a/2)^2 (t-1) p, the edge count the construction must produce.
std::uint64_t expected_edge_count(const ConstructionParams& params) noexcept;

struct Decomposition {
  std::uint64_t c;  // 1..t-1
  std::uint64_t d;  // 1..a
};

/// The unique (c, d) with f = g^{ca+d}. Throws Error(invalid_params) if f = 0.
Decomposition decompose_field_element(Residue f, const ConstructionParams& params);
Decomposition decompose_field_element(Residue f, const ConstructionParams& params,
                                      const DiscreteLog& log);

/// (w, b) with w an exponent from W and b an element of B.
struct WeightedGenerator {
  std::uint64_t w;
  Residue b;

  friend bool operator==(const WeightedGenerator&, const WeightedGenerator&) = default;
};

struct SignedSolutions {
  std::vector<WeightedGenerator> positive;  // g^w b =  f
  std::vector<WeightedGenerator> negative;  // g^w b = -f
};

/// Exhaustive enumeration of W x B. Throws Error(invalid_params) if f = 0.
SignedSolutions solve_pf_nf(Residue f, const GeneratorSets& sets, const ConstructionParams& params);

struct LemmaEntry {
  Residue f;
  std::size_t positive_count;
  std::size_t negative_count;
  std::optional<WeightedGenerator> located;
  bool located_positive = false;
  Decomposition decomposition;
  /// The located solution sits where the (c, d) case analysis predicts.
  bool closed_form_match = false;

  bool dichotomy_holds() const noexcept {
    return (positive_count == 1 && negative_count == 0) ||
           (positive_count == 0 && negative_count == 1);
  }
  bool passes() const noexcept { return dichotomy_holds() && closed_form_match; }
};

struct LemmaCertificate {
  std::uint64_t t;
  std::uint64_t p;
  std::vector<LemmaEntry> entries;  // f = 1..p-1
  bool pass = false;
  std::optional<Residue> first_failure;
};

/// Checks the {|P_f|, |N_f|} = {0, 1} dichotomy for every f in F_p^* and that
/// each solution matches the closed form from (c, d): (ca, g^d) in P_f when
/// d <= a/2, otherwise (ca + ta/2 or ca - ta/2 + a, g^{d - a/2}) in N_f.
LemmaCertificate check_lemma1(const ConstructionParams& params);

}  // namespace turan
