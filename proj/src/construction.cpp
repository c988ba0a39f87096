#include "turan/construction.hpp"

#include <string>

#include "turan/error.hpp"

namespace turan {

ConstructionParams derive_params(std::uint64_t t, std::uint64_t p) {
  if (t < 2) fail(ErrorKind::invalid_params, "t must be >= 2");
  if (t % 2 != 0)
    fail(ErrorKind::invalid_params,
         "t = " + std::to_string(t) + " is odd; the construction needs even t (odd t is out of scope)");
  PrimeModulus modulus(p);
  if ((p - 1) % (t - 1) != 0)
    fail(ErrorKind::invalid_params, "t - 1 = " + std::to_string(t - 1) + " does not divide p - 1 = " +
                                        std::to_string(p - 1));
  const std::uint64_t a = (p - 1) / (t - 1);
  return ConstructionParams{t, modulus, a, (a / 2) * p, smallest_primitive_root(modulus)};
}

GeneratorSets build_generator_sets(const ConstructionParams& params) {
  GeneratorSets sets;
  sets.b.reserve(params.half_a());
  Residue power = 1;
  for (std::uint64_t e = 1; e <= params.half_a(); ++e) {
    power = params.p.mul(power, params.g.value());
    sets.b.push_back(power);
  }
  sets.w.reserve(params.t - 1);
  for (std::uint64_t j = 1; j < params.t; ++j) sets.w.push_back(j * params.a);
  return sets;
}

VertexId vertex_id(const Vertex& v, const ConstructionParams& params) {
  return static_cast<VertexId>(static_cast<std::uint64_t>(v.part - 1) * params.n +
                               (v.b_index - 1) * params.p.value() + v.x);
}

Vertex vertex_from_id(VertexId id, const ConstructionParams& params) {
  const std::uint64_t p = params.p.value();
  const std::uint64_t part = id / params.n;
  const std::uint64_t rest = id % params.n;
  return Vertex{static_cast<int>(part + 1), rest / p + 1, rest % p};
}

std::uint64_t expected_edge_count(const ConstructionParams& params) noexcept {
  return 3 * params.half_a() * params.half_a() * (params.t - 1) * params.p.value();
}

namespace {

void check_cap(const ConstructionParams& params, const BuildOptions& options) {
  if (3 * params.n > options.max_vertices)
    fail(ErrorKind::cap_exceeded, "3 n_t = " + std::to_string(3 * params.n) +
                                      " vertices exceeds the cap of " +
                                      std::to_string(options.max_vertices));
}

// g^{-w} for every w in W, in W order.
std::vector<Residue> inverse_multipliers(const ConstructionParams& params, const GeneratorSets& sets) {
  std::vector<Residue> out;
  out.reserve(sets.w.size());
  for (std::uint64_t w : sets.w) {
    const std::uint64_t e = (params.p.order() - w % params.p.order()) % params.p.order();
    out.push_back(mod_pow(params.g.value(), e, params.p));
  }
  return out;
}

}  // namespace

TripartiteGraph build_graph(const ConstructionParams& params, const BuildOptions& options) {
  check_cap(params, options);
  const auto sets = build_generator_sets(params);
  const auto ginv = inverse_multipliers(params, sets);
  const PrimeModulus& fp = params.p;
  const std::uint64_t p = fp.value();
  const std::uint64_t n = params.n;
  const auto half_a = static_cast<std::int64_t>(params.half_a());

  TripartiteGraph g(n);
  const auto total = static_cast<std::int64_t>(g.vertex_count());

  // Each vertex writes only its own row: forward neighbours solve
  // y = x - bc g^{-w} in the next part, backward neighbours solve
  // x' = x + b'b g^{-w} in the previous part.
#pragma omp parallel for schedule(static)
  for (std::int64_t id = 0; id < total; ++id) {
    const auto part = static_cast<std::uint64_t>(id) / n;
    const auto rest = static_cast<std::uint64_t>(id) % n;
    const Residue b = sets.b[rest / p];
    const Residue x = rest % p;
    const std::uint64_t next = ((part + 1) % 3) * n;
    const std::uint64_t prev = ((part + 2) % 3) * n;
    auto row = g.mutable_row(static_cast<VertexId>(id));
    for (std::int64_t ci = 0; ci < half_a; ++ci) {
      const Residue bc = fp.mul(b, sets.b[ci]);
      for (Residue gw : ginv) {
        const Residue shift = fp.mul(bc, gw);
        const std::uint64_t fwd = next + ci * p + fp.sub(x, shift);
        const std::uint64_t bwd = prev + ci * p + fp.add(x, shift);
        row[fwd / kWordBits] |= Word{1} << (fwd % kWordBits);
        row[bwd / kWordBits] |= Word{1} << (bwd % kWordBits);
      }
    }
  }
  return g;
}

TripartiteGraph build_graph_serial(const ConstructionParams& params, const BuildOptions& options) {
  check_cap(params, options);
  const auto sets = build_generator_sets(params);
  const auto ginv = inverse_multipliers(params, sets);
  const PrimeModulus& fp = params.p;

  TripartiteGraph g(params.n);
  for (int part = 1; part <= 3; ++part) {
    const int next = part % 3 + 1;
    for (std::uint64_t e = 1; e <= params.half_a(); ++e) {
      for (Residue x = 0; x < fp.value(); ++x) {
        const VertexId u = vertex_id({part, e, x}, params);
        for (std::uint64_t ci = 1; ci <= params.half_a(); ++ci) {
          const Residue bc = fp.mul(sets.b[e - 1], sets.b[ci - 1]);
          for (Residue gw : ginv) {
            const Residue y = fp.sub(x, fp.mul(bc, gw));
            g.add_edge(u, vertex_id({next, ci, y}, params));
          }
        }
      }
    }
  }
  return g;
}

Decomposition decompose_field_element(Residue f, const ConstructionParams& params,
                                      const DiscreteLog& log) {
  const std::uint64_t k = log(f);  // 1..p-1
  const std::uint64_t a = params.a;
  const std::uint64_t d = (k - 1) % a + 1;
  const std::uint64_t c = (k - d) / a;
  // c = 0 is the same residue as c = t-1 since (t-1)a = p-1
  return {c == 0 ? params.t - 1 : c, d};
}

Decomposition decompose_field_element(Residue f, const ConstructionParams& params) {
  return decompose_field_element(f, params, DiscreteLog(params.g, params.p));
}

SignedSolutions solve_pf_nf(Residue f, const GeneratorSets& sets, const ConstructionParams& params) {
  const PrimeModulus& fp = params.p;
  f = fp.reduce(f);
  if (f == 0) fail(ErrorKind::invalid_params, "f must be nonzero");
  const Residue neg_f = fp.neg(f);
  SignedSolutions out;
  for (std::uint64_t w : sets.w) {
    const Residue gw = mod_pow(params.g.value(), w, fp);
    for (Residue b : sets.b) {
      const Residue v = fp.mul(gw, b);
      if (v == f) out.positive.push_back({w, b});
      if (v == neg_f) out.negative.push_back({w, b});
    }
  }
  return out;
}

LemmaCertificate check_lemma1(const ConstructionParams& params) {
  const auto sets = build_generator_sets(params);
  const DiscreteLog log(params.g, params.p);
  const std::uint64_t a = params.a;
  const std::uint64_t t = params.t;
  const std::uint64_t half_a = params.half_a();

  LemmaCertificate cert{t, params.p.value(), {}, true, std::nullopt};
  cert.entries.reserve(params.p.order());
  for (Residue f = 1; f < params.p.value(); ++f) {
    const auto sol = solve_pf_nf(f, sets, params);
    LemmaEntry e{f, sol.positive.size(), sol.negative.size(), std::nullopt, false,
                 decompose_field_element(f, params, log), false};
    if (!sol.positive.empty()) {
      e.located = sol.positive.front();
      e.located_positive = true;
    } else if (!sol.negative.empty()) {
      e.located = sol.negative.front();
    }

    const auto [c, d] = e.decomposition;
    WeightedGenerator predicted{};
    bool predicted_positive = false;
    if (d <= half_a) {
      predicted = {c * a, mod_pow(params.g.value(), d, params.p)};
      predicted_positive = true;
    } else {
      const std::uint64_t w = c <= t / 2 - 1 ? c * a + t * a / 2 : c * a + a - t * a / 2;
      predicted = {w, mod_pow(params.g.value(), d - half_a, params.p)};
    }
    e.closed_form_match =
        e.dichotomy_holds() && e.located == predicted && e.located_positive == predicted_positive;

    if (!e.passes() && cert.pass) {
      cert.pass = false;
      cert.first_failure = f;
    }
    cert.entries.push_back(e);
  }
  return cert;
}

}  // namespace turan
