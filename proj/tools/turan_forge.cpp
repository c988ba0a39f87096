// turan_forge: build, verify and report on the K_{2,t}-free tripartite
// construction over F_p.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "turan/bounds.hpp"
#include "turan/construction.hpp"
#include "turan/error.hpp"
#include "turan/finite_field.hpp"
#include "turan/oracle.hpp"
#include "turan/serialize.hpp"
#include "turan/verifier.hpp"

namespace {

using namespace turan;
using nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kInvalidParams = 2,
  kVerificationFailed = 3,
  kIoError = 4,
  kCapExceeded = 5,
};

struct RunConfig {
  std::uint64_t t = 0;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> m;
  std::vector<std::uint64_t> p_list;
  std::uint64_t n = 0;
  std::string out = "-";
  std::string summary;
  std::string input;
  std::string format;
  std::uint64_t max_vertices = BuildOptions{}.max_vertices;
  int threads = 0;
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::uint64_t seed = 0;
  std::string witness;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) fail(ErrorKind::io, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void close(const std::string& path) {
    if (!file_.is_open()) return;
    file_.close();
    if (!file_) fail(ErrorKind::io, "error writing '" + path + "'");
  }

 private:
  std::ofstream file_;
};

void write_text(const std::string& path, const std::string& text) {
  Output out(path);
  out.stream() << text;
  out.close(path);
}

std::uint64_t resolve_prime(const RunConfig& cfg) {
  if (cfg.p) return *cfg.p;
  if (cfg.m) return find_congruent_prime(*cfg.m, cfg.t).value();
  fail(ErrorKind::invalid_params, "one of --p or --m is required");
}

int cmd_construct(const RunConfig& cfg) {
  const auto params = derive_params(cfg.t, resolve_prime(cfg));
  const auto g = build_graph(params, {cfg.max_vertices});
  if (cfg.out == "-") fail(ErrorKind::invalid_params, "construct needs --out for the edge list");
  {
    Output out(cfg.out);
    write_edge_list(out.stream(), params, g);
    out.close(cfg.out);
  }
  const auto m = g.pair_edge_counts();
  const std::uint64_t formula = lower_bound_formula(params.p.value(), params.t);
  ordered_json summary{{"schema", kSchemaVersion},
                       {"params", to_json(params)},
                       {"vertices", g.vertex_count()},
                       {"edge_count", g.edge_count()},
                       {"formula_value", formula},
                       {"formula_match", g.edge_count() == formula},
                       {"pair_edge_counts", {m[0], m[1], m[2]}},
                       {"edge_list", cfg.out}};
  const std::string text = summary.dump(2) + "\n";
  if (!cfg.summary.empty()) write_text(cfg.summary, text);
  std::cout << text;
  return g.edge_count() == formula ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& cfg) {
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open '" + cfg.input + "'");
  const auto file = read_edge_list(in);
  const std::uint64_t t = cfg.t != 0 ? cfg.t : file.t.value_or(0);
  if (t < 2) fail(ErrorKind::invalid_params, "--t is required (file header has no t)");
  const auto report = scan_codegrees(file.graph, t);
  write_text(cfg.out, to_json(report).dump(2) + "\n");
  return report.witness ? kVerificationFailed : kOk;
}

int cmd_lemma(const RunConfig& cfg) {
  const auto params = derive_params(cfg.t, resolve_prime(cfg));
  const auto cert = check_lemma1(params);
  write_text(cfg.out, to_json(cert).dump(2) + "\n");
  return cert.pass ? kOk : kVerificationFailed;
}

int cmd_bounds(const RunConfig& cfg) {
  const auto report = sandwich_report(cfg.t, resolve_prime(cfg));
  if (cfg.format == "csv")
    write_text(cfg.out, bounds_csv_header() + "\n" + bounds_csv_row(report) + "\n");
  else
    write_text(cfg.out, to_json(report).dump(2) + "\n");
  return kOk;
}

int cmd_oracle(const RunConfig& cfg) {
  SearchOptions options;
  options.node_budget = cfg.budget;
  options.order_seed = cfg.seed;
  SearchResult result;
  bool exact = true;
  try {
    result = exact_extremal(cfg.n, cfg.t, options);
  } catch (const BudgetExceeded& e) {
    result = e.best_so_far();
    exact = false;
  }
  write_text(cfg.out, to_json(result, exact).dump(2) + "\n");
  if (!cfg.witness.empty()) {
    std::ostringstream os;
    write_edge_list(os, cfg.t, cfg.n, result.witness);
    write_text(cfg.witness, os.str());
  }
  if (!exact) {
    std::cerr << "node budget exhausted; value reported as a lower estimate\n";
    return kCapExceeded;
  }
  return kOk;
}

int cmd_report(const RunConfig& cfg) {
  std::vector<std::uint64_t> primes = cfg.p_list;
  if (primes.empty()) primes.push_back(resolve_prime(cfg));
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << bounds_csv_header() << ",edge_count,formula_match,max_codegree,k2t_free,lemma_pass\n";
  bool all_ok = true;
  for (std::uint64_t p : primes) {
    const auto params = derive_params(cfg.t, p);
    const auto g = build_graph(params, {cfg.max_vertices});
    const auto scan = scan_codegrees(g, cfg.t);
    const auto cert = check_lemma1(params);
    const auto bounds = sandwich_report(cfg.t, p);
    const bool match = g.edge_count() == bounds.lower;
    const bool free = !scan.witness.has_value();
    all_ok = all_ok && match && free && cert.pass;
    csv << bounds_csv_row(bounds) << ',' << g.edge_count() << ',' << (match ? "true" : "false") << ','
        << scan.max_codegree << ',' << (free ? "true" : "false") << ','
        << (cert.pass ? "true" : "false") << '\n';
    rows.push_back({{"bounds", to_json(bounds)},
                    {"edge_count", g.edge_count()},
                    {"formula_match", match},
                    {"max_codegree", scan.max_codegree},
                    {"k2t_free", free},
                    {"lemma_pass", cert.pass},
                    {"codegree_sum", to_json(check_codegree_sum(g, cfg.t))}});
  }
  if (cfg.format == "json")
    write_text(cfg.out, ordered_json{{"schema", kSchemaVersion}, {"rows", rows}}.dump(2) + "\n");
  else
    write_text(cfg.out, csv.str());
  return all_ok ? kOk : kVerificationFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_params: return kInvalidParams;
    case ErrorKind::io: return kIoError;
    case ErrorKind::cap_exceeded: return kCapExceeded;
  }
  return kInvalidParams;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"turan_forge: extremal K_{2,t}-free tripartite graphs over finite fields"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  const auto add_t = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--t", cfg.t, "forbidden K_{2,t} parameter");
    if (required) opt->required();
  };
  const auto add_prime = [&](CLI::App* sub) {
    auto* p = sub->add_option("--p", cfg.p, "prime with (t-1) | (p-1)");
    sub->add_option("--m", cfg.m, "search for the smallest suitable prime >= m")->excludes(p);
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", cfg.out, "output path ('-' for stdout)");
  };
  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "OpenMP thread count (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
  };
  const auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", cfg.max_vertices, "memory cap on 3 n_t");
  };

  auto* construct = app.add_subcommand("construct", "build the graph and write its edge list");
  add_t(construct, true);
  add_prime(construct);
  add_out(construct);
  construct->add_option("--summary", cfg.summary, "also write the JSON summary here");
  add_cap(construct);
  add_threads(construct);

  auto* verify = app.add_subcommand("verify", "scan all pair codegrees of an edge-list file");
  add_t(verify, false);
  verify->add_option("file", cfg.input, "edge-list file")->required();
  add_out(verify);
  add_threads(verify);

  auto* lemma = app.add_subcommand("lemma", "exhaustively check the P_f/N_f dichotomy");
  add_t(lemma, true);
  add_prime(lemma);
  add_out(lemma);

  auto* bounds = app.add_subcommand("bounds", "lower/upper bounds and asymptotic constants");
  add_t(bounds, true);
  add_prime(bounds);
  add_out(bounds);
  bounds->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* oracle = app.add_subcommand("oracle", "exact ex(n,n,n,K_{2,t}) by branch and bound");
  add_t(oracle, true);
  oracle->add_option("--n", cfg.n, "part size")->required();
  oracle->add_option("--budget", cfg.budget, "search node budget");
  oracle->add_option("--seed", cfg.seed, "candidate-order shuffle seed (0 = natural order)");
  oracle->add_option("--witness", cfg.witness, "write the witness graph as an edge list");
  add_out(oracle);

  auto* report = app.add_subcommand("report", "full pipeline over a list of primes");
  add_t(report, true);
  auto* plist = report->add_option("--p", cfg.p_list, "primes (repeat or comma-separate)")->delimiter(',');
  report->add_option("--m", cfg.m, "single prime found by search from m")->excludes(plist);
  add_out(report);
  report->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  add_cap(report);
  add_threads(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidParams;
  }

  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    if (construct->parsed()) return cmd_construct(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (lemma->parsed()) return cmd_lemma(cfg);
    if (bounds->parsed()) return cmd_bounds(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (report->parsed()) return cmd_report(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kInvalidParams;
}
