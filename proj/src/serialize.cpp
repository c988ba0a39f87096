#include "turan/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "turan/error.hpp"

namespace turan {

using nlohmann::ordered_json;

std::string edge_list_header(const ConstructionParams& params) {
  std::ostringstream os;
  os << "turan-forge v1 t=" << params.t << " p=" << params.p.value() << " a=" << params.a
     << " n=" << params.n << " g=" << params.g.value();
  return os.str();
}

namespace {

void write_edges(std::ostream& out, const std::vector<Edge>& edges) {
  std::string buf;
  buf.reserve(edges.size() * 12);
  for (const auto& e : edges) {
    buf += std::to_string(e.lo);
    buf += ' ';
    buf += std::to_string(e.hi);
    buf += '\n';
  }
  out << buf;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s.front() == '-')
    fail(ErrorKind::io, "malformed " + what + ": '" + s + "'");
  return v;
}

}  // namespace

void write_edge_list(std::ostream& out, const ConstructionParams& params, const TripartiteGraph& g) {
  out << edge_list_header(params) << '\n';
  write_edges(out, g.edges());
}

void write_edge_list(std::ostream& out, std::uint64_t t, std::uint64_t n, const std::vector<Edge>& edges) {
  out << "turan-forge v1 t=" << t << " n=" << n << '\n';
  write_edges(out, edges);
}

EdgeListFile read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::io, "empty edge-list file");
  std::istringstream header(line);
  std::string magic, version, field;
  header >> magic >> version;
  if (magic != "turan-forge" || version != "v1")
    fail(ErrorKind::io, "missing 'turan-forge v1' header");

  std::optional<std::uint64_t> t, p, n;
  while (header >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) fail(ErrorKind::io, "malformed header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::uint64_t value = parse_uint(field.substr(eq + 1), "header value for " + key);
    if (key == "t") t = value;
    else if (key == "p") p = value;
    else if (key == "n") n = value;
  }
  if (!n || *n == 0) fail(ErrorKind::io, "header lacks part size n");

  EdgeListFile file{t, p, *n, TripartiteGraph(*n)};
  std::uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      fail(ErrorKind::io, "line " + std::to_string(line_no) + ": expected '<min_id> <max_id>'");
    const std::uint64_t u = parse_uint(a, "vertex id");
    const std::uint64_t v = parse_uint(b, "vertex id");
    if (u >= file.graph.vertex_count() || v >= file.graph.vertex_count())
      fail(ErrorKind::invalid_params, "line " + std::to_string(line_no) + ": vertex id out of range");
    file.graph.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return file;
}

ordered_json to_json(const ConstructionParams& params) {
  return ordered_json{{"t", params.t},
                      {"p", params.p.value()},
                      {"a", params.a},
                      {"n", params.n},
                      {"g", params.g.value()}};
}

ordered_json to_json(const CodegreeReport& report) {
  ordered_json hist = ordered_json::object();
  for (std::size_t i = 0; i < report.histogram.size(); ++i) {
    if (report.histogram[i] == 0) continue;
    hist[i <= kHistogramCap ? std::to_string(i) : ">" + std::to_string(kHistogramCap)] =
        report.histogram[i];
  }
  ordered_json witness = nullptr;
  if (report.witness)
    witness = {{"u", report.witness->u}, {"v", report.witness->v}, {"common", report.witness->common}};
  return ordered_json{{"schema", kSchemaVersion},
                      {"t", report.t},
                      {"max_codegree", report.max_codegree},
                      {"k2t_free", !report.witness.has_value()},
                      {"histogram", std::move(hist)},
                      {"scanned_pairs", report.scanned_pairs},
                      {"complete_scan", report.complete_scan},
                      {"witness", std::move(witness)}};
}

ordered_json to_json(const LemmaCertificate& cert) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : cert.entries) {
    ordered_json located = nullptr;
    if (e.located)
      located = {{"set", e.located_positive ? "P" : "N"}, {"w", e.located->w}, {"b", e.located->b}};
    entries.push_back({{"f", e.f},
                       {"P_size", e.positive_count},
                       {"N_size", e.negative_count},
                       {"c", e.decomposition.c},
                       {"d", e.decomposition.d},
                       {"located", std::move(located)},
                       {"closed_form_match", e.closed_form_match},
                       {"pass", e.passes()}});
  }
  ordered_json failure = nullptr;
  if (cert.first_failure) failure = *cert.first_failure;
  return ordered_json{{"schema", kSchemaVersion}, {"t", cert.t},
                      {"p", cert.p},              {"pass", cert.pass},
                      {"first_failure", failure}, {"certificates", std::move(entries)}};
}

ordered_json to_json(const BoundsReport& r) {
  return ordered_json{{"schema", kSchemaVersion},
                      {"t", r.t},
                      {"p", r.p},
                      {"n", r.n},
                      {"lower", r.lower},
                      {"upper", r.upper},
                      {"upper_floor", r.upper_floor},
                      {"normalized_lower", r.normalized_lower},
                      {"normalized_upper", r.normalized_upper},
                      {"asymptotic_constant", r.asymptotic_constant},
                      {"chi3_constant", r.chi3_constant},
                      {"sandwich_ratio", r.sandwich_ratio},
                      {"normalized_lower_closed_form", r.normalized_lower_closed_form},
                      {"identity_relative_error", r.identity_relative_error}};
}

ordered_json to_json(const SearchResult& result, bool exact) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : result.witness) edges.push_back({e.lo, e.hi});
  return ordered_json{{"schema", kSchemaVersion},
                      {"n", result.n},
                      {"t", result.t},
                      {exact ? "exact_value" : "lower_estimate", result.exact_value},
                      {"exact", exact},
                      {"nodes_explored", result.nodes_explored},
                      {"witness", std::move(edges)}};
}

ordered_json to_json(const CodegreeSumReport& report) {
  ordered_json parts = ordered_json::array();
  for (const auto& p : report.parts)
    parts.push_back({{"sum", p.sum}, {"limit", p.limit}, {"holds", p.holds}});
  ordered_json pairs = ordered_json::array();
  for (const auto& p : report.pair_sums)
    pairs.push_back({{"value", p.value}, {"limit", p.limit}, {"holds", p.holds}});
  return ordered_json{{"parts", std::move(parts)}, {"pair_sums", std::move(pairs)}, {"holds", report.holds}};
}

}  // namespace turan
