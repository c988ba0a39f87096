#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "turan/bounds.hpp"
#include "turan/construction.hpp"
#include "turan/oracle.hpp"
#include "turan/verifier.hpp"

namespace turan {

inline constexpr const char* kSchemaVersion = "v1";

/// `turan-forge v1 t=<t> p=<p> a=<a> n=<n_t> g=<g>`
std::string edge_list_header(const ConstructionParams& params);

/// Header line, then one `<min_id> <max_id>` line per edge in ascending
/// lexicographic order; every line newline-terminated.
void write_edge_list(std::ostream& out, const ConstructionParams& params,
                     const TripartiteGraph& g);

/// Oracle witnesses carry no field parameters: header is
/// `turan-forge v1 t=<t> n=<n>`.
void write_edge_list(std::ostream& out, std::uint64_t t, std::uint64_t n,
                     const std::vector<Edge>& edges);

struct EdgeListFile {
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> p;
  std::uint64_t n;
  TripartiteGraph graph;
};

/// Throws Error(io) on malformed input and Error(invalid_params) on edges
/// that are not valid cross-part pairs.
EdgeListFile read_edge_list(std::istream& in);

nlohmann::ordered_json to_json(const ConstructionParams& params);
nlohmann::ordered_json to_json(const CodegreeReport& report);
nlohmann::ordered_json to_json(const LemmaCertificate& cert);
nlohmann::ordered_json to_json(const BoundsReport& report);
nlohmann::ordered_json to_json(const SearchResult& result, bool exact);
nlohmann::ordered_json to_json(const CodegreeSumReport& report);

}  // namespace turan
