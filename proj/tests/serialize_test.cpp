#include <doctest.h>

#include <sstream>

#include "turan/construction.hpp"
#include "turan/error.hpp"
#include "turan/serialize.hpp"

using namespace turan;

namespace {

ErrorKind read_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a read error");
  return ErrorKind::io;
}

}  // namespace

TEST_CASE("edge list layout") {
  const auto params = derive_params(2, 3);
  std::ostringstream os;
  write_edge_list(os, params, build_graph(params));
  CHECK(os.str() ==
        "turan-forge v1 t=2 p=3 a=2 n=3 g=2\n"
        "0 5\n0 7\n1 3\n1 8\n2 4\n2 6\n3 8\n4 6\n5 7\n");
}

TEST_CASE("edge list round trip") {
  for (auto [t, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 13}, {4, 7}, {6, 31}}) {
    const auto params = derive_params(t, p);
    const auto g = build_graph(params);
    std::stringstream ss;
    write_edge_list(ss, params, g);
    const auto file = read_edge_list(ss);
    CHECK(file.t == t);
    CHECK(file.p == p);
    CHECK(file.n == params.n);
    CHECK(file.graph == g);
  }
}

TEST_CASE("edge list errors") {
  CHECK(read_error("") == ErrorKind::io);
  CHECK(read_error("something else\n") == ErrorKind::io);
  CHECK(read_error("turan-forge v1 t=2\n0 1\n") == ErrorKind::io);          // no n
  CHECK(read_error("turan-forge v1 t=2 n=x\n") == ErrorKind::io);
  CHECK(read_error("turan-forge v1 t=2 n=2\n0 2 5\n") == ErrorKind::io);
  CHECK(read_error("turan-forge v1 t=2 n=2\n0 -2\n") == ErrorKind::io);
  CHECK(read_error("turan-forge v1 t=2 n=2\n0 6\n") == ErrorKind::invalid_params);
  CHECK(read_error("turan-forge v1 t=2 n=2\n0 1\n") == ErrorKind::invalid_params);  // same part
}

TEST_CASE("codegree report json") {
  const auto j = to_json(scan_codegrees(complete_tripartite(2), 2));
  CHECK(j["schema"] == "v1");
  CHECK(j["max_codegree"] == 4);
  CHECK(j["complete_scan"] == true);
  CHECK(j["witness"]["u"] == 0);
  CHECK(j["witness"]["common"].size() == 4);
  CHECK(j["histogram"]["4"] == 3);

  const auto clean = to_json(scan_codegrees(build_graph(derive_params(2, 5)), 2));
  CHECK(clean["witness"].is_null());
  CHECK(clean["histogram"]["1"] == 180);
}

TEST_CASE("lemma and bounds json") {
  const auto lemma = to_json(check_lemma1(derive_params(4, 7)));
  CHECK(lemma["pass"] == true);
  CHECK(lemma["certificates"].size() == 6);
  CHECK(lemma["certificates"][2]["located"]["set"] == "P");  // f = 3
  CHECK(lemma["certificates"][2]["located"]["w"] == 6);

  const auto bounds = to_json(sandwich_report(2, 5));
  CHECK(bounds["lower"] == 60);
  CHECK(bounds["upper_floor"] == 80);
}
