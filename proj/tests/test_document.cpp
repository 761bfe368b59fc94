#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphdiv/error.hpp"
#include "support.hpp"

using namespace graphdiv;
using namespace testing;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorCode parse_error(std::string_view text) {
  try {
    GraphDocument::parse(text).graph();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("fixtures round-trip byte for byte") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    const std::string text = read_file(entry.path().string());
    const GraphDocument doc = GraphDocument::parse(text);
    CHECK_MESSAGE(doc.serialize() == text, entry.path().filename().string());
    CHECK(GraphDocument::parse(doc.serialize()) == doc);
    CHECK_NOTHROW(doc.graph());
  }
  CHECK(seen >= 15);
}

TEST_CASE("from_graph keeps ids, weights, loops and edge order") {
  const Graph g = figure1();
  const GraphDocument doc = GraphDocument::from_graph(g);
  CHECK(doc.vertices == std::vector<Vertex>{{"v", 1}, {"w", 0}});
  CHECK(doc.edges == EdgeIds{{"v", "w"}, {"w", "w"}});
  CHECK(doc.divisors.empty());
  CHECK(doc.serialize().find("divisors") == std::string::npos);
  const Graph back = doc.graph();
  CHECK(genus(back) == 2);
  CHECK(back.loops_at(1) == 1);
}

TEST_CASE("named divisors") {
  const GraphDocument doc = GraphDocument::load(fixture("failsc.json"));
  REQUIRE(doc.divisor("a") != nullptr);
  CHECK(*doc.divisor("a") == Coeffs{-2, 3, -1});
  CHECK(doc.divisor("zzz") == nullptr);
  CHECK(doc.divisors.front().first == "a");
}

TEST_CASE("unicode ids survive") {
  const std::string text =
      "{\n  \"vertices\": [\n    {\n      \"id\": \"α\",\n      \"weight\": 1\n    }\n  ],\n  \"edges\": []\n}\n";
  const GraphDocument doc = GraphDocument::parse(text);
  CHECK(doc.vertices[0].id == "α");
  CHECK(doc.serialize() == text);
}

TEST_CASE("malformed documents") {
  CHECK(parse_error("{") == ErrorCode::ParseError);
  CHECK(parse_error("[]") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"edges": []})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [{"weight": 1}]})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [{"id": 3}]})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [{"id": "a", "weight": 1.5}]})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [{"id": "a"}], "edges": [["a"]]})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [{"id": "a"}], "divisors": {"d": [1, "x"]}})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [{"id": "a"}, {"id": "a"}]})") == ErrorCode::DuplicateVertexId);
  CHECK(parse_error(R"({"vertices": [{"id": "a"}], "divisors": {"d": [1, 2]}})") == ErrorCode::SizeMismatch);
  CHECK(parse_error(R"({"vertices": [{"id": "a"}], "edges": [["a", "b"]]})") == ErrorCode::UnknownVertexId);
  CHECK(parse_error(R"({"vertices": [{"id": "a", "weight": -1}]})") == ErrorCode::NegativeWeight);
  CHECK(parse_error(R"({"vertices": [{"id": "a"}, {"id": "b"}]})") == ErrorCode::DisconnectedGraph);
  CHECK(parse_error(R"({"vertices": []})") == ErrorCode::EmptyGraph);
  CHECK_THROWS_AS(GraphDocument::load(fixture("does-not-exist.json")), Error);
}

TEST_CASE("divisor literals") {
  CHECK(parse_divisor_literal("(-2,3,-1)") == Coeffs{-2, 3, -1});
  CHECK(parse_divisor_literal("(−2,3,−1)") == Coeffs{-2, 3, -1});
  CHECK(parse_divisor_literal("[1, 2]") == Coeffs{1, 2});
  CHECK(parse_divisor_literal(" 4 ") == Coeffs{4});
  CHECK(parse_divisor_literal("+1,-0") == Coeffs{1, 0});
  for (const char* bad : {"", "()", "(1,,2)", "(1;2)", "(a)", "(1,2", "99999999999999999999"}) {
    CHECK_THROWS_AS(parse_divisor_literal(bad), Error);
  }
}
