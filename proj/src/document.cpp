#include "graphdiv/document.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "graphdiv/error.hpp"

namespace graphdiv {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::string as_id(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": expected a vertex id string");
  return j.get<std::string>();
}

}  // namespace

GraphDocument GraphDocument::parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("document must be a JSON object");

  GraphDocument doc;
  const auto vertices = root.find("vertices");
  if (vertices == root.end() || !vertices->is_array()) fail("missing \"vertices\" array");
  std::unordered_set<std::string> ids;
  for (const auto& v : *vertices) {
    if (!v.is_object() || !v.contains("id")) fail("each vertex needs an \"id\"");
    Vertex vertex{as_id(v["id"], "vertex id"), v.contains("weight") ? as_int(v["weight"], "vertex weight") : 0};
    if (!ids.insert(vertex.id).second) throw Error(ErrorCode::DuplicateVertexId, "vertex '" + vertex.id + "'");
    doc.vertices.push_back(std::move(vertex));
  }

  if (const auto edges = root.find("edges"); edges != root.end()) {
    if (!edges->is_array()) fail("\"edges\" must be an array");
    for (const auto& e : *edges) {
      if (!e.is_array() || e.size() != 2) fail("each edge must be a two-element array");
      doc.edges.emplace_back(as_id(e[0], "edge endpoint"), as_id(e[1], "edge endpoint"));
    }
  }

  if (const auto divisors = root.find("divisors"); divisors != root.end()) {
    if (!divisors->is_object()) fail("\"divisors\" must be an object");
    for (const auto& [name, values] : divisors->items()) {
      if (!values.is_array()) fail("divisor '" + name + "' must be an array");
      std::vector<std::int64_t> coeffs;
      for (const auto& c : values) coeffs.push_back(as_int(c, "divisor '" + name + "'"));
      if (coeffs.size() != doc.vertices.size()) {
        throw Error(ErrorCode::SizeMismatch, "divisor '" + name + "' has " + std::to_string(coeffs.size()) +
                                                 " entries for " + std::to_string(doc.vertices.size()) +
                                                 " vertices");
      }
      doc.divisors.emplace_back(name, std::move(coeffs));
    }
  }
  return doc;
}

GraphDocument GraphDocument::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

GraphDocument GraphDocument::from_graph(const Graph& g) {
  GraphDocument doc;
  doc.vertices.assign(g.vertices().begin(), g.vertices().end());
  for (const Edge& e : g.edges()) doc.edges.emplace_back(g.vertex(e.a).id, g.vertex(e.b).id);
  return doc;
}

std::string GraphDocument::serialize() const {
  json root;
  root["vertices"] = json::array();
  for (const auto& v : vertices) root["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  root["edges"] = json::array();
  for (const auto& [a, b] : edges) root["edges"].push_back({a, b});
  if (!divisors.empty()) {
    root["divisors"] = json::object();
    for (const auto& [name, coeffs] : divisors) root["divisors"][name] = coeffs;
  }
  return root.dump(2) + "\n";
}

Graph GraphDocument::graph() const { return Graph::build(vertices, edges); }

const std::vector<std::int64_t>* GraphDocument::divisor(std::string_view name) const {
  for (const auto& [n, coeffs] : divisors)
    if (n == name) return &coeffs;
  return nullptr;
}

std::vector<std::int64_t> parse_divisor_literal(std::string_view text) {
  // Normalise U+2212 (e2 88 92) to '-'.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
    } else {
      s += text[i];
    }
  }
  std::size_t begin = s.find_first_not_of(" \t");
  std::size_t end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) fail("empty divisor literal");
  if ((s[begin] == '(' && s[end] == ')') || (s[begin] == '[' && s[end] == ']')) {
    ++begin;
    --end;
  }
  std::vector<std::int64_t> out;
  std::string_view body(s.data() + begin, end + 1 - begin);
  while (true) {
    const std::size_t comma = body.find(',');
    std::string_view token = body.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      fail("bad divisor entry '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace graphdiv
