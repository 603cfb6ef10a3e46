#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace lambda_cdp {

enum class GraphFormat { edge_list, json };

namespace detail {

inline std::optional<long long> parse_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

// Shared edge validation so both formats report the same error kinds.
class EdgeCollector {
 public:
  explicit EdgeCollector(long long n) : n_(n) {}

  void add(long long u, long long v, std::size_t line) {
    auto label = "{" + std::to_string(u) + "," + std::to_string(v) + "}";
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw ParseError(ParseError::Kind::out_of_range, line,
                       "edge " + label + " has a vertex outside 1.." + std::to_string(n_));
    if (u == v) throw ParseError(ParseError::Kind::loop, line, "loop edge " + label);
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen_.insert(e).second)
      throw ParseError(ParseError::Kind::duplicate, line, "duplicate edge " + label);
    edges_.push_back(e);
  }

  Graph build() const { return Graph(static_cast<int>(n_), edges_); }

 private:
  long long n_;
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
};

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<EdgeCollector> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream tokens(raw);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;

    if (!edges) {
      if (tok[0] != "n" || tok.size() != 2)
        throw ParseError(ParseError::Kind::missing_header, line_no, "expected 'n <count>'");
      auto n = parse_int(tok[1]);
      if (!n || *n < 1)
        throw ParseError(ParseError::Kind::malformed, line_no, "vertex count must be a positive integer");
      edges.emplace(*n);
      continue;
    }
    if (tok[0] != "e" || tok.size() != 3)
      throw ParseError(ParseError::Kind::malformed, line_no, "expected 'e <u> <v>'");
    auto u = parse_int(tok[1]);
    auto v = parse_int(tok[2]);
    if (!u || !v) throw ParseError(ParseError::Kind::malformed, line_no, "edge endpoints must be integers");
    edges->add(*u, *v, line_no);
  }
  if (!edges) throw ParseError(ParseError::Kind::missing_header, line_no, "missing 'n <count>' line");
  return edges->build();
}

inline Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Kind::malformed, 1, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError(ParseError::Kind::missing_header, 1, "object with integer field \"n\" required");
  long long n = doc["n"].get<long long>();
  if (n < 1) throw ParseError(ParseError::Kind::malformed, 1, "vertex count must be a positive integer");
  EdgeCollector edges(n);
  if (doc.contains("edges")) {
    const auto& arr = doc["edges"];
    if (!arr.is_array()) throw ParseError(ParseError::Kind::malformed, 1, "\"edges\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& e = arr[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError(ParseError::Kind::malformed, i + 1, "edge must be a 2-element integer array");
      edges.add(e[0].get<long long>(), e[1].get<long long>(), i + 1);
    }
  }
  return edges.build();
}

}  // namespace detail

// For JSON input the reported "line" is the 1-based index into "edges".
inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? detail::parse_json(text) : detail::parse_edge_list(text);
}

// Guess the format from the first significant character.
inline GraphFormat detect_format(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{' ? GraphFormat::json : GraphFormat::edge_list;
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

}  // namespace lambda_cdp
