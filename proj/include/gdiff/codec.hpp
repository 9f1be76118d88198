#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdiff/graph.hpp"

namespace gdiff {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// ---------------------------------------------------------------------------
// graph6
//
// N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... taken
// column by column, six bits per byte, each byte offset by 63, padded with
// zero bits on the right. N(n) is one byte for n <= 62, otherwise 126 and
// three 6-bit bytes.
// ---------------------------------------------------------------------------

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacency()[i].contains(j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == ';') throw ParseError("graph6: sparse6 input is not supported");
  if (text.front() == '&') throw ParseError("graph6: digraph6 input is not supported");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw ParseError("graph6: invalid byte " + std::to_string(b));
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw ParseError("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | (text[pos] - 63);
    if (n <= 62) throw ParseError("graph6: order " + std::to_string(n) + " must use the one-byte form");
  }
  if (n > kCapacity) throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity " + std::to_string(kCapacity));

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for order " + std::to_string(n) + ", got " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    const int last = text.back() - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

// ---------------------------------------------------------------------------
// Edge list: a line "n <count>" followed by one "a b" line per edge. Blank
// lines and lines starting with '#' are ignored. A new "n" line starts the
// next graph.
// ---------------------------------------------------------------------------

inline std::string write_edgelist(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long parse_int(std::string_view tok, int line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("not an integer: '" + std::string(tok) + "'", line_no);
  }
  return value;
}

}  // namespace detail

/// Parses every graph in the text.
inline std::vector<Graph> parse_edgelists(std::string_view text) {
  std::vector<Graph> out;
  std::optional<GraphBuilder> current;
  long order = 0;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].starts_with('#')) {
      if (end == text.size()) break;
      continue;
    }
    if (toks[0] == "n") {
      if (toks.size() != 2) throw ParseError("expected 'n <count>'", line_no);
      order = detail::parse_int(toks[1], line_no);
      if (order < 0 || order > kCapacity) throw ParseError("vertex count outside [0, " + std::to_string(kCapacity) + "]", line_no);
      if (current) out.push_back(current->build());
      current.emplace(static_cast<int>(order));
    } else {
      if (!current) throw ParseError("edge before the 'n <count>' line", line_no);
      if (toks.size() != 2) throw ParseError("expected 'a b'", line_no);
      const long a = detail::parse_int(toks[0], line_no);
      const long b = detail::parse_int(toks[1], line_no);
      if (a < 0 || b < 0 || a >= order || b >= order) throw ParseError("endpoint outside 0..n-1", line_no);
      if (a == b) throw ParseError("self-loop on vertex " + std::to_string(a), line_no);
      if (current->has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
        throw ParseError("duplicate edge " + std::to_string(a) + " " + std::to_string(b), line_no);
      }
      current->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (current) out.push_back(current->build());
  return out;
}

/// Parses exactly one graph.
inline Graph parse_edgelist(std::string_view text) {
  auto graphs = parse_edgelists(text);
  if (graphs.size() != 1) throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

/// One graph per non-empty line; an optional >>graph6<< header is accepted.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

}  // namespace gdiff
