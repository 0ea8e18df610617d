#include "copc/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace copc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool to_int(std::string_view s, long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string where(int line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  long n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto f = fields(line);
    if (n < 0) {
      if (f.size() != 2 || f[0] != "n" || !to_int(f[1], n) || n < 0) {
        throw ParseError(where(line_no) + "expected header 'n <count>'");
      }
      if (n > kMaxVertices) {
        throw ParseError(where(line_no) + "order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices));
      }
      continue;
    }
    long u = 0;
    long v = 0;
    if (f.size() != 2 || !to_int(f[0], u) || !to_int(f[1], v)) {
      throw ParseError(where(line_no) + "expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where(line_no) + "endpoint out of range");
    if (u == v) throw ParseError(where(line_no) + "self-loop at vertex " + std::to_string(u));
    const Edge e(static_cast<int>(u), static_cast<int>(v));
    if (!seen.insert(e).second) {
      throw ParseError(where(line_no) + "duplicate edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing header 'n <count>'");
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("graph6: empty string");
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] < 63 || line[i] > 126) {
      throw ParseError("graph6: invalid character at position " + std::to_string(i));
    }
  }
  const int n = line[0] - 63;
  if (n > 62) throw ParseError("graph6: only single-byte orders (n <= 62) are supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (line.size() - 1 < chars) throw ParseError("graph6: truncated bit string");
  if (line.size() - 1 > chars) throw ParseError("graph6: trailing characters");
  if (n > kMaxVertices) throw ParseError("graph6: order exceeds supported size");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 writer supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace copc
