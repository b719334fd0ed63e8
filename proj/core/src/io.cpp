#include "ppart/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace ppart {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

long long parse_int(std::string_view tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(tok) + "'");
  return v;
}

std::vector<long long> parse_int_line(std::string_view line, int lineno) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.push_back(parse_int(line.substr(pos, end - pos), lineno));
    pos = end;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  bool have_header = false;
  long long header_n = -1;
  std::vector<std::pair<long long, long long>> edges;
  long long max_id = -1;
  bool seen_content = false;

  for (size_t i = 0; i < lines.size(); ++i) {
    int lineno = static_cast<int>(i) + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.substr(0, 2) == "n=") {
      if (seen_content)
        throw ParseError(lineno, "n= header must be the first line");
      header_n = parse_int(line.substr(2), lineno);
      have_header = true;
      seen_content = true;
      continue;
    }
    seen_content = true;
    auto nums = parse_int_line(line, lineno);
    if (nums.size() != 2)
      throw ParseError(lineno, "expected 'u v'");
    auto [u, v] = std::pair(nums[0], nums[1]);
    if (u == v) throw ParseError(lineno, "self-loop rejected");
    if (have_header && (u >= header_n || v >= header_n))
      throw ParseError(lineno, "vertex id exceeds declared n");
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }

  long long n = have_header ? header_n : max_id + 1;
  if (n > 1'000'000) throw ParseError(0, "graph too large");
  Graph g(static_cast<int>(n));
  for (auto [u, v] : edges)
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
  line = trim(line);
  if (line.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : line)
    if (c < 63 || c > 126)
      throw ParseError(1, "graph6 byte out of range");

  size_t pos = 0;
  long long n;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
    pos = 4;
    if (n < 63) throw ParseError(1, "non-canonical graph6 order encoding");
  } else if (line.size() >= 8) {
    n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (line[i] - 63);
    pos = 8;
    if (n < 258048) throw ParseError(1, "non-canonical graph6 order encoding");
  } else {
    throw ParseError(1, "truncated graph6 order");
  }
  if (n > 1'000'000) throw ParseError(1, "graph too large");

  long long bits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos != need)
    throw ParseError(1, "graph6 body has wrong length");

  // consume bits in column order: (0,1),(0,2),(1,2),(0,3),...
  Graph g(static_cast<int>(n));
  size_t idx = pos;
  int group = 0, left = 0;
  auto next_bit = [&]() {
    if (left == 0) {
      group = line[idx++] - 63;
      left = 6;
    }
    --left;
    return (group >> left) & 1;
  };
  for (long long col = 1; col < n; ++col)
    for (long long row = 0; row < col; ++row)
      if (next_bit())
        g.add_edge(static_cast<int>(row), static_cast<int>(col));
  while (left > 0)
    if (next_bit()) throw ParseError(1, "nonzero padding bits");
  return g;
}

std::string emit_graph6(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph6 emit supports n <= 258047");
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  std::string_view probe = text;
  // find the first non-blank line
  while (!probe.empty()) {
    size_t nl = probe.find('\n');
    std::string_view line = trim(probe.substr(0, nl));
    if (!line.empty()) {
      if (line.substr(0, 2) == "n=" || line.substr(0, 10) == ">>graph6<<")
        return line.substr(0, 2) == "n=" ? parse_edge_list(text)
                                         : parse_graph6(line);
      if (line.find(' ') != std::string_view::npos ||
          line.find('\t') != std::string_view::npos)
        return parse_edge_list(text);
      if (line.front() >= 63 && line.front() <= 126) return parse_graph6(line);
      return parse_edge_list(text);
    }
    if (nl == std::string_view::npos) break;
    probe.remove_prefix(nl + 1);
  }
  return Graph(0);
}

std::string serialize_partition(const Partition& p) {
  std::ostringstream os;
  os << "kind="
     << (p.kind == PartitionKind::TwoProper ? "2proper" : "almost") << "\n";
  for (const auto& part : p.parts) {
    for (size_t i = 0; i < part.size(); ++i)
      os << (i ? " " : "") << part[i];
    os << "\n";
  }
  return os.str();
}

Partition parse_partition(std::string_view text) {
  auto lines = split_lines(text);
  Partition p;
  bool have_kind = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    int lineno = static_cast<int>(i) + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    if (!have_kind) {
      if (line == "kind=2proper")
        p.kind = PartitionKind::TwoProper;
      else if (line == "kind=almost")
        p.kind = PartitionKind::AlmostTwoProper;
      else
        throw ParseError(lineno, "expected kind=2proper or kind=almost");
      have_kind = true;
      continue;
    }
    auto nums = parse_int_line(line, lineno);
    if (nums.empty()) throw ParseError(lineno, "empty part");
    std::vector<int> part;
    for (long long v : nums) {
      if (v > 1'000'000) throw ParseError(lineno, "vertex id too large");
      part.push_back(static_cast<int>(v));
    }
    p.parts.push_back(std::move(part));
  }
  if (!have_kind) throw ParseError(1, "missing kind= header");
  return p;
}

}  // namespace ppart
