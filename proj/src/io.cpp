#include "xroute/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace xroute {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, const std::string& where) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    parse_error(where + ": expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view token, const std::string& where) {
  const std::uint64_t v = parse_uint(token, where);
  if (v > 0xffffffffULL) parse_error(where + ": vertex id too large");
  return static_cast<Vertex>(v);
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string graph_text(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.degree()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) parse_error("graph file is empty");
  const auto header = split_ws(lines[0]);
  if (header.size() != 2) parse_error("line 1: expected 'n d'");
  const std::uint64_t n = parse_uint(header[0], "line 1");
  const std::uint64_t d = parse_uint(header[1], "line 1");
  if (n == 0) parse_error("line 1: n must be positive");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = "line " + std::to_string(i + 1);
    const auto tokens = split_ws(lines[i]);
    if (tokens.size() != 2) parse_error(where + ": expected 'u v'");
    const Edge e{parse_vertex(tokens[0], where), parse_vertex(tokens[1], where)};
    if (e.u >= e.v) parse_error(where + ": edge must satisfy u < v");
    if (e.v >= n) parse_error(where + ": vertex out of range");
    if (!edges.empty() && !(edges.back() < e)) parse_error(where + ": edges not strictly sorted");
    edges.push_back(e);
  }
  if (n * d % 2 != 0 || edges.size() != n * d / 2) {
    parse_error("expected " + std::to_string(n * d / 2) + " edges for n=" + std::to_string(n) +
                " d=" + std::to_string(d) + ", found " + std::to_string(edges.size()));
  }
  Graph g = Graph::from_edge_list(n, edges);
  if (g.degree() != d) parse_error("header degree does not match edges");
  return g;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : graph_text(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string permutation_text(const Permutation& p) {
  std::string out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(p(static_cast<Vertex>(v)));
  }
  out += '\n';
  return out;
}

Permutation parse_permutation(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 1) parse_error("permutation file must be a single line");
  std::vector<Vertex> map;
  for (auto token : split_ws(lines[0])) map.push_back(parse_vertex(token, "permutation"));
  if (map.empty()) parse_error("permutation is empty");
  try {
    return Permutation(std::move(map));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

std::string schedule_text(const Schedule& s) {
  std::string out;
  for (std::size_t r = 0; r < s.rounds.size(); ++r) {
    out += "round " + std::to_string(r + 1) + ":";
    for (const Edge& e : s.rounds[r].edges) {
      out += ' ';
      out += to_string(e);
    }
    out += '\n';
  }
  return out;
}

Schedule parse_schedule_text(std::string_view text) {
  Schedule s;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = "schedule line " + std::to_string(i + 1);
    const auto tokens = split_ws(lines[i]);
    const std::string label = std::to_string(i + 1) + ":";
    if (tokens.size() < 2 || tokens[0] != "round" || tokens[1] != label) {
      parse_error(where + ": expected 'round " + label + "'");
    }
    Matching m;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      const auto dash = tokens[t].find('-');
      if (dash == std::string_view::npos) parse_error(where + ": expected u-v");
      const Edge e{parse_vertex(tokens[t].substr(0, dash), where),
                   parse_vertex(tokens[t].substr(dash + 1), where)};
      if (e.u >= e.v) parse_error(where + ": edge must satisfy u < v");
      m.edges.push_back(e);
    }
    s.rounds.push_back(std::move(m));
  }
  return s;
}

std::string schedule_json(const Schedule& s, const std::string& hash) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const Matching& m : s.rounds) {
    nlohmann::json round = nlohmann::json::array();
    for (const Edge& e : m.edges) round.push_back({e.u, e.v});
    rounds.push_back(std::move(round));
  }
  nlohmann::json doc;
  doc["graph_hash"] = hash;
  doc["rounds"] = std::move(rounds);
  return doc.dump() + "\n";
}

HashedSchedule parse_schedule_json(std::string_view text) {
  HashedSchedule out;
  try {
    const auto doc = nlohmann::json::parse(text);
    out.graph_hash = doc.at("graph_hash").get<std::string>();
    for (const auto& round : doc.at("rounds")) {
      Matching m;
      for (const auto& pair : round) {
        if (pair.size() != 2) parse_error("schedule edge must have two endpoints");
        const Edge e{pair[0].get<Vertex>(), pair[1].get<Vertex>()};
        if (e.u >= e.v) parse_error("schedule edge must satisfy u < v");
        m.edges.push_back(e);
      }
      out.schedule.rounds.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("schedule json: ") + e.what());
  }
  return out;
}

HashedSchedule parse_schedule_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_schedule_json(text);
  return {"", parse_schedule_text(text)};
}

std::string partition_text(const Partition& p) {
  std::string out;
  for (Side s : p.side) out += s == Side::One ? '1' : '2';
  out += '\n';
  return out;
}

Partition parse_partition(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 1) parse_error("partition must be a single line");
  Partition p;
  for (char c : lines[0]) {
    if (c == '1') {
      p.side.push_back(Side::One);
    } else if (c == '2') {
      p.side.push_back(Side::Two);
    } else {
      parse_error(std::string("partition: unexpected character '") + c + "'");
    }
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::Io, "write failed for " + path);
}

}  // namespace xroute
