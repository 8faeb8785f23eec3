#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stdid/digraph.hpp"
#include "stdid/errors.hpp"

namespace stdid {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw FormatError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                                std::string(field) + "'");
  }
  return value;
}

}  // namespace

MarkedDigraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_number = 0;
  bool have_header = false;
  std::size_t n = 0;
  Vertex s = 0;
  Vertex t = 0;
  std::vector<Edge> edges;

  auto check_vertex = [&](std::size_t v, std::size_t line, const char* what) {
    if (v < 1 || v > n) {
      throw FormatError(line, std::string(what) + " " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
  };

  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!have_header) {
      if (fields.size() != 6 || fields[0] != "n" || fields[2] != "s" || fields[4] != "t") {
        throw FormatError(line_number, "expected header 'n <n> s <s> t <t>'");
      }
      n = parse_count(fields[1], line_number, "n");
      if (n == 0) throw FormatError(line_number, "n must be positive");
      s = parse_count(fields[3], line_number, "s");
      t = parse_count(fields[5], line_number, "t");
      check_vertex(s, line_number, "root s");
      check_vertex(t, line_number, "root t");
      have_header = true;
      continue;
    }

    if (fields.size() != 3) throw FormatError(line_number, "expected '<source> <target> <0|1>'");
    const std::size_t source = parse_count(fields[0], line_number, "source");
    const std::size_t target = parse_count(fields[1], line_number, "target");
    check_vertex(source, line_number, "source");
    check_vertex(target, line_number, "target");
    if (fields[2] != "0" && fields[2] != "1") throw FormatError(line_number, "marked flag must be 0 or 1");
    edges.push_back({source, target, fields[2] == "1"});
  }
  if (!have_header) throw FormatError(line_number + 1, "missing header line");
  return MarkedDigraph(n, s, t, std::move(edges));
}

MarkedDigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

MarkedDigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const MarkedDigraph& g) {
  out << "n " << g.vertex_count() << " s " << g.start() << " t " << g.end() << '\n';
  for (const Edge& e : g.edges()) out << e.source << ' ' << e.target << ' ' << (e.marked ? 1 : 0) << '\n';
}

std::string format_graph(const MarkedDigraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace stdid
