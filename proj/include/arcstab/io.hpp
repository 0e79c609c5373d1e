#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/action.hpp"
#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/perm.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {
namespace detail {

// All non-blank, non-comment lines of the stream, with trailing CR stripped
// so files written on other platforms still parse.
inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io, "cannot open " + path + " for reading");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Errc::io, "cannot open " + path + " for writing");
  return out;
}

}  // namespace detail

// Group file: a "degree n" line, then one generator per line, either as n
// whitespace-separated images of 0..n-1 or as "cycles: (0 1 2)(3 4)".
inline PermGroup read_group(std::istream& in) {
  auto lines = detail::content_lines(in);
  require(!lines.empty(), Errc::parse, "group file has no content");
  std::istringstream head(lines[0]);
  std::string keyword;
  int degree = 0;
  head >> keyword >> degree;
  require(!head.fail() && keyword == "degree" && degree >= 1, Errc::parse,
          "group file must start with 'degree n', got: " + lines[0]);
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.find("cycles:") != std::string::npos) {
      gens.push_back(parse_cycles(degree, line.substr(line.find("cycles:") + 7)));
      continue;
    }
    std::istringstream row(line);
    std::vector<int> images;
    int x;
    while (row >> x) images.push_back(x);
    require(row.eof(), Errc::parse, "non-numeric token in generator line: " + line);
    require(static_cast<int>(images.size()) == degree, Errc::parse,
            "generator line has " + std::to_string(images.size()) + " images, expected " +
                std::to_string(degree) + ": " + line);
    gens.push_back(Perm::from_images(images));
  }
  return PermGroup(degree, gens);
}

inline void write_group(std::ostream& out, const PermGroup& g) {
  out << "degree " << g.degree() << "\n";
  for (const Perm& p : g.generators()) {
    const auto& img = p.images();
    for (int i = 0; i < g.degree(); ++i) out << (i ? " " : "") << img[i];
    out << "\n";
  }
}

// Graph file: an "n m" line, then m edge lines "u v" with u < v.
inline Graph read_graph(std::istream& in) {
  auto lines = detail::content_lines(in);
  require(!lines.empty(), Errc::parse, "graph file has no content");
  std::istringstream head(lines[0]);
  long long n = 0, m = 0;
  head >> n >> m;
  require(!head.fail() && n >= 0 && m >= 0, Errc::parse,
          "graph file must start with 'n m', got: " + lines[0]);
  require(static_cast<long long>(lines.size()) == 1 + m, Errc::parse,
          "graph file declares " + std::to_string(m) + " edges but has " +
              std::to_string(lines.size() - 1) + " edge lines");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 1; i <= m; ++i) {
    std::istringstream row(lines[static_cast<std::size_t>(i)]);
    int u = 0, v = 0;
    row >> u >> v;
    require(!row.fail(), Errc::parse, "malformed edge line: " + lines[i]);
    require(u >= 0 && v < n && u < v, Errc::parse,
            "edge must satisfy 0 <= u < v < n: " + lines[i]);
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.vertex_count() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
}

inline PermGroup read_group_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_group(in);
}

inline Graph read_graph_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_graph(in);
}

inline void write_group_file(const std::string& path, const PermGroup& g) {
  auto out = detail::open_output(path);
  write_group(out, g);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
  auto out = detail::open_output(path);
  write_graph(out, g);
}

// A pair on disk is <base>.graph plus <base>.group; reading re-validates
// that every generator is an automorphism.
inline Pair read_pair(const std::string& base_path) {
  Graph graph = read_graph_file(base_path + ".graph");
  PermGroup group = read_group_file(base_path + ".group");
  return make_pair(std::move(graph), std::move(group));
}

inline void write_pair(const std::string& base_path, const Pair& pair) {
  write_graph_file(base_path + ".graph", pair.graph);
  write_group_file(base_path + ".group", pair.group);
}

}  // namespace arcstab
