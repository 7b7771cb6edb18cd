#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "xhtpy/graph.hpp"

namespace xhtpy {

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct NamedMap {
  std::string name;
  std::string domain_name;
  std::string codomain_name;
  GraphMap map;
};

/// Graphs and maps read from the block text format:
///
///   graph <name>
///   vertices: v1 v2 ...
///   edges: u-v u-u ...
///
///   map <name> : <graph> -> <graph>
///   <v> -> <w>
///
/// Blank lines and lines starting with '#' separate nothing and are ignored.
struct Document {
  std::vector<NamedGraph> graphs;
  std::vector<NamedMap> maps;

  // Throw BadParameter when the name is absent.
  const Graph& graph(std::string_view name) const;
  const GraphMap& map(std::string_view name) const;
  const NamedMap& named_map(std::string_view name) const;
  bool has_graph(std::string_view name) const;
  bool has_map(std::string_view name) const;

  void add_graph(std::string name, Graph g);
  // Both graphs must already be present under the given names.
  void add_map(std::string name, std::string domain_name, std::string codomain_name,
               GraphMap m);
};

// Throws ParseError naming the line; graph and map errors are wrapped with their code.
Document parse_document(std::string_view text);
Document read_document(const std::string& path);

std::string serialize_graph(const Graph& g, std::string_view name);
std::string serialize_map(const GraphMap& m, std::string_view name, std::string_view domain_name,
                          std::string_view codomain_name);
std::string serialize_document(const Document& doc);

// Parses a single graph block; the name is discarded.
Graph parse_graph(std::string_view text);

// Undirected DOT with loops as self-edges; statement order follows vertex
// and edge order.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace xhtpy
