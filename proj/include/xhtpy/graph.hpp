#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xhtpy/error.hpp"
#include "xhtpy/vertex_set.hpp"

namespace xhtpy {

using VertexId = std::string;
using LabelEdge = std::pair<VertexId, VertexId>;
using IndexEdge = std::pair<Vertex, Vertex>;

// True iff `label` is usable as a vertex label: nonempty, no whitespace, no '-'.
bool is_valid_label(std::string_view label) noexcept;

/// Finite undirected graph with loops allowed and no multi-edges.
///
/// Vertices are kept in lexicographic label order, so vertex index order is
/// the canonical order used by every enumeration. A loop at v means v is in
/// its own neighborhood. Graphs are immutable; copies share storage.
class Graph {
 public:
  Graph();

  // Throws DuplicateVertex, UnknownVertex or InvalidLabel. Repeated edges
  // collapse; {v,v} is a loop.
  static Graph make(std::vector<VertexId> vertices,
                    const std::vector<LabelEdge>& edges);

  // Index-level constructor used by derived constructions. `edges` refer to
  // positions in `vertices` (before sorting).
  static Graph from_indices(std::vector<VertexId> vertices,
                            const std::vector<IndexEdge>& edges);

  std::size_t order() const noexcept;
  std::size_t edge_count() const noexcept;
  bool empty() const noexcept { return order() == 0; }

  const std::vector<VertexId>& labels() const noexcept;
  const VertexId& label(Vertex v) const { return labels()[v]; }
  std::optional<Vertex> find(std::string_view label) const;
  // Throws UnknownVertex.
  Vertex index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return neighborhood(u).contains(v);
  }
  bool looped(Vertex v) const noexcept { return adjacent(v, v); }
  const VertexSet& neighborhood(Vertex v) const noexcept;
  // A loop counts once.
  std::size_t degree(Vertex v) const noexcept { return neighborhood(v).count(); }

  // Canonically ordered edges (u <= v).
  std::vector<IndexEdge> edges() const;
  std::vector<LabelEdge> label_edges() const;

  std::size_t loop_count() const noexcept;
  bool is_simple() const noexcept { return loop_count() == 0; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data;
  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

inline Graph make_graph(std::vector<VertexId> vertices,
                        const std::vector<LabelEdge>& edges) {
  return Graph::make(std::move(vertices), edges);
}

// N(v) as labels; v is included iff v is looped.
std::set<VertexId> neighbors(const Graph& g, std::string_view v);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);
// Throws UnknownVertex.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

// Categorical product. Vertex (g,h) is labelled "(g,h)".
Graph product(const Graph& g, const Graph& h);

// I_n: path 0..n with a loop at every vertex.
Graph interval(std::size_t n);

// Relabels every vertex; `rename` must be injective and produce valid labels.
Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& rename);

// Coproduct. Vertices are tagged "<left_tag><label>" / "<right_tag><label>".
Graph disjoint_union(const Graph& a, const Graph& b, std::string_view left_tag,
                     std::string_view right_tag);

/// A vertex assignment between two graphs that preserves edges (loops included).
class GraphMap {
 public:
  // Throws NotAGraphMap (with the first violating edge) or BadParameter.
  GraphMap(Graph domain, Graph codomain, std::vector<Vertex> images);

  static GraphMap identity(const Graph& g);
  // Throws UnknownVertex, BadParameter (missing vertex) or NotAGraphMap.
  static GraphMap from_labels(Graph domain, Graph codomain,
                              const std::map<VertexId, VertexId>& assignment);
  // The inclusion of an induced subgraph (labels shared) into `host`.
  static GraphMap inclusion(const Graph& sub, const Graph& host);

  const Graph& domain() const noexcept { return domain_; }
  const Graph& codomain() const noexcept { return codomain_; }
  const std::vector<Vertex>& images() const noexcept { return images_; }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const VertexId& image(std::string_view v) const;

  std::map<VertexId, VertexId> assignment() const;

  bool injective() const;
  // Injective and reflects edges: f(u)f(v) edge implies uv edge.
  bool is_induced_inclusion() const;
  bool same_signature(const GraphMap& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_;
  }

  friend bool operator==(const GraphMap& a, const GraphMap& b) {
    return a.images_ == b.images_ && a.same_signature(b);
  }

 private:
  struct Unchecked {};
  GraphMap(Unchecked, Graph domain, Graph codomain, std::vector<Vertex> images)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        images_(std::move(images)) {}
  friend GraphMap make_unchecked(Graph, Graph, std::vector<Vertex>);

  Graph domain_;
  Graph codomain_;
  std::vector<Vertex> images_;
};

// Skips edge validation. For internal callers that have already established
// edge preservation (search results, compositions).
GraphMap make_unchecked(Graph domain, Graph codomain, std::vector<Vertex> images);

struct MapCheck {
  bool ok = true;
  std::optional<LabelEdge> violation;
};

// Index-level check; `images` must have one entry per domain vertex.
MapCheck check_graph_map(const Graph& a, const Graph& b,
                         const std::vector<Vertex>& images);
// Throws UnknownVertex for out-of-range images, BadParameter if not total.
MapCheck is_graph_map(const Graph& a, const Graph& b,
                      const std::map<VertexId, VertexId>& assignment);

// (g o f)(v) = g(f(v)). Throws DomainMismatch unless codomain(f) == domain(g).
GraphMap compose(const GraphMap& g, const GraphMap& f);

}  // namespace xhtpy
