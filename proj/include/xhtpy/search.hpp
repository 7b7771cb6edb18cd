#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xhtpy/graph.hpp"

namespace xhtpy {

enum class CopyMode { Induced, Subgraph };

std::string_view to_string(CopyMode mode);

// An injective map pattern -> host, edge-preserving (subgraph) and
// additionally non-edge-preserving (induced).
struct Embedding {
  Graph pattern;
  Graph host;
  std::vector<Vertex> vertex_image;
  CopyMode mode = CopyMode::Subgraph;

  VertexSet image_vertices() const;
  // Image of the pattern's edges, canonically ordered (u <= v in host indices).
  std::vector<IndexEdge> image_edges() const;
  // Host subgraph on image_vertices() carrying exactly image_edges().
  Graph image_graph() const;
  // Re-checks the mode predicate edge by edge.
  bool verify() const;
};

struct HomSearchOptions {
  Budget budget{};
  // Per-domain-vertex candidate sets; empty means unrestricted.
  std::vector<VertexSet> domains;
  bool injective = false;
  // With injective = true: also require non-edges to map to non-edges.
  bool induced = false;
  // Assign domain vertices in index order, so visits come out in
  // lexicographic order. Otherwise a connectivity/degree order is used.
  bool lexicographic = false;
};

namespace detail {

// Visits every edge-preserving assignment satisfying `options`, in an
// unspecified order. Returning false from `visit` stops the search. Throws
// BudgetExceeded once more than budget.search_nodes partial assignments
// have been extended.
void search_maps(const Graph& a, const Graph& b, const HomSearchOptions& options,
                 const std::function<bool(const std::vector<Vertex>&)>& visit);

}  // namespace detail

// All graph maps a -> b in lexicographic order of their image vectors.
std::vector<GraphMap> enumerate_homs(const Graph& a, const Graph& b,
                                     const Budget& budget = {});
std::vector<std::vector<Vertex>> enumerate_hom_images(const Graph& a, const Graph& b,
                                                      const HomSearchOptions& options = {});

std::uint64_t count_homs(const Graph& a, const Graph& b, const Budget& budget = {});

// All embeddings of pattern in host, in lexicographic order. With
// `distinct_sets` only the first embedding per (vertex set, edge set) image
// is kept, which collapses pattern automorphisms.
std::vector<Embedding> enumerate_copies(const Graph& pattern, const Graph& host,
                                        CopyMode mode, bool distinct_sets = false,
                                        const Budget& budget = {});

// Lexicographically least isomorphism g -> h, if any.
std::optional<GraphMap> is_isomorphic(const Graph& g, const Graph& h);

}  // namespace xhtpy
