#include "xhtpy/search.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace xhtpy {

std::string_view to_string(CopyMode mode) {
  return mode == CopyMode::Induced ? "induced" : "subgraph";
}

VertexSet Embedding::image_vertices() const {
  VertexSet s(host.order());
  for (Vertex v : vertex_image) s.insert(v);
  return s;
}

std::vector<IndexEdge> Embedding::image_edges() const {
  std::vector<IndexEdge> out;
  for (const auto& [u, v] : pattern.edges()) {
    Vertex a = vertex_image[u];
    Vertex b = vertex_image[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Embedding::image_graph() const {
  std::vector<Vertex> hv = image_vertices().members();
  std::map<Vertex, Vertex> pos;
  std::vector<VertexId> labels;
  for (Vertex v : hv) {
    pos[v] = labels.size();
    labels.push_back(host.label(v));
  }
  std::vector<IndexEdge> edges;
  for (const auto& [u, v] : image_edges()) edges.emplace_back(pos[u], pos[v]);
  return Graph::from_indices(std::move(labels), edges);
}

bool Embedding::verify() const {
  if (vertex_image.size() != pattern.order()) return false;
  std::set<Vertex> seen;
  for (Vertex v : vertex_image) {
    if (v >= host.order() || !seen.insert(v).second) return false;
  }
  for (Vertex u = 0; u < pattern.order(); ++u) {
    for (Vertex v = u; v < pattern.order(); ++v) {
      const bool pe = pattern.adjacent(u, v);
      const bool he = host.adjacent(vertex_image[u], vertex_image[v]);
      if (pe && !he) return false;
      if (mode == CopyMode::Induced && !pe && he) return false;
    }
  }
  return true;
}

namespace detail {
namespace {

std::vector<Vertex> variable_order(const Graph& a, bool lexicographic) {
  const std::size_t n = a.order();
  std::vector<Vertex> order;
  order.reserve(n);
  if (lexicographic) {
    for (Vertex v = 0; v < n; ++v) order.push_back(v);
    return order;
  }
  // Greedy: most already-ordered neighbors first, then higher degree.
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || links[v] > links[best] ||
          (links[v] == links[best] && a.degree(v) > a.degree(best)))
        best = v;
    }
    placed[best] = true;
    order.push_back(best);
    a.neighborhood(best).for_each([&](Vertex u) { ++links[u]; });
  }
  return order;
}

class Searcher {
 public:
  Searcher(const Graph& a, const Graph& b, const HomSearchOptions& options,
           const std::function<bool(const std::vector<Vertex>&)>& visit)
      : a_(a), b_(b), opt_(options), visit_(visit),
        order_(variable_order(a, options.lexicographic)),
        image_(a.order(), 0),
        used_(b.order()),
        loops_(b.order()) {
    for (Vertex w = 0; w < b.order(); ++w)
      if (b.looped(w)) loops_.insert(w);
  }

  void run() {
    if (a_.order() == 0) {
      visit_(image_);
      return;
    }
    if (b_.order() == 0) return;
    descend(0);
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == order_.size()) return visit_(image_);
    const Vertex v = order_[depth];

    VertexSet cand = opt_.domains.empty() ? VertexSet::full(b_.order()) : opt_.domains[v];
    if (a_.looped(v)) cand &= loops_;
    else if (opt_.induced) cand -= loops_;
    const VertexSet& nv = a_.neighborhood(v);
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (nv.contains(u)) cand &= b_.neighborhood(image_[u]);
      else if (opt_.induced) cand -= b_.neighborhood(image_[u]);
    }
    if (opt_.injective) cand -= used_;

    bool keep_going = true;
    cand.for_each([&](Vertex w) {
      if (!keep_going) return;
      if (++nodes_ > opt_.budget.search_nodes)
        throw BudgetExceeded("homomorphism search nodes", opt_.budget.search_nodes);
      image_[v] = w;
      if (opt_.injective) used_.insert(w);
      keep_going = descend(depth + 1);
      if (opt_.injective) used_.erase(w);
    });
    return keep_going;
  }

  const Graph& a_;
  const Graph& b_;
  const HomSearchOptions& opt_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  VertexSet used_;
  VertexSet loops_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void search_maps(const Graph& a, const Graph& b, const HomSearchOptions& options,
                 const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (!options.domains.empty() && options.domains.size() != a.order())
    throw Error(Errc::BadParameter, "candidate domains must cover every domain vertex");
  Searcher(a, b, options, visit).run();
}

}  // namespace detail

std::vector<std::vector<Vertex>> enumerate_hom_images(const Graph& a, const Graph& b,
                                                      const HomSearchOptions& options) {
  std::vector<std::vector<Vertex>> out;
  detail::search_maps(a, b, options, [&](const std::vector<Vertex>& img) {
    out.push_back(img);
    return true;
  });
  if (!options.lexicographic) std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphMap> enumerate_homs(const Graph& a, const Graph& b, const Budget& budget) {
  HomSearchOptions opt;
  opt.budget = budget;
  std::vector<GraphMap> out;
  for (auto& img : enumerate_hom_images(a, b, opt))
    out.push_back(make_unchecked(a, b, std::move(img)));
  return out;
}

std::uint64_t count_homs(const Graph& a, const Graph& b, const Budget& budget) {
  HomSearchOptions opt;
  opt.budget = budget;
  std::uint64_t n = 0;
  detail::search_maps(a, b, opt, [&](const std::vector<Vertex>&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<Embedding> enumerate_copies(const Graph& pattern, const Graph& host, CopyMode mode,
                                        bool distinct_sets, const Budget& budget) {
  HomSearchOptions opt;
  opt.budget = budget;
  opt.injective = true;
  opt.induced = mode == CopyMode::Induced;
  std::vector<std::vector<Vertex>> images = enumerate_hom_images(pattern, host, opt);

  std::vector<Embedding> out;
  std::set<std::pair<std::vector<Vertex>, std::vector<IndexEdge>>> seen;
  for (auto& img : images) {
    Embedding e{pattern, host, std::move(img), mode};
    if (distinct_sets) {
      if (!seen.emplace(e.image_vertices().members(), e.image_edges()).second) continue;
    }
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// Loop flag, degree and sorted neighbor degrees.
struct VertexSignature {
  bool loop;
  std::size_t degree;
  std::vector<std::size_t> neighbor_degrees;
  auto operator<=>(const VertexSignature&) const = default;
};

std::vector<VertexSignature> signatures(const Graph& g) {
  std::vector<VertexSignature> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSignature s{g.looped(v), g.degree(v), {}};
    g.neighborhood(v).for_each([&](Vertex u) { s.neighbor_degrees.push_back(g.degree(u)); });
    std::sort(s.neighbor_degrees.begin(), s.neighbor_degrees.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::optional<GraphMap> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      g.loop_count() != h.loop_count())
    return std::nullopt;
  auto sg = signatures(g);
  auto sh = signatures(h);
  {
    auto a = sg;
    auto b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  HomSearchOptions opt;
  opt.budget.search_nodes = UINT64_MAX;
  opt.injective = true;
  opt.induced = true;
  opt.lexicographic = true;
  opt.domains.assign(g.order(), VertexSet(h.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w = 0; w < h.order(); ++w)
      if (sg[v] == sh[w]) opt.domains[v].insert(w);

  std::optional<GraphMap> found;
  detail::search_maps(g, h, opt, [&](const std::vector<Vertex>& img) {
    found = make_unchecked(g, h, img);
    return false;
  });
  return found;
}

}  // namespace xhtpy
