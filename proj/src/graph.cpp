#include "xhtpy/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace xhtpy {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::NotAGraphMap: return "NotAGraphMap";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAFold: return "NotAFold";
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::ConfluenceViolation: return "ConfluenceViolation";
    case Errc::NotInducedInclusion: return "NotInducedInclusion";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotNonInjective: return "NotNonInjective";
    case Errc::NotAnEquivalence: return "NotAnEquivalence";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == '-' || std::isspace(static_cast<unsigned char>(c));
  });
}

struct Graph::Data {
  std::vector<VertexId> labels;
  std::vector<VertexSet> adjacency;
  std::size_t edge_count = 0;
};

Graph::Graph() {
  static const auto empty = std::make_shared<const Data>();
  data_ = empty;
}

Graph Graph::from_indices(std::vector<VertexId> vertices,
                          const std::vector<IndexEdge>& edges) {
  const std::size_t n = vertices.size();
  for (const auto& v : vertices)
    if (!is_valid_label(v)) throw Error(Errc::InvalidLabel, "'" + v + "'");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
  for (std::size_t i = 1; i < n; ++i)
    if (vertices[order[i - 1]] == vertices[order[i]])
      throw Error(Errc::DuplicateVertex, "'" + vertices[order[i]] + "'");

  std::vector<Vertex> position(n);
  auto data = std::make_shared<Data>();
  data->labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[order[i]] = i;
    data->labels.push_back(std::move(vertices[order[i]]));
  }
  data->adjacency.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(Errc::UnknownVertex, "edge endpoint out of range");
    const Vertex a = position[u];
    const Vertex b = position[v];
    data->adjacency[a].insert(b);
    data->adjacency[b].insert(a);
  }
  for (Vertex v = 0; v < n; ++v) {
    std::size_t d = data->adjacency[v].count();
    data->edge_count += d + (data->adjacency[v].contains(v) ? 1 : 0);
  }
  data->edge_count /= 2;
  return Graph(std::move(data));
}

Graph Graph::make(std::vector<VertexId> vertices, const std::vector<LabelEdge>& edges) {
  std::map<std::string_view, std::size_t> where;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!where.emplace(vertices[i], i).second)
      throw Error(Errc::DuplicateVertex, "'" + vertices[i] + "'");
  }
  std::vector<IndexEdge> idx;
  idx.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    auto a = where.find(u);
    if (a == where.end()) throw Error(Errc::UnknownVertex, "'" + u + "'");
    auto b = where.find(v);
    if (b == where.end()) throw Error(Errc::UnknownVertex, "'" + v + "'");
    idx.emplace_back(a->second, b->second);
  }
  return from_indices(std::move(vertices), idx);
}

std::size_t Graph::order() const noexcept { return data_->labels.size(); }
std::size_t Graph::edge_count() const noexcept { return data_->edge_count; }
const std::vector<VertexId>& Graph::labels() const noexcept { return data_->labels; }
const VertexSet& Graph::neighborhood(Vertex v) const noexcept {
  return data_->adjacency[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::lower_bound(ls.begin(), ls.end(), label,
                             [](const VertexId& a, std::string_view b) { return a < b; });
  if (it == ls.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - ls.begin());
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(Errc::UnknownVertex, "'" + std::string(label) + "'");
}

std::vector<IndexEdge> Graph::edges() const {
  std::vector<IndexEdge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u)
    neighborhood(u).for_each([&](Vertex v) {
      if (u <= v) out.emplace_back(u, v);
    });
  return out;
}

std::vector<LabelEdge> Graph::label_edges() const {
  std::vector<LabelEdge> out;
  for (const auto& [u, v] : edges()) out.emplace_back(label(u), label(v));
  return out;
}

std::size_t Graph::loop_count() const noexcept {
  std::size_t n = 0;
  for (Vertex v = 0; v < order(); ++v) n += looped(v) ? 1 : 0;
  return n;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels && a.data_->adjacency == b.data_->adjacency;
}

std::set<VertexId> neighbors(const Graph& g, std::string_view v) {
  std::set<VertexId> out;
  g.neighborhood(g.index_of(v)).for_each([&](Vertex u) { out.insert(g.label(u)); });
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> kept = keep.members();
  std::vector<Vertex> position(g.order(), 0);
  std::vector<VertexId> labels;
  labels.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    position[kept[i]] = i;
    labels.push_back(g.label(kept[i]));
  }
  std::vector<IndexEdge> edges;
  for (const auto& [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(position[u], position[v]);
  return Graph::from_indices(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
  VertexSet s(g.order());
  for (const auto& v : keep) s.insert(g.index_of(v));
  return induced_subgraph(g, s);
}

Graph product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  std::vector<VertexId> labels;
  labels.reserve(g.order() * m);
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < m; ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");

  // (a,b)(a',b') whenever aa' and bb' are edges; both orientations of the
  // second factor are needed when a != a'.
  std::vector<IndexEdge> edges;
  const auto ge = g.edges();
  const auto he = h.edges();
  for (const auto& [a, a2] : ge) {
    for (const auto& [b, b2] : he) {
      edges.emplace_back(a * m + b, a2 * m + b2);
      if (a != a2 && b != b2) edges.emplace_back(a * m + b2, a2 * m + b);
    }
  }
  return Graph::from_indices(std::move(labels), edges);
}

Graph interval(std::size_t n) {
  std::vector<VertexId> labels;
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    edges.emplace_back(i, i);
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return Graph::from_indices(std::move(labels), edges);
}

Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& rename) {
  std::vector<VertexId> labels;
  labels.reserve(g.order());
  for (const auto& l : g.labels()) {
    auto it = rename.find(l);
    if (it == rename.end()) throw Error(Errc::BadParameter, "no new label for '" + l + "'");
    labels.push_back(it->second);
  }
  return Graph::from_indices(std::move(labels), g.edges());
}

Graph disjoint_union(const Graph& a, const Graph& b, std::string_view left_tag,
                     std::string_view right_tag) {
  std::vector<VertexId> labels;
  for (const auto& l : a.labels()) labels.push_back(std::string(left_tag) + l);
  for (const auto& l : b.labels()) labels.push_back(std::string(right_tag) + l);
  std::vector<IndexEdge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_indices(std::move(labels), edges);
}

MapCheck check_graph_map(const Graph& a, const Graph& b, const std::vector<Vertex>& images) {
  if (images.size() != a.order())
    throw Error(Errc::BadParameter, "assignment is not total on the domain");
  for (Vertex v : images)
    if (v >= b.order()) throw Error(Errc::UnknownVertex, "image index out of range");
  for (const auto& [u, v] : a.edges()) {
    if (!b.adjacent(images[u], images[v])) return {false, LabelEdge{a.label(u), a.label(v)}};
  }
  return {};
}

MapCheck is_graph_map(const Graph& a, const Graph& b,
                      const std::map<VertexId, VertexId>& assignment) {
  std::vector<Vertex> images(a.order());
  for (Vertex v = 0; v < a.order(); ++v) {
    auto it = assignment.find(a.label(v));
    if (it == assignment.end())
      throw Error(Errc::BadParameter, "no image for '" + a.label(v) + "'");
    images[v] = b.index_of(it->second);
  }
  for (const auto& [k, _] : assignment) a.index_of(k);
  return check_graph_map(a, b, images);
}

GraphMap::GraphMap(Graph domain, Graph codomain, std::vector<Vertex> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  auto check = check_graph_map(domain_, codomain_, images_);
  if (!check.ok)
    throw Error(Errc::NotAGraphMap, "edge " + check.violation->first + "-" +
                                        check.violation->second + " is not preserved");
}

GraphMap make_unchecked(Graph domain, Graph codomain, std::vector<Vertex> images) {
  return GraphMap(GraphMap::Unchecked{}, std::move(domain), std::move(codomain),
                  std::move(images));
}

GraphMap GraphMap::identity(const Graph& g) {
  std::vector<Vertex> images(g.order());
  std::iota(images.begin(), images.end(), 0);
  return make_unchecked(g, g, std::move(images));
}

GraphMap GraphMap::from_labels(Graph domain, Graph codomain,
                               const std::map<VertexId, VertexId>& assignment) {
  std::vector<Vertex> images(domain.order());
  for (Vertex v = 0; v < domain.order(); ++v) {
    auto it = assignment.find(domain.label(v));
    if (it == assignment.end())
      throw Error(Errc::BadParameter, "no image for '" + domain.label(v) + "'");
    images[v] = codomain.index_of(it->second);
  }
  for (const auto& [k, _] : assignment) domain.index_of(k);
  return GraphMap(std::move(domain), std::move(codomain), std::move(images));
}

GraphMap GraphMap::inclusion(const Graph& sub, const Graph& host) {
  std::vector<Vertex> images(sub.order());
  for (Vertex v = 0; v < sub.order(); ++v) images[v] = host.index_of(sub.label(v));
  return GraphMap(sub, host, std::move(images));
}

const VertexId& GraphMap::image(std::string_view v) const {
  return codomain_.label(images_[domain_.index_of(v)]);
}

std::map<VertexId, VertexId> GraphMap::assignment() const {
  std::map<VertexId, VertexId> out;
  for (Vertex v = 0; v < domain_.order(); ++v)
    out.emplace(domain_.label(v), codomain_.label(images_[v]));
  return out;
}

bool GraphMap::injective() const {
  VertexSet seen(codomain_.order());
  for (Vertex w : images_) {
    if (seen.contains(w)) return false;
    seen.insert(w);
  }
  return true;
}

bool GraphMap::is_induced_inclusion() const {
  if (!injective()) return false;
  for (Vertex u = 0; u < domain_.order(); ++u)
    for (Vertex v = u; v < domain_.order(); ++v)
      if (codomain_.adjacent(images_[u], images_[v]) != domain_.adjacent(u, v)) return false;
  return true;
}

GraphMap compose(const GraphMap& g, const GraphMap& f) {
  if (!(f.codomain() == g.domain()))
    throw Error(Errc::DomainMismatch, "codomain of the first map is not the domain of the second");
  std::vector<Vertex> images(f.domain().order());
  for (Vertex v = 0; v < images.size(); ++v) images[v] = g(f(v));
  return make_unchecked(f.domain(), g.codomain(), std::move(images));
}

}  // namespace xhtpy
