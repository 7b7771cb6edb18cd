#include "xhtpy/constructions.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <set>

namespace xhtpy {

std::string_view to_string(CertificationLevel level) {
  return level == CertificationLevel::MapLevel ? "map-level" : "graph-level";
}

std::string_view to_string(CounterexampleCase c) {
  switch (c) {
    case CounterexampleCase::Simple: return "simple";
    case CounterexampleCase::UnloopedWedge: return "unlooped-wedge";
    case CounterexampleCase::LoopedWedge: return "looped-wedge";
    case CounterexampleCase::LoopedBridge: return "looped-bridge";
  }
  return "unknown";
}

namespace {

// Appends "#k" to repeated labels so every class label stays unique.
void disambiguate(std::vector<VertexId>& labels) {
  std::map<VertexId, std::size_t> seen;
  for (auto& l : labels) {
    auto n = seen[l]++;
    if (n > 0) l += "#" + std::to_string(n);
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ",";
    out += p;
  }
  return out;
}

// Quotient of g by a block assignment (block[v] in [0, nblocks)).
Quotient quotient_by_blocks(const Graph& g, const std::vector<std::size_t>& block,
                            std::size_t nblocks, std::vector<VertexId> labels) {
  disambiguate(labels);
  std::vector<IndexEdge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(block[u], block[v]);
  Graph q = Graph::from_indices(labels, edges);
  std::vector<Vertex> images(g.order());
  for (Vertex v = 0; v < g.order(); ++v) images[v] = q.index_of(labels[block[v]]);
  (void)nblocks;
  return {q, make_unchecked(g, q, std::move(images))};
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Quotient quotient_by_partition(const Graph& g, const std::vector<std::vector<VertexId>>& blocks) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block(g.order(), kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(Errc::NotAPartition, "empty block");
    for (const auto& l : blocks[b]) {
      Vertex v = g.index_of(l);
      if (block[v] != kUnassigned)
        throw Error(Errc::NotAPartition, "vertex '" + l + "' is in two blocks");
      block[v] = b;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (block[v] == kUnassigned)
      throw Error(Errc::NotAPartition, "vertex '" + g.label(v) + "' is in no block");

  std::vector<std::vector<std::string>> members(blocks.size());
  for (Vertex v = 0; v < g.order(); ++v) members[block[v]].push_back(g.label(v));
  std::vector<VertexId> labels;
  for (const auto& m : members) labels.push_back("[" + join(m) + "]");
  return quotient_by_blocks(g, block, blocks.size(), std::move(labels));
}

Quotient quotient_by_image(const Graph& g, const GraphMap& f) {
  if (!(f.codomain() == g)) throw Error(Errc::SignatureMismatch, "map does not land in the graph");
  VertexSet image(g.order());
  for (Vertex v : f.images()) image.insert(v);
  std::vector<std::vector<VertexId>> blocks;
  if (!image.empty()) {
    blocks.emplace_back();
    image.for_each([&](Vertex v) { blocks.back().push_back(g.label(v)); });
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!image.contains(v)) blocks.push_back({g.label(v)});
  return quotient_by_partition(g, blocks);
}

PushoutSquare pushout(const GraphMap& f, const GraphMap& g) {
  if (!(f.domain() == g.domain()))
    throw Error(Errc::SignatureMismatch, "pushout legs must share a domain");
  const Graph& b = f.codomain();
  const Graph& c = g.codomain();
  const std::size_t nb = b.order();
  const std::size_t n = nb + c.order();

  // The disjoint union indexes B first, then C.
  UnionFind uf(n);
  for (Vertex a = 0; a < f.domain().order(); ++a) uf.unite(f(a), nb + g(a));

  std::vector<std::size_t> block(n);
  std::map<std::size_t, std::size_t> root_to_block;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = root_to_block.emplace(uf.find(x), root_to_block.size());
    block[x] = it->second;
  }
  std::vector<std::vector<std::string>> members(root_to_block.size());
  for (std::size_t x = 0; x < n; ++x)
    members[block[x]].push_back(x < nb ? b.label(x) : c.label(x - nb) + "'");
  std::vector<VertexId> labels;
  for (const auto& m : members) labels.push_back("[" + join(m) + "]");
  disambiguate(labels);

  std::vector<IndexEdge> edges;
  for (const auto& [u, v] : b.edges()) edges.emplace_back(block[u], block[v]);
  for (const auto& [u, v] : c.edges()) edges.emplace_back(block[nb + u], block[nb + v]);
  Graph p = Graph::from_indices(labels, edges);

  std::vector<Vertex> ib(nb);
  for (Vertex v = 0; v < nb; ++v) ib[v] = p.index_of(labels[block[v]]);
  std::vector<Vertex> ic(c.order());
  for (Vertex v = 0; v < c.order(); ++v) ic[v] = p.index_of(labels[block[nb + v]]);
  return {f, g, p, make_unchecked(b, p, std::move(ib)), make_unchecked(c, p, std::move(ic))};
}

GraphMap cobase_change(const GraphMap& f, const GraphMap& g) { return pushout(f, g).into_c; }

CylinderFactorization mapping_cylinder(const GraphMap& f) {
  const Graph& a = f.domain();
  const Graph& b = f.codomain();
  // "0" tags the A x I_1 part, "1" tags B.
  const Graph cyl = product(a, interval(1));
  const Graph u = disjoint_union(cyl, b, "0", "1");

  std::vector<std::vector<VertexId>> blocks;
  std::vector<std::vector<VertexId>> b_blocks(b.order());
  for (Vertex y = 0; y < b.order(); ++y) b_blocks[y].push_back("1" + b.label(y));
  for (Vertex x = 0; x < a.order(); ++x) {
    b_blocks[f(x)].push_back("0(" + a.label(x) + ",0)");
    blocks.push_back({"0(" + a.label(x) + ",1)"});
  }
  for (auto& blk : b_blocks) blocks.push_back(std::move(blk));
  Quotient q = quotient_by_partition(u, blocks);

  std::map<VertexId, VertexId> rename;
  for (Vertex x = 0; x < a.order(); ++x) {
    const Vertex src = u.index_of("0(" + a.label(x) + ",1)");
    rename[q.graph.label(q.projection(src))] = "(" + a.label(x) + ",1)";
  }
  for (Vertex y = 0; y < b.order(); ++y) {
    const Vertex src = u.index_of("1" + b.label(y));
    rename[q.graph.label(q.projection(src))] = "[" + b.label(y) + "]";
  }
  Graph m = relabel(q.graph, rename);

  std::map<VertexId, VertexId> incl;
  std::map<VertexId, VertexId> retract;
  for (Vertex x = 0; x < a.order(); ++x) {
    incl[a.label(x)] = "(" + a.label(x) + ",1)";
    retract["(" + a.label(x) + ",1)"] = b.label(f(x));
  }
  for (Vertex y = 0; y < b.order(); ++y) retract["[" + b.label(y) + "]"] = b.label(y);
  return {f, m, GraphMap::from_labels(a, m, incl), GraphMap::from_labels(m, b, retract)};
}

Factorization factorize(const GraphMap& f, const Budget& budget) {
  CylinderFactorization cyl = mapping_cylinder(f);
  Factorization out{cyl.incl, cyl.retract, CertificationLevel::GraphLevel, std::nullopt, false};
  try {
    out.certificate = is_equivalence(cyl.retract, budget);
    out.level = CertificationLevel::MapLevel;
    out.certified = out.certificate.has_value();
  } catch (const BudgetExceeded&) {
    out.level = CertificationLevel::GraphLevel;
    out.certified = graphs_equivalent(cyl.cylinder, f.codomain()).equivalent;
  }
  return out;
}

namespace {

std::string fresh_prefix(const Graph& g, std::string prefix) {
  for (;;) {
    bool clash = false;
    for (const auto& l : g.labels())
      if (l.compare(0, prefix.size(), prefix) == 0) clash = true;
    if (!clash) return prefix;
    prefix += "#";
  }
}

}  // namespace

Counterexample counterexample_pushout(const GraphMap& f, const Budget& budget) {
  const Graph& a = f.domain();
  std::optional<std::pair<Vertex, Vertex>> hit;
  for (Vertex x = 0; x < a.order() && !hit; ++x)
    for (Vertex y = x + 1; y < a.order() && !hit; ++y)
      if (f(x) == f(y)) hit = {x, y};
  if (!hit) throw Error(Errc::NotNonInjective, "the map is injective");
  if (!is_equivalence(f, budget))
    throw Error(Errc::NotAnEquivalence, "the map is not a homotopy equivalence");

  const auto [a1, a2] = *hit;
  std::vector<VertexId> labels = a.labels();
  std::vector<IndexEdge> edges = a.edges();
  CounterexampleCase kind;
  const std::string pre = fresh_prefix(a, "C7#");

  // Adds C_7 on fresh vertices with its vertex 1 replaced by `wedge`.
  auto wedge_cycle = [&](Vertex wedge) {
    std::vector<Vertex> ring(7);
    for (std::size_t i = 0; i < 7; ++i) {
      if (i == 1) {
        ring[i] = wedge;
      } else {
        ring[i] = labels.size();
        labels.push_back(pre + std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < 7; ++i) edges.emplace_back(ring[i], ring[(i + 1) % 7]);
  };

  if (a.is_simple()) {
    kind = CounterexampleCase::Simple;
    edges.emplace_back(a1, a2);
  } else if (!a.looped(a1) && !a.looped(a2)) {
    kind = CounterexampleCase::UnloopedWedge;
    wedge_cycle(a1);
    edges.emplace_back(a1, a2);
  } else if (a.looped(a1) != a.looped(a2)) {
    kind = CounterexampleCase::LoopedWedge;
    wedge_cycle(a.looped(a1) ? a2 : a1);
    edges.emplace_back(a1, a2);
  } else {
    // Identifying a1 with a2 closes the path into a 7-cycle through a
    // looped vertex.
    kind = CounterexampleCase::LoopedBridge;
    Vertex prev = a1;
    for (std::size_t i = 1; i <= 6; ++i) {
      const Vertex next = labels.size();
      labels.push_back(pre + std::to_string(i));
      edges.emplace_back(prev, next);
      prev = next;
    }
    edges.emplace_back(prev, a2);
  }

  Graph c = Graph::from_indices(labels, edges);
  GraphMap g = GraphMap::inclusion(a, c);
  PushoutSquare square = pushout(f, g);
  GraphEquivalence cmp = graphs_equivalent(c, square.pushout);
  const bool eq = cmp.equivalent;
  return {kind, {a.label(a1), a.label(a2)}, c, g, std::move(square), std::move(cmp), eq};
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::BadParameter, "cycles need at least 3 vertices");
  std::vector<VertexId> labels;
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  return Graph::from_indices(std::move(labels), edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error(Errc::BadParameter, "complete graphs need at least 1 vertex");
  std::vector<VertexId> labels;
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_indices(std::move(labels), edges);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw Error(Errc::BadParameter, "paths need at least 1 vertex");
  std::vector<VertexId> labels;
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return Graph::from_indices(std::move(labels), edges);
}

Graph looped_cycle(std::size_t n, std::size_t loop_at) {
  if (loop_at >= n) throw Error(Errc::BadParameter, "loop position outside the cycle");
  Graph c = cycle_graph(n);
  auto edges = c.edges();
  edges.emplace_back(*c.find(std::to_string(loop_at)), *c.find(std::to_string(loop_at)));
  return Graph::from_indices(c.labels(), edges);
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::BadParameter, "cannot parse graph name '" + std::string(whole) + "'");
  return n;
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name.size() < 2) throw Error(Errc::BadParameter, "unknown graph name '" + std::string(name) + "'");
  const char kind = name.front();
  std::string_view rest = name.substr(1);
  switch (kind) {
    case 'C': {
      auto at = rest.find('@');
      if (at == std::string_view::npos) return cycle_graph(parse_size(rest, name));
      return looped_cycle(parse_size(rest.substr(0, at), name), parse_size(rest.substr(at + 1), name));
    }
    case 'K': return complete_graph(parse_size(rest, name));
    case 'P': return path_graph(parse_size(rest, name));
    case 'I': return interval(parse_size(rest, name));
    default: break;
  }
  throw Error(Errc::BadParameter, "unknown graph name '" + std::string(name) + "'");
}

}  // namespace xhtpy
