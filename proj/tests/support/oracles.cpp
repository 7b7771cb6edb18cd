#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "xhtpy/folds.hpp"

namespace oracle {

bool adjacent(const Graph& g, std::size_t u, std::size_t v) {
  for (const auto& [a, b] : g.label_edges()) {
    if ((a == g.label(u) && b == g.label(v)) || (a == g.label(v) && b == g.label(u))) return true;
  }
  return false;
}

namespace {

// Adjacency matrix read from the label edge list.
std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < g.order(); ++i) idx[g.label(i)] = i;
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [a, b] : g.label_edges()) {
    m[idx[a]][idx[b]] = true;
    m[idx[b]][idx[a]] = true;
  }
  return m;
}

bool preserves(const std::vector<std::vector<bool>>& ma, const std::vector<std::vector<bool>>& mb,
               const Assignment& f) {
  for (std::size_t u = 0; u < ma.size(); ++u)
    for (std::size_t v = 0; v < ma.size(); ++v)
      if (ma[u][v] && !mb[f[u]][f[v]]) return false;
  return true;
}

Assignment images_of(const GraphMap& m) { return m.images(); }

Assignment compose(const Assignment& g, const Assignment& f) {
  Assignment out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

// Component labels of the one-step relation on `maps`.
std::vector<std::size_t> components(const Graph& a, const Graph& b,
                                    const std::vector<Assignment>& maps) {
  std::vector<std::size_t> parent(maps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      if (find(i) != find(j) && one_step(a, b, maps[i], maps[j])) parent[find(j)] = find(i);
  std::vector<std::size_t> out(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) out[i] = find(i);
  return out;
}

bool same_component(const std::vector<Assignment>& maps, const std::vector<std::size_t>& comp,
                    const Assignment& x, const Assignment& y) {
  auto ix = std::find(maps.begin(), maps.end(), x);
  auto iy = std::find(maps.begin(), maps.end(), y);
  if (ix == maps.end() || iy == maps.end()) return false;
  return comp[ix - maps.begin()] == comp[iy - maps.begin()];
}

}  // namespace

std::vector<Assignment> homs(const Graph& a, const Graph& b) {
  std::vector<Assignment> out;
  const auto ma = matrix(a);
  const auto mb = matrix(b);
  const std::size_t n = a.order();
  const std::size_t k = b.order();
  if (n == 0) return {Assignment{}};
  if (k == 0) return {};
  Assignment f(n, 0);
  for (;;) {
    if (preserves(ma, mb, f)) out.push_back(f);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++f[i] < k) break;
      f[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::size_t product_edge_count(const Graph& g, const Graph& h) {
  const auto mg = matrix(g);
  const auto mh = matrix(h);
  std::vector<std::pair<std::size_t, std::size_t>> verts;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j) verts.emplace_back(i, j);
  std::size_t count = 0;
  for (std::size_t x = 0; x < verts.size(); ++x)
    for (std::size_t y = x; y < verts.size(); ++y)
      if (mg[verts[x].first][verts[y].first] && mh[verts[x].second][verts[y].second]) ++count;
  return count;
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  const auto mg = matrix(g);
  const auto mh = matrix(h);
  Assignment p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < p.size() && ok; ++u)
      for (std::size_t v = 0; v < p.size() && ok; ++v)
        if (mg[u][v] != mh[p[u]][p[v]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool stiff(const Graph& g) {
  const auto m = matrix(g);
  for (std::size_t v = 0; v < g.order(); ++v)
    for (std::size_t w = 0; w < g.order(); ++w) {
      if (v == w) continue;
      bool contained = true;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (m[v][x] && !m[w][x]) contained = false;
      if (contained) return false;
    }
  return true;
}

bool one_step(const Graph& a, const Graph& b, const Assignment& f, const Assignment& g) {
  const auto ma = matrix(a);
  const auto mb = matrix(b);
  // Vertices (u,i) of A x I_1; (u,i)(v,j) is an edge iff uv in E(A).
  for (std::size_t u = 0; u < a.order(); ++u)
    for (std::size_t v = 0; v < a.order(); ++v) {
      if (!ma[u][v]) continue;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const std::size_t x = i ? g[u] : f[u];
          const std::size_t y = j ? g[v] : f[v];
          if (!mb[x][y]) return false;
        }
    }
  return true;
}

bool chain_valid(const xhtpy::HomotopyCertificate& cert) {
  if (cert.chain.empty()) return false;
  const Graph& a = cert.chain.front().domain();
  const Graph& b = cert.chain.front().codomain();
  for (const auto& m : cert.chain)
    if (!(m.domain() == a) || !(m.codomain() == b)) return false;
  const auto ma = matrix(a);
  const auto mb = matrix(b);
  for (const auto& m : cert.chain)
    if (!preserves(ma, mb, images_of(m))) return false;
  for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i)
    if (!one_step(a, b, images_of(cert.chain[i]), images_of(cert.chain[i + 1]))) return false;
  return true;
}

bool chain_valid(const xhtpy::HomotopyCertificate& cert, const GraphMap& from, const GraphMap& to) {
  return chain_valid(cert) && cert.chain.front().images() == from.images() &&
         cert.chain.back().images() == to.images();
}

bool equivalence_valid(const xhtpy::EquivalenceCertificate& cert) {
  const GraphMap& f = cert.forward;
  const GraphMap& g = cert.inverse;
  Assignment id_a(f.domain().order());
  std::iota(id_a.begin(), id_a.end(), 0);
  Assignment id_b(f.codomain().order());
  std::iota(id_b.begin(), id_b.end(), 0);
  if (cert.left.chain.empty() || cert.right.chain.empty()) return false;
  return chain_valid(cert.left) && chain_valid(cert.right) &&
         cert.left.chain.front().images() == compose(g.images(), f.images()) &&
         cert.left.chain.back().images() == id_a &&
         cert.right.chain.front().images() == compose(f.images(), g.images()) &&
         cert.right.chain.back().images() == id_b;
}

bool is_equivalence(const GraphMap& f) {
  const Graph& a = f.domain();
  const Graph& b = f.codomain();
  const auto aa = homs(a, a);
  const auto bb = homs(b, b);
  const auto ca = components(a, a, aa);
  const auto cb = components(b, b, bb);
  Assignment id_a(a.order());
  std::iota(id_a.begin(), id_a.end(), 0);
  Assignment id_b(b.order());
  std::iota(id_b.begin(), id_b.end(), 0);
  for (const auto& g : homs(b, a)) {
    if (same_component(aa, ca, compose(g, f.images()), id_a) &&
        same_component(bb, cb, compose(f.images(), g), id_b))
      return true;
  }
  return false;
}

bool graphs_equivalent(const Graph& g, const Graph& h) {
  for (const auto& f : homs(g, h))
    if (oracle::is_equivalence(xhtpy::make_unchecked(g, h, f))) return true;
  return false;
}

bool w_witness_valid(const xhtpy::WMembershipVerdict& v) {
  if (v.verdict != xhtpy::Verdict::Out || !v.witness) return false;
  const auto& w = *v.witness;
  const GraphMap& f = v.map;
  const auto mp = matrix(w.pattern);
  const auto mh = matrix(f.domain());
  // The witness is an injective copy of the pattern in the domain.
  std::set<std::size_t> used(w.vertex_image.begin(), w.vertex_image.end());
  if (used.size() != w.pattern.order()) return false;
  for (std::size_t u = 0; u < w.pattern.order(); ++u)
    for (std::size_t x = 0; x < w.pattern.order(); ++x) {
      const bool pe = mp[u][x];
      const bool he = mh[w.vertex_image[u]][w.vertex_image[x]];
      if (pe && !he) return false;
      if (w.mode == xhtpy::CopyMode::Induced && he && !pe) return false;
    }
  // The pattern is a stiff graph the domain folds to.
  const Graph as = xhtpy::stiff_reduction(f.domain(), xhtpy::RandomFold{991}).result;
  if (!stiff(w.pattern) || !isomorphic(w.pattern, as)) return false;

  std::set<std::size_t> image;
  for (std::size_t x : w.vertex_image) image.insert(f(x));
  if (image.size() < w.pattern.order()) return true;  // not injective on the copy

  // Injective: build the image graph from labels and compare with B_s.
  std::vector<std::string> labels;
  for (std::size_t x : image) labels.push_back(f.codomain().label(x));
  std::vector<xhtpy::LabelEdge> edges;
  const auto mb = matrix(f.codomain());
  if (v.semantics.image == xhtpy::ImageMode::ImageSubgraph) {
    for (std::size_t u = 0; u < w.pattern.order(); ++u)
      for (std::size_t x = u; x < w.pattern.order(); ++x)
        if (mp[u][x])
          edges.emplace_back(f.codomain().label(f(w.vertex_image[u])),
                             f.codomain().label(f(w.vertex_image[x])));
  } else {
    for (std::size_t u : image)
      for (std::size_t x : image)
        if (u <= x && mb[u][x]) edges.emplace_back(f.codomain().label(u), f.codomain().label(x));
  }
  const Graph img = Graph::make(labels, edges);
  const Graph bs = xhtpy::stiff_reduction(f.codomain(), xhtpy::RandomFold{991}).result;
  return !isomorphic(img, bs);
}

std::size_t mediating_maps(const GraphMap& into_b, const GraphMap& into_c, const GraphMap& p,
                           const GraphMap& q) {
  std::size_t count = 0;
  for (const auto& u : homs(into_b.codomain(), p.codomain())) {
    if (compose(u, into_b.images()) == p.images() && compose(u, into_c.images()) == q.images())
      ++count;
  }
  return count;
}

bool quotient_edges_valid(const Graph& g, const GraphMap& projection) {
  const Graph& q = projection.codomain();
  const auto mg = matrix(g);
  const auto mq = matrix(q);
  for (std::size_t x = 0; x < q.order(); ++x)
    for (std::size_t y = 0; y < q.order(); ++y) {
      bool some = false;
      for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v)
          if (projection(u) == x && projection(v) == y && mg[u][v]) some = true;
      if (some != mq[x][y]) return false;
    }
  return true;
}

}  // namespace oracle
