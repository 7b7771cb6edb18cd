#include "xhtpy/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "xhtpy/search.hpp"

namespace xhtpy {
namespace {

using Images = std::vector<Vertex>;

struct ImagesHash {
  std::size_t operator()(const Images& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void require_same_signature(const GraphMap& f, const GraphMap& g) {
  if (!f.same_signature(g))
    throw Error(Errc::SignatureMismatch, "maps do not share domain and codomain");
}

// Candidate images of each vertex for maps one-step homotopic to f.
std::vector<VertexSet> one_step_domains(const Graph& a, const Graph& b, const Images& f) {
  std::vector<VertexSet> out(a.order(), VertexSet::full(b.order()));
  for (Vertex v = 0; v < a.order(); ++v)
    a.neighborhood(v).for_each([&](Vertex u) { out[v] &= b.neighborhood(f[u]); });
  return out;
}

std::vector<Images> neighbor_images(const Graph& a, const Graph& b, const Images& f,
                                    const Budget& budget) {
  HomSearchOptions opt;
  opt.budget = budget;
  opt.domains = one_step_domains(a, b, f);
  return enumerate_hom_images(a, b, opt);
}

// Breadth-first exploration of hom(A, B) from a root under the one-step
// relation. Expansion is incremental so membership queries stop as soon as
// the target is discovered.
class HomBfs {
 public:
  HomBfs(Graph a, Graph b, Images root, const Budget& budget)
      : a_(std::move(a)), b_(std::move(b)), budget_(budget) {
    discover(std::move(root), kNoParent);
  }

  bool reach(const Images& target) {
    if (index_.count(target)) return true;
    while (head_ < nodes_.size()) {
      expand(head_++);
      if (index_.count(target)) return true;
    }
    return false;
  }

  void exhaust() {
    while (head_ < nodes_.size()) expand(head_++);
  }

  // Root-to-target path; target must have been reached.
  std::vector<Images> path_to(const Images& target) const {
    std::vector<Images> out;
    for (std::size_t i = index_.at(target); i != kNoParent; i = parent_[i])
      out.push_back(nodes_[i]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  const std::vector<Images>& nodes() const { return nodes_; }

 private:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  void discover(Images m, std::size_t parent) {
    if (nodes_.size() >= budget_.hom_maps)
      throw BudgetExceeded("homotopy search maps", budget_.hom_maps);
    index_.emplace(m, nodes_.size());
    nodes_.push_back(std::move(m));
    parent_.push_back(parent);
  }

  void expand(std::size_t i) {
    for (auto& n : neighbor_images(a_, b_, nodes_[i], budget_))
      if (!index_.count(n)) discover(std::move(n), i);
  }

  Graph a_;
  Graph b_;
  Budget budget_;
  std::vector<Images> nodes_;
  std::vector<std::size_t> parent_;
  std::unordered_map<Images, std::size_t, ImagesHash> index_;
  std::size_t head_ = 0;
};

Images identity_images(std::size_t n) {
  Images out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = v;
  return out;
}

Images compose_images(const Images& g, const Images& f) {
  Images out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

HomotopyCertificate chain_from(const Graph& a, const Graph& b, std::vector<Images> path) {
  HomotopyCertificate cert;
  for (auto& m : path) cert.chain.push_back(make_unchecked(a, b, std::move(m)));
  return cert;
}

// Chain from `m` back to the identity, read off a BFS rooted at the identity.
HomotopyCertificate chain_to_identity(const HomBfs& bfs, const Graph& g, const Images& m) {
  auto path = bfs.path_to(m);
  std::reverse(path.begin(), path.end());
  return chain_from(g, g, std::move(path));
}

}  // namespace

bool one_step_homotopic(const GraphMap& f, const GraphMap& g) {
  require_same_signature(f, g);
  const Graph& a = f.domain();
  const Graph& b = f.codomain();
  for (const auto& [u, v] : a.edges()) {
    if (!b.adjacent(f(u), g(v)) || !b.adjacent(f(v), g(u))) return false;
  }
  return true;
}

std::vector<GraphMap> one_step_neighbors(const GraphMap& f, const Budget& budget) {
  std::vector<GraphMap> out;
  for (auto& m : neighbor_images(f.domain(), f.codomain(), f.images(), budget))
    out.push_back(make_unchecked(f.domain(), f.codomain(), std::move(m)));
  return out;
}

std::optional<HomotopyCertificate> are_homotopic(const GraphMap& f, const GraphMap& g,
                                                 const Budget& budget) {
  require_same_signature(f, g);
  HomBfs bfs(f.domain(), f.codomain(), f.images(), budget);
  if (!bfs.reach(g.images())) return std::nullopt;
  return chain_from(f.domain(), f.codomain(), bfs.path_to(g.images()));
}

HomotopyCheck verify_homotopy(const HomotopyCertificate& cert) {
  if (cert.chain.empty()) return {false, "empty chain", std::nullopt};
  const GraphMap& first = cert.chain.front();
  for (const auto& m : cert.chain)
    if (!m.same_signature(first)) return {false, "chain maps do not share a signature", std::nullopt};

  const Graph& a = first.domain();
  const Graph& b = first.codomain();
  const std::size_t k = cert.length();
  const Graph cylinder = product(a, interval(k));
  Images images(cylinder.order());
  for (Vertex v = 0; v < a.order(); ++v)
    for (std::size_t i = 0; i <= k; ++i)
      images[cylinder.index_of("(" + a.label(v) + "," + std::to_string(i) + ")")] =
          cert.chain[i](v);
  auto check = check_graph_map(cylinder, b, images);
  if (!check.ok) return {false, "homotopy is not a graph map", check.violation};
  return {};
}

HomotopyCheck verify_homotopy(const HomotopyCertificate& cert, const GraphMap& from,
                              const GraphMap& to) {
  HomotopyCheck check = verify_homotopy(cert);
  if (!check.ok) return check;
  if (!(cert.chain.front() == from)) return {false, "chain does not start at the first map", {}};
  if (!(cert.chain.back() == to)) return {false, "chain does not end at the second map", {}};
  return check;
}

HomotopyCheck verify_equivalence(const EquivalenceCertificate& cert) {
  const GraphMap& f = cert.forward;
  const GraphMap& g = cert.inverse;
  if (!(f.codomain() == g.domain()) || !(g.codomain() == f.domain()))
    return {false, "inverse has the wrong signature", {}};
  auto left = verify_homotopy(cert.left, compose(g, f), GraphMap::identity(f.domain()));
  if (!left.ok) {
    left.reason = "left homotopy: " + left.reason;
    return left;
  }
  auto right = verify_homotopy(cert.right, compose(f, g), GraphMap::identity(f.codomain()));
  if (!right.ok) right.reason = "right homotopy: " + right.reason;
  return right;
}

namespace {

// Decides whether (f, g) is a homotopy-inverse pair using identity components
// that persist across queries.
class InverseTester {
 public:
  InverseTester(const Graph& a, const Graph& b, const Budget& budget)
      : a_(a), b_(b),
        left_(a, a, identity_images(a.order()), budget),
        right_(b, b, identity_images(b.order()), budget) {}

  bool test(const Images& f, const Images& g) {
    const Images gf = compose_images(g, f);
    const Images fg = compose_images(f, g);
    // Cheaper side first: the graph with fewer vertices.
    if (b_.order() < a_.order()) return right_.reach(fg) && left_.reach(gf);
    return left_.reach(gf) && right_.reach(fg);
  }

  EquivalenceCertificate certificate(const Images& f, const Images& g) const {
    return {make_unchecked(a_, b_, f), make_unchecked(b_, a_, g),
            chain_to_identity(left_, a_, compose_images(g, f)),
            chain_to_identity(right_, b_, compose_images(f, g))};
  }

 private:
  Graph a_;
  Graph b_;
  HomBfs left_;
  HomBfs right_;
};

}  // namespace

std::optional<EquivalenceCertificate> is_equivalence(const GraphMap& f, const Budget& budget) {
  const Graph& a = f.domain();
  const Graph& b = f.codomain();
  HomSearchOptions opt;
  opt.budget = budget;
  InverseTester tester(a, b, budget);
  for (const auto& g : enumerate_hom_images(b, a, opt))
    if (tester.test(f.images(), g)) return tester.certificate(f.images(), g);
  return std::nullopt;
}

std::optional<EquivalenceCertificate> find_equivalence(const Graph& g, const Graph& h,
                                                       const Budget& budget) {
  HomSearchOptions opt;
  opt.budget = budget;
  const auto forward = enumerate_hom_images(g, h, opt);
  if (forward.empty()) return std::nullopt;
  const auto backward = enumerate_hom_images(h, g, opt);
  InverseTester tester(g, h, budget);
  for (const auto& f : forward)
    for (const auto& inv : backward)
      if (tester.test(f, inv)) return tester.certificate(f, inv);
  return std::nullopt;
}

GraphEquivalence graphs_equivalent(const Graph& g, const Graph& h) {
  GraphEquivalence out{false, stiff_reduction(g), stiff_reduction(h), std::nullopt};
  out.stiff_iso = is_isomorphic(out.left.result, out.right.result);
  out.equivalent = out.stiff_iso.has_value();
  return out;
}

std::vector<std::vector<GraphMap>> homotopy_classes(const Graph& a, const Graph& b,
                                                    const Budget& budget) {
  HomSearchOptions opt;
  opt.budget = budget;
  const auto all = enumerate_hom_images(a, b, opt);
  if (all.size() > budget.hom_maps) throw BudgetExceeded("homotopy search maps", budget.hom_maps);

  std::unordered_map<Images, std::size_t, ImagesHash> class_of;
  std::vector<std::vector<GraphMap>> classes;
  for (const auto& m : all) {
    if (class_of.count(m)) continue;
    const std::size_t id = classes.size();
    HomBfs bfs(a, b, m, budget);
    bfs.exhaust();
    auto members = bfs.nodes();
    std::sort(members.begin(), members.end());
    classes.emplace_back();
    for (auto& x : members) {
      class_of.emplace(x, id);
      classes.back().push_back(make_unchecked(a, b, std::move(x)));
    }
  }
  return classes;
}

}  // namespace xhtpy
