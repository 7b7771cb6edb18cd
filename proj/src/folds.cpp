#include "xhtpy/folds.hpp"

#include <random>
#include <set>

#include "xhtpy/search.hpp"

namespace xhtpy {
namespace {

// Foldable pairs of the subgraph induced on `alive`, in (v, v') order.
std::vector<IndexEdge> alive_folds(const Graph& g, const VertexSet& alive) {
  std::vector<IndexEdge> out;
  alive.for_each([&](Vertex v) {
    const VertexSet nv = g.neighborhood(v) & alive;
    alive.for_each([&](Vertex w) {
      if (w != v && nv.is_subset_of(g.neighborhood(w))) out.emplace_back(v, w);
    });
  });
  return out;
}

bool folds_onto(const Graph& g, const VertexSet& alive, Vertex v, Vertex w) {
  return v != w && (g.neighborhood(v) & alive).is_subset_of(g.neighborhood(w));
}

// Accumulates fold steps on `start` over a shrinking alive set.
class Reducer {
 public:
  explicit Reducer(const Graph& start)
      : start_(start), alive_(VertexSet::full(start.order())), image_(start.order()) {
    for (Vertex v = 0; v < start.order(); ++v) image_[v] = v;
  }

  const VertexSet& alive() const { return alive_; }

  void fold(Vertex v, Vertex w) {
    alive_.erase(v);
    for (auto& x : image_)
      if (x == v) x = w;
    steps_.push_back({start_.label(v), start_.label(w)});
  }

  FoldSequence finish() const {
    Graph result = induced_subgraph(start_, alive_);
    std::vector<Vertex> rank(start_.order(), 0);
    std::size_t r = 0;
    alive_.for_each([&](Vertex v) { rank[v] = r++; });
    std::vector<Vertex> images(start_.order());
    for (Vertex v = 0; v < start_.order(); ++v) images[v] = rank[image_[v]];
    return {start_, steps_, result, make_unchecked(start_, result, std::move(images))};
  }

 private:
  const Graph& start_;
  VertexSet alive_;
  std::vector<Vertex> image_;
  std::vector<FoldStep> steps_;
};

FoldSequence replay(const Graph& g, const std::vector<FoldStep>& steps) {
  Reducer r(g);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    auto v = g.find(s.removed);
    auto w = g.find(s.target);
    const std::string where = "step " + std::to_string(i + 1) + " (" + s.removed + "->" + s.target + ")";
    if (!v || !w || !r.alive().contains(*v) || !r.alive().contains(*w))
      throw Error(Errc::InvalidSequence, where + ": vertex not present");
    if (!folds_onto(g, r.alive(), *v, *w))
      throw Error(Errc::InvalidSequence, where + ": not a fold");
    r.fold(*v, *w);
  }
  return r.finish();
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> foldable_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [v, w] : alive_folds(g, VertexSet::full(g.order())))
    out.emplace_back(g.label(v), g.label(w));
  return out;
}

FoldResult apply_fold(const Graph& g, std::string_view v, std::string_view target) {
  const Vertex a = g.index_of(v);
  const Vertex b = g.index_of(target);
  if (a == b) throw Error(Errc::NotAFold, "a vertex cannot fold onto itself");
  const VertexSet missing = g.neighborhood(a) - g.neighborhood(b);
  if (!missing.empty()) {
    throw Error(Errc::NotAFold, "neighbor " + g.label(missing.members().front()) + " of " +
                                    std::string(v) + " is not a neighbor of " +
                                    std::string(target));
  }
  VertexSet keep = VertexSet::full(g.order());
  keep.erase(a);
  Graph rest = induced_subgraph(g, keep);
  std::vector<Vertex> images(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const Vertex src = u == a ? b : u;
    images[u] = *rest.find(g.label(src));
  }
  return {rest, make_unchecked(g, rest, std::move(images))};
}

bool is_stiff(const Graph& g) { return alive_folds(g, VertexSet::full(g.order())).empty(); }

FoldSequence stiff_reduction(const Graph& g, const FoldPolicy& policy) {
  if (const auto* given = std::get_if<GivenFolds>(&policy)) {
    FoldSequence seq = replay(g, given->steps);
    if (!is_stiff(seq.result))
      throw Error(Errc::InvalidSequence, "given folds do not end in a stiff graph");
    return seq;
  }
  Reducer r(g);
  std::mt19937_64 rng(std::holds_alternative<RandomFold>(policy)
                          ? std::get<RandomFold>(policy).seed
                          : 0);
  for (;;) {
    auto pairs = alive_folds(g, r.alive());
    if (pairs.empty()) break;
    std::size_t pick = 0;
    if (std::holds_alternative<RandomFold>(policy))
      pick = std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng);
    r.fold(pairs[pick].first, pairs[pick].second);
  }
  return r.finish();
}

FoldSequence replay_folds(const Graph& g, const std::vector<FoldStep>& steps) {
  return replay(g, steps);
}

ConfluenceReport confluence_check(const Graph& g, std::size_t trials, std::uint64_t seed) {
  if (trials < 2) throw Error(Errc::BadParameter, "confluence check needs at least two trials");
  ConfluenceReport report;
  for (std::size_t i = 0; i < trials; ++i) {
    FoldSequence seq = stiff_reduction(g, RandomFold{seed + i});
    if (i == 0) {
      report.stiff = seq.result;
    } else if (!is_isomorphic(report.stiff, seq.result)) {
      auto describe = [](const FoldSequence& s) {
        std::string out;
        for (const auto& st : s.steps) out += " " + st.removed + "->" + st.target;
        return out;
      };
      throw Error(Errc::ConfluenceViolation, "trial 1 folds" + describe(report.sequences.front()) +
                                                 " but trial " + std::to_string(i + 1) +
                                                 " folds" + describe(seq));
    }
    report.sequences.push_back(std::move(seq));
  }
  return report;
}

bool is_unfold(const GraphMap& incl) {
  const Graph& g = incl.codomain();
  if (g.order() != incl.domain().order() + 1) return false;
  if (!incl.is_induced_inclusion()) return false;
  VertexSet image(g.order());
  for (Vertex v : incl.images()) image.insert(v);
  const Vertex extra = (VertexSet::full(g.order()) - image).members().front();
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != extra && g.neighborhood(extra).is_subset_of(g.neighborhood(w))) return true;
  return false;
}

FoldClassification relative_foldable_pairs(const Graph& b,
                                           const std::vector<VertexId>& protected_vertices) {
  VertexSet prot(b.order());
  for (const auto& v : protected_vertices) prot.insert(b.index_of(v));
  FoldClassification out;
  for (const auto& [v, w] : alive_folds(b, VertexSet::full(b.order()))) {
    auto& bucket = prot.contains(v) ? out.restricted : out.relative;
    bucket.emplace_back(b.label(v), b.label(w));
  }
  return out;
}

namespace {

class QuasiCofibrationSearch {
 public:
  QuasiCofibrationSearch(const Graph& b, VertexSet prot) : b_(b), prot_(std::move(prot)) {}

  // Depth-first over relative folds; `strict` only enters states without
  // restricted folds.
  bool search(const VertexSet& alive, bool strict, std::vector<IndexEdge>& path,
              std::vector<VertexSet>& states) {
    if (!visited_[strict].insert(alive.words()).second) return false;
    if (!strict) ++explored_;
    auto pairs = alive_folds(b_, alive);
    std::size_t restricted = 0;
    std::vector<IndexEdge> relative;
    for (const auto& p : pairs) {
      if (prot_.contains(p.first)) ++restricted;
      else if (relative.empty() || relative.back().first != p.first) relative.push_back(p);
    }
    if (strict && restricted > 0) return false;
    states.push_back(alive);
    if (pairs.empty()) return true;
    if (relative.empty()) {
      if (!strict && stuck_.size() < kMaxStuck) stuck_.push_back(alive);
    }
    for (const auto& step : relative) {
      VertexSet next = alive;
      next.erase(step.first);
      path.push_back(step);
      if (search(next, strict, path, states)) return true;
      path.pop_back();
    }
    states.pop_back();
    return false;
  }

  FoldStage stage(const VertexSet& alive) const {
    FoldStage s;
    alive.for_each([&](Vertex v) { s.vertices.push_back(b_.label(v)); });
    for (const auto& p : alive_folds(b_, alive)) {
      if (prot_.contains(p.first)) ++s.restricted;
      else ++s.relative;
    }
    return s;
  }

  const std::vector<VertexSet>& stuck() const { return stuck_; }
  std::size_t explored() const { return explored_; }

 private:
  static constexpr std::size_t kMaxStuck = 32;
  const Graph& b_;
  VertexSet prot_;
  std::set<std::vector<std::uint64_t>> visited_[2];
  std::vector<VertexSet> stuck_;
  std::size_t explored_ = 0;
};

}  // namespace

QuasiCofibrationTrace is_quasi_cofibration(const GraphMap& incl) {
  if (!incl.is_induced_inclusion())
    throw Error(Errc::NotInducedInclusion, "quasi-cofibrations are induced inclusions");
  const Graph& b = incl.codomain();
  VertexSet prot(b.order());
  for (Vertex v : incl.images()) prot.insert(v);

  QuasiCofibrationSearch search(b, prot);
  QuasiCofibrationTrace trace;
  std::vector<IndexEdge> path;
  std::vector<VertexSet> states;
  const VertexSet all = VertexSet::full(b.order());
  trace.reachable = search.search(all, false, path, states);
  if (trace.reachable) {
    for (const auto& [v, w] : path) trace.sequence.push_back({b.label(v), b.label(w)});
    for (const auto& s : states) trace.stages.push_back(search.stage(s));
    std::vector<IndexEdge> strict_path;
    std::vector<VertexSet> strict_states;
    trace.strict_reachable = search.search(all, true, strict_path, strict_states);
  } else {
    trace.stages.push_back(search.stage(all));
  }
  for (const auto& s : search.stuck()) trace.stuck.push_back(search.stage(s));
  trace.states_explored = search.explored();
  return trace;
}

}  // namespace xhtpy
