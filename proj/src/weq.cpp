#include "xhtpy/weq.hpp"

#include <map>

namespace xhtpy {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::In: return "in";
    case Verdict::Out: return "out";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(ImageMode mode) {
  return mode == ImageMode::ImageSubgraph ? "image-subgraph" : "induced-on-image";
}

std::string_view to_string(WFailure failure) {
  switch (failure) {
    case WFailure::None: return "none";
    case WFailure::NotInjective: return "not-injective";
    case WFailure::ImageNotStiff: return "image-not-stiff";
  }
  return "none";
}

std::string_view to_string(MapClass c) { return c == MapClass::W ? "W" : "W_times"; }

std::string_view to_string(Implication i) {
  switch (i) {
    case Implication::Holds: return "holds";
    case Implication::Violated: return "violated";
    case Implication::Vacuous: return "vacuous";
    case Implication::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// A pair of copy vertices identified by f, if any.
std::optional<std::pair<Vertex, Vertex>> collision_on(const GraphMap& f, const VertexSet& verts) {
  std::map<Vertex, Vertex> seen;
  std::optional<std::pair<Vertex, Vertex>> out;
  verts.for_each([&](Vertex v) {
    if (out) return;
    auto [it, fresh] = seen.emplace(f(v), v);
    if (!fresh) out = {it->second, v};
  });
  return out;
}

}  // namespace

Graph copy_image(const GraphMap& f, const Embedding& copy, ImageMode mode) {
  const Graph& b = f.codomain();
  VertexSet image(b.order());
  copy.image_vertices().for_each([&](Vertex v) { image.insert(f(v)); });
  if (mode == ImageMode::InducedOnImage) return induced_subgraph(b, image);

  std::map<Vertex, Vertex> pos;
  std::vector<VertexId> labels;
  image.for_each([&](Vertex v) {
    pos[v] = labels.size();
    labels.push_back(b.label(v));
  });
  std::vector<IndexEdge> edges;
  for (const auto& [u, v] : copy.image_edges()) edges.emplace_back(pos[f(u)], pos[f(v)]);
  return Graph::from_indices(std::move(labels), edges);
}

WMembershipVerdict in_W(const GraphMap& f, const WSemantics& semantics, const Budget& budget) {
  WMembershipVerdict out{f, Verdict::In, semantics, std::nullopt, WFailure::None, {},
                         stiff_reduction(f.domain()).result,
                         stiff_reduction(f.codomain()).result, 0};
  const auto copies = enumerate_copies(out.domain_stiff, f.domain(), semantics.copy, true, budget);
  for (const auto& copy : copies) {
    ++out.copies_checked;
    if (auto hit = collision_on(f, copy.image_vertices())) {
      const Graph& a = f.domain();
      out.verdict = Verdict::Out;
      out.witness = copy;
      out.failure = WFailure::NotInjective;
      out.reason = a.label(hit->first) + " and " + a.label(hit->second) + " both map to " +
                   f.codomain().label(f(hit->first));
      return out;
    }
    if (!is_isomorphic(copy_image(f, copy, semantics.image), out.codomain_stiff)) {
      out.verdict = Verdict::Out;
      out.witness = copy;
      out.failure = WFailure::ImageNotStiff;
      out.reason = "image of the copy is not isomorphic to the codomain's stiff subgraph";
      return out;
    }
  }
  out.reason = std::to_string(out.copies_checked) + " copies checked";
  return out;
}

bool reverify_witness(const WMembershipVerdict& v) {
  if (v.verdict != Verdict::Out || !v.witness) return false;
  const Embedding& w = *v.witness;
  const GraphMap& f = v.map;
  if (!(w.host == f.domain()) || w.mode != v.semantics.copy || !w.verify()) return false;
  if (!is_isomorphic(w.pattern, stiff_reduction(f.domain()).result)) return false;
  const auto hit = collision_on(f, w.image_vertices());
  switch (v.failure) {
    case WFailure::NotInjective:
      return hit.has_value();
    case WFailure::ImageNotStiff:
      return !hit && !is_isomorphic(copy_image(f, w, v.semantics.image),
                                    stiff_reduction(f.codomain()).result);
    case WFailure::None:
      break;
  }
  return false;
}

WxVerdict in_W_times(const GraphMap& f, const Budget& budget) {
  try {
    auto cert = is_equivalence(f, budget);
    if (cert) return {Verdict::In, std::move(cert), "homotopy inverse found"};
    return {Verdict::Out, std::nullopt, "no homotopy inverse in hom(B, A)"};
  } catch (const BudgetExceeded& e) {
    return {Verdict::Unknown, std::nullopt, e.what()};
  }
}

const Membership& ChainReport::member(std::string_view name) const {
  for (const auto& m : memberships)
    if (m.name == name) return m;
  throw Error(Errc::BadParameter, "no membership named '" + std::string(name) + "'");
}

bool ChainReport::violated() const {
  for (const auto& a : axioms)
    if (a.result == Implication::Violated) return true;
  return false;
}

namespace {

void require_composable(const GraphMap& f, const GraphMap& g) {
  if (!(f.codomain() == g.domain()))
    throw Error(Errc::SignatureMismatch, "maps are not composable");
}

class ChainEvaluator {
 public:
  ChainEvaluator(MapClass predicate, const WSemantics& semantics, const Budget& budget)
      : budget_(budget) {
    report_.predicate = predicate;
    report_.semantics = semantics;
  }

  void add(std::string name, const GraphMap& map) {
    Membership m{std::move(name), map, Verdict::Unknown, std::nullopt, std::nullopt, {}};
    if (report_.predicate == MapClass::W) {
      try {
        m.w = in_W(map, report_.semantics, budget_);
        m.verdict = m.w->verdict;
        m.reason = m.w->reason;
      } catch (const BudgetExceeded& e) {
        m.reason = e.what();
      }
    } else {
      WxVerdict v = in_W_times(map, budget_);
      m.verdict = v.verdict;
      m.certificate = std::move(v.certificate);
      m.reason = std::move(v.reason);
    }
    report_.memberships.push_back(std::move(m));
  }

  void implication(const std::vector<std::string>& hyp, const std::vector<std::string>& concl) {
    std::string statement;
    for (const auto& h : hyp) statement += (statement.empty() ? "" : ", ") + h;
    statement += " =>";
    for (std::size_t i = 0; i < concl.size(); ++i) statement += (i ? ", " : " ") + concl[i];

    Implication result = Implication::Holds;
    bool hyp_unknown = false;
    for (const auto& h : hyp) {
      const Verdict v = report_.member(h).verdict;
      if (v == Verdict::Out) result = Implication::Vacuous;
      if (v == Verdict::Unknown) hyp_unknown = true;
    }
    if (result != Implication::Vacuous) {
      if (hyp_unknown) {
        result = Implication::Unknown;
      } else {
        bool unknown = false;
        for (const auto& c : concl) {
          const Verdict v = report_.member(c).verdict;
          if (v == Verdict::Out) result = Implication::Violated;
          if (v == Verdict::Unknown) unknown = true;
        }
        if (result != Implication::Violated && unknown) result = Implication::Unknown;
      }
    }
    report_.axioms.push_back({std::move(statement), result});
  }

  ChainReport take() { return std::move(report_); }

 private:
  Budget budget_;
  ChainReport report_;
};

}  // namespace

ChainReport check_two_of_three(const GraphMap& f, const GraphMap& g, MapClass predicate,
                               const WSemantics& semantics, const Budget& budget) {
  require_composable(f, g);
  ChainEvaluator ev(predicate, semantics, budget);
  ev.add("f", f);
  ev.add("g", g);
  ev.add("gf", compose(g, f));
  ev.implication({"f", "g"}, {"gf"});
  ev.implication({"f", "gf"}, {"g"});
  ev.implication({"g", "gf"}, {"f"});
  return ev.take();
}

ChainReport check_two_of_six(const GraphMap& f, const GraphMap& g, const GraphMap& h,
                             MapClass predicate, const WSemantics& semantics,
                             const Budget& budget) {
  require_composable(f, g);
  require_composable(g, h);
  ChainEvaluator ev(predicate, semantics, budget);
  const GraphMap gf = compose(g, f);
  const GraphMap hg = compose(h, g);
  ev.add("f", f);
  ev.add("g", g);
  ev.add("h", h);
  ev.add("gf", gf);
  ev.add("hg", hg);
  ev.add("hgf", compose(h, gf));
  ev.implication({"gf", "hg"}, {"f", "g", "h", "hgf"});
  return ev.take();
}

ChainReport composition_closure_check(const GraphMap& f, const GraphMap& g, MapClass predicate,
                                      const WSemantics& semantics, const Budget& budget) {
  require_composable(f, g);
  ChainEvaluator ev(predicate, semantics, budget);
  ev.add("f", f);
  ev.add("g", g);
  ev.add("gf", compose(g, f));
  ev.implication({"f", "g"}, {"gf"});
  return ev.take();
}

ChainReport right_cancellation_check(const GraphMap& f, const GraphMap& g, MapClass predicate,
                                     const WSemantics& semantics, const Budget& budget) {
  require_composable(f, g);
  ChainEvaluator ev(predicate, semantics, budget);
  ev.add("f", f);
  ev.add("g", g);
  ev.add("gf", compose(g, f));
  ev.implication({"g", "gf"}, {"f"});
  return ev.take();
}

}  // namespace xhtpy
