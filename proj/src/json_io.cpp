#include "xhtpy/json_io.hpp"

namespace xhtpy {

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.label_edges()) edges.push_back({u, v});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  std::vector<LabelEdge> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return Graph::make(j.at("vertices").get<std::vector<VertexId>>(), edges);
}

Json images_json(const GraphMap& m) {
  Json out = Json::object();
  for (Vertex v = 0; v < m.domain().order(); ++v) out[m.domain().label(v)] = m.codomain().label(m(v));
  return out;
}

namespace {

std::map<VertexId, VertexId> assignment_from_json(const Json& j) {
  std::map<VertexId, VertexId> out;
  for (const auto& [k, v] : j.items()) out[k] = v.get<std::string>();
  return out;
}

}  // namespace

Json to_json(const GraphMap& m) {
  return {{"domain", to_json(m.domain())},
          {"codomain", to_json(m.codomain())},
          {"images", images_json(m)}};
}

GraphMap map_from_json(const Json& j) {
  return GraphMap::from_labels(graph_from_json(j.at("domain")), graph_from_json(j.at("codomain")),
                               assignment_from_json(j.at("images")));
}

Json to_json(const FoldSequence& s) {
  Json steps = Json::array();
  for (const auto& st : s.steps) steps.push_back({{"removed", st.removed}, {"target", st.target}});
  return {{"start", to_json(s.start)},
          {"steps", std::move(steps)},
          {"resultVertices", s.result.labels()},
          {"retraction", images_json(s.composite)}};
}

namespace {

Json stage_json(const FoldStage& s) {
  return {{"vertices", s.vertices}, {"relative", s.relative}, {"restricted", s.restricted}};
}

}  // namespace

Json to_json(const QuasiCofibrationTrace& t) {
  Json seq = Json::array();
  for (const auto& st : t.sequence) seq.push_back({{"removed", st.removed}, {"target", st.target}});
  Json stages = Json::array();
  for (const auto& s : t.stages) stages.push_back(stage_json(s));
  Json stuck = Json::array();
  for (const auto& s : t.stuck) stuck.push_back(stage_json(s));
  return {{"reachable", t.reachable},
          {"strictReachable", t.strict_reachable},
          {"semantics", t.semantics},
          {"sequence", std::move(seq)},
          {"stages", std::move(stages)},
          {"stuck", std::move(stuck)},
          {"statesExplored", t.states_explored}};
}

Json to_json(const HomotopyCertificate& c) {
  Json chain = Json::array();
  for (const auto& m : c.chain) chain.push_back(images_json(m));
  Json out = {{"type", "homotopy-certificate"}, {"length", c.length()}};
  if (!c.chain.empty()) {
    out["domain"] = to_json(c.chain.front().domain());
    out["codomain"] = to_json(c.chain.front().codomain());
  }
  out["chain"] = std::move(chain);
  return out;
}

HomotopyCertificate homotopy_from_json(const Json& j) {
  HomotopyCertificate c;
  if (j.at("chain").empty()) return c;
  const Graph a = graph_from_json(j.at("domain"));
  const Graph b = graph_from_json(j.at("codomain"));
  // Chain members are rebuilt without edge checks; verify_homotopy decides.
  for (const auto& m : j.at("chain")) {
    std::vector<Vertex> images(a.order());
    for (const auto& [k, v] : m.items()) images[a.index_of(k)] = b.index_of(v.get<std::string>());
    c.chain.push_back(make_unchecked(a, b, std::move(images)));
  }
  return c;
}

Json to_json(const EquivalenceCertificate& c) {
  return {{"type", "equivalence-certificate"},
          {"forward", to_json(c.forward)},
          {"inverse", images_json(c.inverse)},
          {"left", to_json(c.left)},
          {"right", to_json(c.right)}};
}

EquivalenceCertificate equivalence_from_json(const Json& j) {
  GraphMap forward = map_from_json(j.at("forward"));
  GraphMap inverse = GraphMap::from_labels(forward.codomain(), forward.domain(),
                                           assignment_from_json(j.at("inverse")));
  return {std::move(forward), std::move(inverse), homotopy_from_json(j.at("left")),
          homotopy_from_json(j.at("right"))};
}

Json to_json(const Embedding& e) {
  Json verts = Json::object();
  for (Vertex v = 0; v < e.pattern.order(); ++v)
    verts[e.pattern.label(v)] = e.host.label(e.vertex_image[v]);
  Json edges = Json::array();
  for (const auto& [u, v] : e.image_edges()) edges.push_back({e.host.label(u), e.host.label(v)});
  return {{"mode", to_string(e.mode)},
          {"pattern", to_json(e.pattern)},
          {"vertexImage", std::move(verts)},
          {"imageEdges", std::move(edges)}};
}

Embedding embedding_from_json(const Json& j) {
  // The host is supplied by the caller through the enclosing verdict.
  Embedding e;
  e.pattern = graph_from_json(j.at("pattern"));
  e.mode = j.at("mode") == "induced" ? CopyMode::Induced : CopyMode::Subgraph;
  return e;
}

Json to_json(const WMembershipVerdict& v) {
  Json out = {{"type", "w-verdict"},
              {"verdict", to_string(v.verdict)},
              {"semantics",
               {{"copyMode", to_string(v.semantics.copy)}, {"imageMode", to_string(v.semantics.image)}}},
              {"map", to_json(v.map)},
              {"domainStiff", to_json(v.domain_stiff)},
              {"codomainStiff", to_json(v.codomain_stiff)},
              {"copiesChecked", v.copies_checked},
              {"failure", to_string(v.failure)},
              {"reason", v.reason}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

WMembershipVerdict w_verdict_from_json(const Json& j) {
  WMembershipVerdict v{map_from_json(j.at("map")), Verdict::Unknown, {}, std::nullopt,
                       WFailure::None, j.at("reason").get<std::string>(),
                       graph_from_json(j.at("domainStiff")),
                       graph_from_json(j.at("codomainStiff")),
                       j.at("copiesChecked").get<std::size_t>()};
  const auto verdict = j.at("verdict").get<std::string>();
  v.verdict = verdict == "in" ? Verdict::In : verdict == "out" ? Verdict::Out : Verdict::Unknown;
  const auto& sem = j.at("semantics");
  v.semantics.copy = sem.at("copyMode") == "induced" ? CopyMode::Induced : CopyMode::Subgraph;
  v.semantics.image = sem.at("imageMode") == "induced-on-image" ? ImageMode::InducedOnImage
                                                                : ImageMode::ImageSubgraph;
  const auto failure = j.at("failure").get<std::string>();
  v.failure = failure == "not-injective"     ? WFailure::NotInjective
              : failure == "image-not-stiff" ? WFailure::ImageNotStiff
                                             : WFailure::None;
  if (!j.at("witness").is_null()) {
    Embedding e = embedding_from_json(j.at("witness"));
    e.host = v.map.domain();
    e.vertex_image.resize(e.pattern.order());
    for (const auto& [k, img] : j.at("witness").at("vertexImage").items())
      e.vertex_image[e.pattern.index_of(k)] = e.host.index_of(img.get<std::string>());
    v.witness = std::move(e);
  }
  return v;
}

Json to_json(const WxVerdict& v) {
  Json out = {{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
  out["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  return out;
}

Json to_json(const ChainReport& r) {
  Json members = Json::array();
  for (const auto& m : r.memberships) {
    Json entry = {{"name", m.name}, {"verdict", to_string(m.verdict)}, {"reason", m.reason}};
    if (m.w) entry["membership"] = to_json(*m.w);
    if (m.certificate) entry["certificate"] = to_json(*m.certificate);
    if (!m.w) entry["map"] = to_json(m.map);
    members.push_back(std::move(entry));
  }
  Json axioms = Json::array();
  for (const auto& a : r.axioms)
    axioms.push_back({{"statement", a.statement}, {"result", to_string(a.result)}});
  return {{"classPredicate", to_string(r.predicate)},
          {"semantics",
           {{"copyMode", to_string(r.semantics.copy)}, {"imageMode", to_string(r.semantics.image)}}},
          {"memberships", std::move(members)},
          {"axiomsChecked", std::move(axioms)},
          {"violated", r.violated()}};
}

Json to_json(const GraphEquivalence& e) {
  Json out = {{"equivalent", e.equivalent},
              {"left", to_json(e.left)},
              {"right", to_json(e.right)}};
  out["stiffIsomorphism"] = e.stiff_iso ? images_json(*e.stiff_iso) : Json(nullptr);
  return out;
}

Json to_json(const PushoutSquare& p) {
  return {{"pushout", to_json(p.pushout)},
          {"intoB", images_json(p.into_b)},
          {"intoC", images_json(p.into_c)}};
}

Json to_json(const CylinderFactorization& c) {
  return {{"cylinder", to_json(c.cylinder)},
          {"inclusion", images_json(c.incl)},
          {"retraction", images_json(c.retract)}};
}

Json to_json(const Factorization& f) {
  Json out = {{"cylinder", to_json(f.incl.codomain())},
              {"inclusion", images_json(f.incl)},
              {"retraction", images_json(f.retract)},
              {"level", to_string(f.level)},
              {"certified", f.certified}};
  out["certificate"] = f.certificate ? to_json(*f.certificate) : Json(nullptr);
  return out;
}

Json to_json(const Counterexample& c) {
  return {{"case", to_string(c.kind)},
          {"collision", {c.collision.first, c.collision.second}},
          {"c", to_json(c.c)},
          {"square", to_json(c.square)},
          {"comparison", to_json(c.comparison)},
          {"equivalent", c.equivalent}};
}

}  // namespace xhtpy
