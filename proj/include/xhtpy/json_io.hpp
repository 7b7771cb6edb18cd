#pragma once

#include <json.hpp>

#include "xhtpy/constructions.hpp"
#include "xhtpy/folds.hpp"
#include "xhtpy/homotopy.hpp"
#include "xhtpy/weq.hpp"

namespace xhtpy {

// Insertion-ordered so that output is stable across runs.
using Json = nlohmann::ordered_json;

// {"vertices": [...], "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"v": "w", ...}
Json images_json(const GraphMap& m);
// {"domain": graph, "codomain": graph, "images": {...}}
Json to_json(const GraphMap& m);
GraphMap map_from_json(const Json& j);

Json to_json(const FoldSequence& s);
Json to_json(const QuasiCofibrationTrace& t);

// Objects that can be replayed carry a "type" tag:
//   "homotopy-certificate", "equivalence-certificate", "w-verdict".
Json to_json(const HomotopyCertificate& c);
HomotopyCertificate homotopy_from_json(const Json& j);
Json to_json(const EquivalenceCertificate& c);
EquivalenceCertificate equivalence_from_json(const Json& j);

Json to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);
Json to_json(const WMembershipVerdict& v);
WMembershipVerdict w_verdict_from_json(const Json& j);
Json to_json(const WxVerdict& v);

Json to_json(const ChainReport& r);
Json to_json(const GraphEquivalence& e);
Json to_json(const PushoutSquare& p);
Json to_json(const CylinderFactorization& c);
Json to_json(const Factorization& f);
Json to_json(const Counterexample& c);

}  // namespace xhtpy
