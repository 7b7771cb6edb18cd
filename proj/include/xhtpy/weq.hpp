#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xhtpy/homotopy.hpp"
#include "xhtpy/search.hpp"

namespace xhtpy {

enum class Verdict { In, Out, Unknown };
std::string_view to_string(Verdict v);

// How the image of a copy T is turned into a graph: the vertices f(V(T))
// with edges f(E(T)), or the codomain subgraph induced on f(V(T)).
enum class ImageMode { ImageSubgraph, InducedOnImage };
std::string_view to_string(ImageMode mode);

struct WSemantics {
  CopyMode copy = CopyMode::Subgraph;
  ImageMode image = ImageMode::ImageSubgraph;
};

enum class WFailure {
  None,
  NotInjective,     // f identifies two vertices of the copy
  ImageNotStiff,    // the image graph is not isomorphic to B_s
};
std::string_view to_string(WFailure failure);

/// Membership of f : A -> B in the class W: every copy T of A_s in A is
/// mapped injectively onto a graph isomorphic to B_s.
struct WMembershipVerdict {
  GraphMap map;
  Verdict verdict = Verdict::Unknown;
  WSemantics semantics;
  std::optional<Embedding> witness;  // first failing copy, canonical order
  WFailure failure = WFailure::None;
  std::string reason;
  Graph domain_stiff;
  Graph codomain_stiff;
  std::size_t copies_checked = 0;
};

// Throws BudgetExceeded.
WMembershipVerdict in_W(const GraphMap& f, const WSemantics& semantics = {},
                        const Budget& budget = {});

// Image of a copy under f according to `mode`. Requires f injective on the copy.
Graph copy_image(const GraphMap& f, const Embedding& copy, ImageMode mode);

// Recomputes the failure of an `out` verdict from scratch: the copy is a
// copy of a stiff reduction of the domain, and either f is non-injective on
// it or its image is not isomorphic to a freshly computed stiff reduction of
// the codomain.
bool reverify_witness(const WMembershipVerdict& v);

struct WxVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<EquivalenceCertificate> certificate;
  std::string reason;
};

// Brute-force homotopy equivalence test. Budget exhaustion gives Unknown.
WxVerdict in_W_times(const GraphMap& f, const Budget& budget = {});

enum class MapClass { W, WTimes };
std::string_view to_string(MapClass c);

enum class Implication { Holds, Violated, Vacuous, Unknown };
std::string_view to_string(Implication i);

struct Membership {
  std::string name;  // "f", "gf", ...
  GraphMap map;
  Verdict verdict = Verdict::Unknown;
  std::optional<WMembershipVerdict> w;
  std::optional<EquivalenceCertificate> certificate;
  std::string reason;
};

struct AxiomCheck {
  std::string statement;  // e.g. "f, gf => g"
  Implication result = Implication::Unknown;
};

/// Memberships of the maps of a composable chain and their composites
/// (recomputed here), together with the implications evaluated on them.
struct ChainReport {
  MapClass predicate = MapClass::W;
  WSemantics semantics;
  std::vector<Membership> memberships;
  std::vector<AxiomCheck> axioms;

  const Membership& member(std::string_view name) const;
  bool violated() const;
};

// All of these throw SignatureMismatch for non-composable input.
ChainReport check_two_of_three(const GraphMap& f, const GraphMap& g, MapClass predicate,
                               const WSemantics& semantics = {}, const Budget& budget = {});
ChainReport check_two_of_six(const GraphMap& f, const GraphMap& g, const GraphMap& h,
                             MapClass predicate, const WSemantics& semantics = {},
                             const Budget& budget = {});
// f, g in W => gf in W.
ChainReport composition_closure_check(const GraphMap& f, const GraphMap& g,
                                      MapClass predicate = MapClass::W,
                                      const WSemantics& semantics = {},
                                      const Budget& budget = {});
// g, gf in W => f in W.
ChainReport right_cancellation_check(const GraphMap& f, const GraphMap& g,
                                     MapClass predicate = MapClass::W,
                                     const WSemantics& semantics = {},
                                     const Budget& budget = {});

}  // namespace xhtpy
