#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xhtpy/folds.hpp"
#include "xhtpy/graph.hpp"
#include "xhtpy/homotopy.hpp"

namespace xhtpy {

struct Quotient {
  Graph graph;
  GraphMap projection;
};

/// One vertex per block, labelled "[m1,m2,...]" with members in vertex
/// order. [x][y] is an edge iff some members are adjacent; an edge inside a
/// block becomes a loop. Throws NotAPartition or UnknownVertex.
Quotient quotient_by_partition(const Graph& g, const std::vector<std::vector<VertexId>>& blocks);

// G / f(A): the image of f forms one block, everything else is a singleton.
// Throws SignatureMismatch unless codomain(f) == g.
Quotient quotient_by_image(const Graph& g, const GraphMap& f);

/// The pushout of B <-f- A -g-> C.
///
/// P is B + C modulo the equivalence generated by f(a) ~ g(a). Classes are
/// labelled "[...]" listing B members by label, then C members with a
/// trailing "'".
struct PushoutSquare {
  GraphMap f;
  GraphMap g;
  Graph pushout;
  GraphMap into_b;
  GraphMap into_c;
};

// Throws SignatureMismatch if f and g have different domains.
PushoutSquare pushout(const GraphMap& f, const GraphMap& g);
GraphMap cobase_change(const GraphMap& f, const GraphMap& g);

/// M_f: (A x I_1) + B with (a,0) identified with f(a).
///
/// Vertices are "(a,1)" for a in A and "[b]" for b in B. `incl` sends a to
/// (a,1); `retract` sends (a,1) to f(a) and [b] to b.
struct CylinderFactorization {
  GraphMap f;
  Graph cylinder;
  GraphMap incl;
  GraphMap retract;
};

CylinderFactorization mapping_cylinder(const GraphMap& f);

enum class CertificationLevel {
  MapLevel,    // brute-force equivalence certificate for the retract
  GraphLevel,  // cylinder and codomain have isomorphic stiff subgraphs
};

std::string_view to_string(CertificationLevel level);

struct Factorization {
  GraphMap incl;
  GraphMap retract;
  CertificationLevel level = CertificationLevel::GraphLevel;
  std::optional<EquivalenceCertificate> certificate;
  bool certified = false;
};

// Mapping-cylinder factorization. The retract is certified by brute force
// when the budget allows, otherwise at graph level.
Factorization factorize(const GraphMap& f, const Budget& budget = {});

enum class CounterexampleCase {
  Simple,          // A simple: C = A + a1a2
  UnloopedWedge,   // a1, a2 unlooped: C_7 wedged at a1, plus a1a2
  LoopedWedge,     // exactly one of a1, a2 looped: C_7 wedged at the unlooped one, plus a1a2
  LoopedBridge,    // both looped: a new 6-vertex path from a1 to a2
};

std::string_view to_string(CounterexampleCase c);

/// A cospan whose cobase change fails to be a homotopy equivalence, built
/// from a non-injective equivalence f : A -> B.
///
/// `collision` is the first pair (a1, a2), a1 < a2, with f(a1) = f(a2).
/// `equivalent` compares C with the pushout by stiff reduction and is
/// expected to be false.
struct Counterexample {
  CounterexampleCase kind;
  std::pair<VertexId, VertexId> collision;
  Graph c;
  GraphMap g;
  PushoutSquare square;
  GraphEquivalence comparison;
  bool equivalent = true;
};

// Throws NotNonInjective, NotAnEquivalence or BudgetExceeded.
Counterexample counterexample_pushout(const GraphMap& f, const Budget& budget = {});

// Named graphs with vertices "0".."n-1". Throw BadParameter.
Graph cycle_graph(std::size_t n);     // n >= 3
Graph complete_graph(std::size_t n);  // n >= 1
Graph path_graph(std::size_t n);      // n >= 1 vertices, no loops
// C_n with a loop at `loop_at`.
Graph looped_cycle(std::size_t n, std::size_t loop_at);

// Parses "C<n>", "K<n>", "P<n>", "I<n>" (interval) and "C<n>@<k>" (cycle
// with a loop at k). Throws BadParameter.
Graph named_graph(std::string_view name);

}  // namespace xhtpy
