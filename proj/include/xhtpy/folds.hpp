#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xhtpy/graph.hpp"

namespace xhtpy {

// Vertex `removed` folds onto `target`: N(removed) is a subset of N(target).
struct FoldStep {
  VertexId removed;
  VertexId target;
  friend bool operator==(const FoldStep&, const FoldStep&) = default;
};

/// A certificate that `start` folds down to `result`.
///
/// `composite` is the retraction start -> result obtained by composing the
/// individual fold maps; `result` is the subgraph of `start` induced on the
/// surviving vertices.
struct FoldSequence {
  Graph start;
  std::vector<FoldStep> steps;
  Graph result;
  GraphMap composite;
};

// Ordered pairs (v, v') of distinct vertices with N(v) subset of N(v'),
// sorted by (v, v') in vertex order.
std::vector<std::pair<VertexId, VertexId>> foldable_pairs(const Graph& g);

struct FoldResult {
  Graph graph;      // g - v
  GraphMap fold;    // g -> g - v, v |-> v'
};

// Throws NotAFold naming a neighbor of v that v' lacks, or UnknownVertex.
FoldResult apply_fold(const Graph& g, std::string_view v, std::string_view target);

bool is_stiff(const Graph& g);

struct FirstFold {};
struct RandomFold {
  std::uint64_t seed = 0;
};
struct GivenFolds {
  std::vector<FoldStep> steps;
};
// `FirstFold` takes the least foldable pair at every step; `RandomFold`
// picks uniformly among foldable pairs; `GivenFolds` replays a fixed list,
// which must end in a stiff graph.
using FoldPolicy = std::variant<FirstFold, RandomFold, GivenFolds>;

// Throws InvalidSequence for a GivenFolds step that is not a fold at its
// position, or that leaves a non-stiff graph.
FoldSequence stiff_reduction(const Graph& g, const FoldPolicy& policy = FirstFold{});

// Replays `steps` without requiring the end result to be stiff.
FoldSequence replay_folds(const Graph& g, const std::vector<FoldStep>& steps);

struct ConfluenceReport {
  Graph stiff;                        // result of the first trial
  std::vector<FoldSequence> sequences;
};

// Runs `trials` random reductions (seeds seed, seed+1, ...) and checks that
// all results are isomorphic. Throws BadParameter for trials < 2 and
// ConfluenceViolation if two results differ.
ConfluenceReport confluence_check(const Graph& g, std::size_t trials, std::uint64_t seed);

// True iff `incl` is, up to relabelling, G - v -> G for a fold of v onto a
// surviving vertex.
bool is_unfold(const GraphMap& incl);

struct FoldClassification {
  // Folds removing a vertex outside the protected set.
  std::vector<std::pair<VertexId, VertexId>> relative;
  // Folds removing a protected vertex.
  std::vector<std::pair<VertexId, VertexId>> restricted;
};

// Throws UnknownVertex if `protected_vertices` is not a subset of V(b).
FoldClassification relative_foldable_pairs(const Graph& b,
                                           const std::vector<VertexId>& protected_vertices);

struct FoldStage {
  std::vector<VertexId> vertices;  // surviving vertices of the codomain
  std::size_t relative = 0;
  std::size_t restricted = 0;
};

/// Outcome of the quasi-cofibration search on an induced inclusion A -> B.
///
/// `reachable` is the verdict: some sequence of relative folds (never
/// removing a vertex of A) reaches a stiff graph. `strict_reachable` further
/// requires that no restricted fold is available at any stage of the path.
/// `stages` describes the path found for `reachable` (one entry per state,
/// including the final one); `stuck` lists states where only restricted
/// folds remain.
struct QuasiCofibrationTrace {
  bool reachable = false;
  bool strict_reachable = false;
  std::vector<FoldStep> sequence;
  std::vector<FoldStage> stages;
  std::vector<FoldStage> stuck;
  std::size_t states_explored = 0;
  std::string semantics = "RECONSTRUCTED";
};

// Throws NotInducedInclusion.
QuasiCofibrationTrace is_quasi_cofibration(const GraphMap& incl);

}  // namespace xhtpy
