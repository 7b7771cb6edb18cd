#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xhtpy/folds.hpp"
#include "xhtpy/graph.hpp"

namespace xhtpy {

/// A chain f_0, ..., f_k of maps A -> B in which consecutive maps are
/// one-step homotopic. It encodes F : A x I_k -> B with F(a, i) = f_i(a).
struct HomotopyCertificate {
  std::vector<GraphMap> chain;

  std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
};

// forward: A -> B, inverse: B -> A; `left` runs from inverse o forward to 1_A,
// `right` from forward o inverse to 1_B.
struct EquivalenceCertificate {
  GraphMap forward;
  GraphMap inverse;
  HomotopyCertificate left;
  HomotopyCertificate right;
};

// F(a,0) = f(a), F(a,1) = g(a) is a map A x I_1 -> B. Throws SignatureMismatch.
bool one_step_homotopic(const GraphMap& f, const GraphMap& g);

// Every map one-step homotopic to f, in lexicographic order.
std::vector<GraphMap> one_step_neighbors(const GraphMap& f, const Budget& budget = {});

// Shortest chain from f to g (breadth-first over the hom set), or nullopt if
// f and g lie in different homotopy classes. Throws SignatureMismatch or
// BudgetExceeded.
std::optional<HomotopyCertificate> are_homotopic(const GraphMap& f, const GraphMap& g,
                                                 const Budget& budget = {});

struct HomotopyCheck {
  bool ok = true;
  std::string reason;
  // Violating edge of A x I_k, labelled as in product(A, interval(k)).
  std::optional<LabelEdge> violation;
};

// Materialises F on A x I_k and checks it is a graph map.
HomotopyCheck verify_homotopy(const HomotopyCertificate& cert);
// Additionally checks F restricted to the ends equals `from` and `to`.
HomotopyCheck verify_homotopy(const HomotopyCertificate& cert, const GraphMap& from,
                              const GraphMap& to);
// Re-verifies both chains and their endpoints.
HomotopyCheck verify_equivalence(const EquivalenceCertificate& cert);

// Searches hom(B, A) in lexicographic order for a homotopy inverse of f.
// Throws BudgetExceeded.
std::optional<EquivalenceCertificate> is_equivalence(const GraphMap& f, const Budget& budget = {});

// Brute force over hom(G, H) x hom(H, G). Throws BudgetExceeded.
std::optional<EquivalenceCertificate> find_equivalence(const Graph& g, const Graph& h,
                                                       const Budget& budget = {});

struct GraphEquivalence {
  bool equivalent = false;
  FoldSequence left;
  FoldSequence right;
  std::optional<GraphMap> stiff_iso;  // left.result -> right.result
};

// Compares stiff reductions (first-fold policy) up to isomorphism.
GraphEquivalence graphs_equivalent(const Graph& g, const Graph& h);

// Connected components of the one-step relation on hom(A, B). Classes are
// ordered by their least member; members are in lexicographic order.
std::vector<std::vector<GraphMap>> homotopy_classes(const Graph& a, const Graph& b,
                                                    const Budget& budget = {});

}  // namespace xhtpy
