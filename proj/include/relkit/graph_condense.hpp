#pragma once

#include <string>
#include <vector>

#include "relkit/order_analysis.hpp"
#include "relkit/rel.hpp"

namespace relkit {

struct CondensationResult {
  /// Type C~N: each node to its component. sc˘∘sc = Δ(G*).
  Rel sc;
  /// The acyclic quotient graph on components, type C~C.
  Rel a;
  /// Node labels of each component, in carrier order. Component k is labelled
  /// by its least node.
  std::vector<std::vector<std::string>> components;
  Carrier carrier;
};

/// Quotient of a digraph by its strongly connected components, obtained by
/// splitting the diagonal of the reflexive-transitive closure.
CondensationResult condense(const Rel& g);

/// Names of the condensation invariants that fail for g; empty when all hold.
std::vector<std::string> condensation_violations(const CondensationResult& c, const Rel& g);

/// (sc, A*, sc) as a block ordering of G*.
BlockOrderDecomposition block_order_of_closure(const Rel& g);

}  // namespace relkit
