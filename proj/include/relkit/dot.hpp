#pragma once

#include <string>

#include "relkit/graph_condense.hpp"
#include "relkit/order_analysis.hpp"
#include "relkit/rel.hpp"

// Graphviz renderings. Nodes are emitted in label order so the output is
// stable across runs.
namespace relkit {

/// Homogeneous relations become a digraph on one node set; heterogeneous ones
/// a bipartite digraph from target to source nodes.
std::string emit_dot(const Rel& r, const std::string& name = "R");
/// One cluster per block holding its fibers under f and g, directed edges
/// for the covering pairs of T, undirected links for the pairs of f˘∘g.
std::string emit_dot(const BlockOrderDecomposition& d, const std::string& name = "blocks");
/// One cluster per component, edges of the acyclic quotient between them.
std::string emit_dot(const CondensationResult& c, const std::string& name = "condensation");

}  // namespace relkit
