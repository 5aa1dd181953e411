#include "relkit/dot.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace relkit {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::size_t> by_label(const Carrier& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return c.label(a) < c.label(b); });
  return order;
}

std::string node_id(const char* side, const Carrier& c, std::size_t i) {
  return quote(std::string(side) + ":" + c.label(i));
}

}  // namespace

std::string emit_dot(const Rel& r, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=LR;\n";
  const bool homo = r.homogeneous() && r.target().identical(r.source());
  const auto rows = by_label(r.target());
  const auto cols = by_label(r.source());
  const char* tside = homo ? "n" : "t";
  for (std::size_t i : rows)
    out << "  " << node_id(tside, r.target(), i) << " [label=" << quote(r.target().label(i)) << "];\n";
  if (!homo)
    for (std::size_t j : cols)
      out << "  " << node_id("s", r.source(), j) << " [label=" << quote(r.source().label(j)) << "];\n";
  const char* sside = homo ? "n" : "s";
  for (std::size_t i : rows)
    for (std::size_t j : cols)
      if (r(i, j))
        out << "  " << node_id(tside, r.target(), i) << " -> " << node_id(sside, r.source(), j) << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const BlockOrderDecomposition& d, const std::string& name) {
  std::ostringstream out;
  const Carrier& c = d.carrier;
  const Carrier& a = d.f.source();
  const Carrier& b = d.g.source();
  out << "digraph " << quote(name) << " {\n  compound=true;\n  rankdir=LR;\n";
  const auto blocks = by_label(c);
  for (std::size_t k : blocks) {
    out << "  subgraph " << quote("cluster_" + c.label(k)) << " {\n    label=" << quote(c.label(k)) << ";\n";
    out << "    " << node_id("block", c, k) << " [shape=point];\n";
    for (std::size_t i : by_label(a))
      if (d.f(k, i)) out << "    " << node_id("t", a, i) << " [label=" << quote(a.label(i)) << "];\n";
    for (std::size_t j : by_label(b))
      if (d.g(k, j)) out << "    " << node_id("s", b, j) << " [label=" << quote(b.label(j)) << ", shape=box];\n";
    out << "  }\n";
  }
  // Covering pairs of the strict part of T.
  for (std::size_t x : blocks)
    for (std::size_t y : blocks) {
      if (x == y || !d.t(x, y) || d.t(y, x)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < c.size() && covered; ++z)
        if (z != x && z != y && d.t(x, z) && d.t(z, y) && !d.t(z, x) && !d.t(y, z)) covered = false;
      if (covered)
        out << "  " << node_id("block", c, x) << " -> " << node_id("block", c, y) << " [ltail="
            << quote("cluster_" + c.label(x)) << ", lhead=" << quote("cluster_" + c.label(y)) << "];\n";
    }
  const Rel diag = compose(converse(d.f), d.g);
  for (std::size_t i : by_label(a))
    for (std::size_t j : by_label(b))
      if (diag(i, j)) out << "  " << node_id("t", a, i) << " -> " << node_id("s", b, j) << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const CondensationResult& cr, const std::string& name) {
  std::ostringstream out;
  const Carrier& c = cr.carrier;
  const Carrier& nodes = cr.sc.source();
  out << "digraph " << quote(name) << " {\n  compound=true;\n";
  const auto comps = by_label(c);
  for (std::size_t k : comps) {
    out << "  subgraph " << quote("cluster_" + c.label(k)) << " {\n    label=" << quote(c.label(k)) << ";\n";
    for (std::size_t n : by_label(nodes))
      if (cr.sc(k, n)) out << "    " << node_id("n", nodes, n) << " [label=" << quote(nodes.label(n)) << "];\n";
    out << "  }\n";
  }
  // Component k contains the node carrying its own label.
  auto anchor = [&](std::size_t k) { return node_id("n", nodes, *nodes.find(c.label(k))); };
  for (std::size_t x : comps)
    for (std::size_t y : comps)
      if (cr.a(x, y))
        out << "  " << anchor(x) << " -> " << anchor(y) << " [ltail=" << quote("cluster_" + c.label(x))
            << ", lhead=" << quote("cluster_" + c.label(y)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace relkit
