#include <algorithm>
#include <set>

#include "laws/common.hpp"
#include "relkit/order_analysis.hpp"

namespace relkit {

namespace laws {

LawParam coreflexive(std::string name, const std::string& v) {
  return {std::move(name), v, v, [](const Rel& r) { return is_coreflexive(r); },
          [](Generator& g, const Carrier& c, const Carrier&) { return g.coreflexive(c); }};
}

LawParam per(std::string name, const std::string& v) {
  return {std::move(name), v, v, [](const Rel& r) { return is_per(r); },
          [](Generator& g, const Carrier& c, const Carrier&) { return g.per(c); }};
}

LawParam functional(std::string name, const std::string& target, const std::string& source) {
  return {std::move(name), target, source, [](const Rel& r) { return is_functional(r); },
          [](Generator& g, const Carrier& t, const Carrier& s) { return g.functional(t, s); }};
}

LawParam difunctional(std::string name, const std::string& target, const std::string& source) {
  return {std::move(name), target, source, [](const Rel& r) { return is_difunctional(r); },
          [](Generator& g, const Carrier& t, const Carrier& s) {
            return g.difunctional(t, s, Carrier::numbered("K", g.uniform(1, 6)));
          }};
}

LawParam provisional_preorder(std::string name, const std::string& v) {
  return {std::move(name), v, v, [](const Rel& r) { return is_provisional_preorder(r); },
          [](Generator& g, const Carrier& c, const Carrier&) { return g.provisional_preorder(c); }};
}

LawParam provisional_ordering(std::string name, const std::string& v) {
  return {std::move(name), v, v, [](const Rel& r) { return is_provisional_ordering(r); },
          [](Generator& g, const Carrier& c, const Carrier&) { return g.provisional_ordering(c); }};
}

LawParam dense(std::string name, const std::string& v) {
  return {std::move(name), v, v, [](const Rel& r) { return leq(r, compose(r, r)); },
          [](Generator& g, const Carrier& c, const Carrier&) { return g.dense(c); }};
}

Outcome Checks::outcome() const {
  if (failed_.empty()) return holds();
  std::string note = "violated: ";
  for (std::size_t i = 0; i < failed_.size(); ++i) note += (i ? ", " : "") + failed_[i];
  return fails(note);
}

Rel id(const Rel& r) {
  require_homogeneous(r, "identity");
  return Rel::identity(r.target());
}

bool is_preorder(const Rel& r) { return r.homogeneous() && leq(id(r), r) && is_transitive(r); }

bool is_total(const Rel& r) { return join(r, converse(r)) == Rel::top(r.target(), r.source()); }

}  // namespace laws

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = [] {
    std::vector<Law> out;
    laws::register_rel_laws(out);
    laws::register_residual_laws(out);
    laws::register_domain_laws(out);
    laws::register_diagonal_laws(out);
    laws::register_index_laws(out);
    laws::register_order_laws(out);
    laws::register_graph_laws(out);
    return out;
  }();
  return registry;
}

const std::vector<std::string>& law_manifest() {
  static const std::vector<std::string> manifest{
      // carrier-rel
      "rel.compose.associative",
      "rel.converse.lattice-iso",
      "rel.dedekind",
      "rel.dedekind-dual",
      "rel.cone",
      "rel.rtc.least-fixpoint",
      // residuals
      "residual.galois",
      "residual.cancellation",
      "residual.division-absorption",
      "residual.self-division",
      "residual.converse-distribution",
      "residual.cross-check",
      // domains
      "domain.coreflexive-calculus",
      "domain.universal",
      "domain.universal-per",
      "domain.per-domain-identities",
      "function.galois",
      "function.under",
      "function.converse-cancel",
      "function.factor-distribution",
      "function.factor-shift",
      "function.split-factor",
      "difunction.battery-agreement",
      // diagonal
      "diagonal.difunctional",
      "diagonal.converse",
      "diagonal.per-domain-division",
      "diagonal.domain-iff-per-domain",
      "diagonal.contained",
      "diagonal.injective-when-antisymmetric",
      "diagonal.dense-empty",
      // index-core
      "index.choice",
      "core.domains",
      "index.per-domain-regeneration",
      "core.diagonal",
      "index.diagonal-is-index",
      "index.diagonal-restriction",
      "index.difunction-clauses",
      "iso.equivalence",
      // order-analysis
      "block.representation-lemma",
      "block.domain-criterion",
      "core.diagonal-domain",
      "core.ordering",
      "staircase.equivalent-forms",
      "staircase.linear-preorder",
      "staircase.strict-linear",
      "provisional.domains",
      "provisional.converse",
      "provisional.division",
      "provisional.left",
      "provisional.per-left",
      "provisional.per-domain",
      "provisional.ordering-domain",
      "pair.inf-preserving",
      // graph-condense
      "scc.decomposition",
      "scc.diagonal-equivalence",
      "scc.idempotent",
  };
  return manifest;
}

std::vector<std::string> registry_mismatches() {
  std::multiset<std::string> registered;
  for (const auto& law : law_registry()) registered.insert(law.id);
  const std::set<std::string> wanted(law_manifest().begin(), law_manifest().end());
  std::vector<std::string> out;
  for (const auto& id : registered)
    if (!wanted.count(id) || registered.count(id) > 1) out.push_back(id);
  for (const auto& id : wanted)
    if (!registered.count(id)) out.push_back(id);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace relkit
