#include "relkit/graph_condense.hpp"

#include "relkit/diagonal.hpp"
#include "relkit/errors.hpp"
#include "relkit/index_core.hpp"

namespace relkit {

std::vector<std::string> condensation_violations(const CondensationResult& c, const Rel& g) {
  std::vector<std::string> bad;
  const Rel closure = rtc(g);
  const Rel ident = Rel::identity(c.carrier);
  if (!(compose(converse(c.sc), c.sc) == diagonal(closure))) bad.emplace_back("sc˘∘sc = Δ(G*)");
  if (!(closure == compose(converse(c.sc), rtc(c.a), c.sc))) bad.emplace_back("G* = sc˘∘A*∘sc");
  if (!meet(ident, tc(c.a)).is_empty()) bad.emplace_back("I ∩ A+ = ⊥");
  return bad;
}

CondensationResult condense(const Rel& g) {
  require_homogeneous(g, "condense");
  Splitting s = split(diagonal(rtc(g)), TieBreak::least, g.target().name() + "/scc");
  const Rel ident = Rel::identity(s.carrier);
  Rel a = meet(compose(s.f, g, converse(s.f)), negate(ident));
  std::vector<std::vector<std::string>> components(s.carrier.size());
  for (std::size_t k = 0; k < s.carrier.size(); ++k)
    for (std::size_t n = 0; n < g.cols(); ++n)
      if (s.f(k, n)) components[k].push_back(g.source().label(n));
  CondensationResult out{std::move(s.f), std::move(a), std::move(components), std::move(s.carrier)};
  auto bad = condensation_violations(out, g);
  if (!bad.empty()) throw LawViolation("condense: invariant fails: " + bad.front());
  return out;
}

BlockOrderDecomposition block_order_of_closure(const Rel& g) {
  CondensationResult c = condense(g);
  Rel order = rtc(c.a);
  if (!(meet(order, converse(order)) == Rel::identity(c.carrier)))
    throw LawViolation("block_order_of_closure: A* ∩ (A*)˘ = I fails");
  BlockOrderDecomposition d{c.sc, std::move(order), c.sc, c.carrier, false};
  d.linear = is_linear_provisional_ordering(d.t);
  auto bad = decomposition_violations(d, rtc(g));
  if (!bad.empty()) throw LawViolation("block_order_of_closure: invariant fails: " + bad.front());
  return d;
}

}  // namespace relkit
