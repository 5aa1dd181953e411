#include "relkit/axioms.hpp"

#include "relkit/errors.hpp"
#include "relkit/text_format.hpp"

namespace relkit {
namespace {

bool dedekind_typable(const Rel& r, const Rel& s, const Rel& t) {
  return r.source() == s.target() && t.target() == r.target() && t.source() == s.source();
}

LawReport report(const char* id, bool typable, bool ok, const std::string& instance) {
  LawReport rep;
  rep.law_id = id;
  rep.instance = instance;
  if (!typable) {
    rep.skipped = true;
    rep.note = "not typable";
    return rep;
  }
  rep.passed = ok;
  if (!ok) rep.counterexample = instance;
  return rep;
}

}  // namespace

bool dedekind_holds(const Rel& r, const Rel& s, const Rel& t) {
  return leq(meet(compose(r, s), t), compose(r, meet(s, compose(converse(r), t))));
}

bool dedekind_dual_holds(const Rel& r, const Rel& s, const Rel& t) {
  return leq(meet(compose(r, s), t), compose(meet(r, compose(t, converse(s))), s));
}

bool cone_holds(const Rel& r) {
  if (r.target().empty() || r.source().empty())
    throw PreconditionError("cone rule needs nonempty carriers");
  Rel cone = compose(Rel::top(r.target(), r.target()), r, Rel::top(r.source(), r.source()));
  return (cone == Rel::top(r.target(), r.source())) == !r.is_empty();
}

std::vector<LawReport> check_axioms(const Rel& r, const Rel& s, const Rel& t) {
  std::string instance;
  try {
    instance = write_document({{"R", r}, {"S", s}, {"T", t}});
  } catch (const Error&) {
    instance = write_relation("R", r) + "#\n" + write_relation("S", s) + "#\n" + write_relation("T", t);
  }
  std::vector<LawReport> out;
  const bool typable = dedekind_typable(r, s, t);
  out.push_back(report("rel.dedekind", typable, typable && dedekind_holds(r, s, t), instance));
  out.push_back(report("rel.dedekind-dual", typable, typable && dedekind_dual_holds(r, s, t), instance));
  for (const Rel* x : {&r, &s, &t}) {
    const bool nonempty = !x->target().empty() && !x->source().empty();
    LawReport rep = report("rel.cone", nonempty, nonempty && cone_holds(*x), instance);
    if (!nonempty) rep.note = "empty carrier";
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace relkit
