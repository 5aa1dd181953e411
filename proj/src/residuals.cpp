#include "relkit/residuals.hpp"

#include "relkit/errors.hpp"

namespace relkit {

Rel under(const Rel& r, const Rel& s) {
  if (!(r.target() == s.target()))
    throw TypeError("under: targets differ (" + r.type_string() + " vs " + s.type_string() + ")");
  return negate(compose(converse(r), negate(s)));
}

Rel over(const Rel& s, const Rel& t) {
  if (!(s.source() == t.source()))
    throw TypeError("over: sources differ (" + s.type_string() + " vs " + t.type_string() + ")");
  return negate(compose(negate(s), converse(t)));
}

Rel sandwich(const Rel& r, const Rel& s, const Rel& t) {
  if (!(r.target() == s.target()) || !(s.source() == t.source()))
    throw TypeError("sandwich: operands " + r.type_string() + ", " + s.type_string() + ", " +
                    t.type_string() + " not typable");
  return negate(compose(converse(r), negate(s), converse(t)));
}

Rel sym_rdiv(const Rel& r, const Rel& s) { return meet(under(r, s), converse(under(s, r))); }

Rel sym_ldiv(const Rel& r, const Rel& s) { return meet(over(r, s), converse(over(s, r))); }

}  // namespace relkit
