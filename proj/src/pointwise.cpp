#include "relkit/pointwise.hpp"

#include "relkit/errors.hpp"

namespace relkit::pointwise {

Rel compose(const Rel& r, const Rel& s) {
  if (!(r.source() == s.target())) throw TypeError("pointwise::compose: types do not chain");
  return Rel::tabulate(r.target(), s.source(), [&](std::size_t a, std::size_t c) {
    for (std::size_t b = 0; b < r.cols(); ++b)
      if (r(a, b) && s(b, c)) return true;
    return false;
  });
}

Rel converse(const Rel& r) {
  return Rel::tabulate(r.source(), r.target(), [&](std::size_t b, std::size_t a) { return r(a, b); });
}

Rel under(const Rel& r, const Rel& s) {
  if (!(r.target() == s.target())) throw TypeError("pointwise::under: targets differ");
  return Rel::tabulate(r.source(), s.source(), [&](std::size_t b, std::size_t c) {
    for (std::size_t a = 0; a < r.rows(); ++a)
      if (r(a, b) && !s(a, c)) return false;
    return true;
  });
}

Rel over(const Rel& s, const Rel& t) {
  if (!(s.source() == t.source())) throw TypeError("pointwise::over: sources differ");
  return Rel::tabulate(s.target(), t.target(), [&](std::size_t a, std::size_t c) {
    for (std::size_t b = 0; b < s.cols(); ++b)
      if (t(c, b) && !s(a, b)) return false;
    return true;
  });
}

Rel sandwich(const Rel& r, const Rel& s, const Rel& t) {
  if (!(r.target() == s.target()) || !(s.source() == t.source()))
    throw TypeError("pointwise::sandwich: not typable");
  return Rel::tabulate(r.source(), t.target(), [&](std::size_t b, std::size_t d) {
    for (std::size_t a = 0; a < r.rows(); ++a) {
      if (!r(a, b)) continue;
      for (std::size_t c = 0; c < t.cols(); ++c)
        if (t(d, c) && !s(a, c)) return false;
    }
    return true;
  });
}

Rel sym_rdiv(const Rel& r, const Rel& s) {
  const Rel rs = under(r, s);
  const Rel sr = under(s, r);
  return Rel::tabulate(rs.target(), rs.source(), [&](std::size_t b, std::size_t c) { return rs(b, c) && sr(c, b); });
}

Rel sym_ldiv(const Rel& r, const Rel& s) {
  const Rel rs = over(r, s);
  const Rel sr = over(s, r);
  return Rel::tabulate(rs.target(), rs.source(), [&](std::size_t b, std::size_t c) { return rs(b, c) && sr(c, b); });
}

}  // namespace relkit::pointwise
