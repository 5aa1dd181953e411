#include "relkit/domains.hpp"

#include <algorithm>

#include "relkit/errors.hpp"
#include "relkit/residuals.hpp"

namespace relkit {

Rel ldom(const Rel& r) {
  BitMatrix m(r.rows(), r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i)
    if (!r.bits().row_empty(i)) m.set(i, i);
  return Rel(r.target(), r.target(), std::move(m));
}

Rel rdom(const Rel& r) {
  BitMatrix used(1, r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const auto* row = r.bits().row(i);
    auto* acc = used.row(0);
    for (std::size_t w = 0; w < used.words_per_row(); ++w) acc[w] |= row[w];
  }
  BitMatrix m(r.cols(), r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j)
    if (used.test(0, j)) m.set(j, j);
  return Rel(r.source(), r.source(), std::move(m));
}

bool is_coreflexive(const Rel& p) {
  if (!p.homogeneous()) return false;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (i != j && p(i, j)) return false;
  return true;
}

bool is_symmetric(const Rel& r) { return r.homogeneous() && r == converse(r); }

bool is_transitive(const Rel& r) {
  require_homogeneous(r, "is_transitive");
  return leq(compose(r, r), r);
}

bool is_per(const Rel& p) {
  require_homogeneous(p, "is_per");
  return is_symmetric(p) && is_transitive(p);
}

bool is_rectangle(const Rel& r) {
  return r == compose(r, Rel::top(r.source(), r.target()), r);
}

bool is_square(const Rel& r) {
  require_homogeneous(r, "is_square");
  return is_rectangle(r) && is_symmetric(r);
}

Rel per_rdom(const Rel& r) {
  Rel kernel = sym_rdiv(r, r);
  Rel dom = rdom(r);
  Rel left = compose(dom, kernel);
  if (!(left == compose(kernel, dom)))
    throw LawViolation("per_rdom: R>∘(R\\\\R) differs from (R\\\\R)∘R>");
  return left;
}

Rel per_ldom(const Rel& r) {
  Rel kernel = sym_ldiv(r, r);
  Rel dom = ldom(r);
  Rel right = compose(kernel, dom);
  if (!(right == compose(dom, kernel)))
    throw LawViolation("per_ldom: (R//R)∘R< differs from R<∘(R//R)");
  return right;
}

bool is_functional(const Rel& f) {
  // f∘f˘ ⊆ I says each column holds at most one bit.
  for (std::size_t j = 0; j < f.cols(); ++j) {
    bool seen = false;
    for (std::size_t i = 0; i < f.rows(); ++i) {
      if (!f(i, j)) continue;
      if (seen) return false;
      seen = true;
    }
  }
  return true;
}

bool is_injective(const Rel& f) {
  // f˘∘f ⊆ I: each row holds at most one bit.
  for (std::size_t i = 0; i < f.rows(); ++i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < f.cols() && n < 2; ++j) n += f(i, j) ? 1 : 0;
    if (n > 1) return false;
  }
  return true;
}

bool is_bijection(const Rel& f) { return is_functional(f) && is_injective(f); }

bool DifunctionalBattery::all() const {
  return std::all_of(forms.begin(), forms.end(), [](bool b) { return b; });
}

bool DifunctionalBattery::none() const {
  return std::none_of(forms.begin(), forms.end(), [](bool b) { return b; });
}

DifunctionalBattery difunctional_battery(const Rel& r) {
  DifunctionalBattery b;
  const Rel rc = converse(r);
  const Rel rrr = compose(r, rc, r);
  const Rel left_sq = compose(r, rc);
  const Rel right_sq = compose(rc, r);
  b.forms[0] = leq(rrr, r);
  b.forms[1] = r == rrr;
  b.forms[2] = compose(rdom(r), under(r, r)) == right_sq;
  b.forms[3] = per_rdom(r) == right_sq;
  b.forms[4] = compose(over(r, r), ldom(r)) == left_sq;
  b.forms[5] = per_ldom(r) == left_sq;
  b.forms[6] = r == meet(r, converse(sandwich(r, r, r)));
  return b;
}

bool is_difunctional(const Rel& r) { return leq(compose(r, converse(r), r), r); }

}  // namespace relkit
