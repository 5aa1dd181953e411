#pragma once

#include "relkit/rel.hpp"

// Definitional evaluation by explicit quantification over carrier elements.
// Slow and independent of the word-parallel matrix code; the law harness
// checks the algebra against it.
namespace relkit::pointwise {

Rel compose(const Rel& r, const Rel& s);
Rel converse(const Rel& r);
/// b (R\S) c ≡ ∀a: a R b ⇒ a S c
Rel under(const Rel& r, const Rel& s);
/// a (S/T) c ≡ ∀b: c T b ⇒ a S b
Rel over(const Rel& s, const Rel& t);
/// b (R\S/T) d ≡ ∀a,c: a R b ∧ d T c ⇒ a S c
Rel sandwich(const Rel& r, const Rel& s, const Rel& t);
Rel sym_rdiv(const Rel& r, const Rel& s);
Rel sym_ldiv(const Rel& r, const Rel& s);

}  // namespace relkit::pointwise
