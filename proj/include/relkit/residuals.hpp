#pragma once

#include "relkit/rel.hpp"

// Factors (residuals) of composition, evaluated through complements:
//   R\S = ¬(R˘∘¬S)     b (R\S) c  iff  every a with a R b has a S c
//   S/T = ¬(¬S∘T˘)     a (S/T) c  iff  every b with c T b has a S b
namespace relkit {

/// R\S for R : A~B, S : A~C; result B~C.
Rel under(const Rel& r, const Rel& s);
/// S/T for S : A~B, T : C~B; result A~C.
Rel over(const Rel& s, const Rel& t);
/// R\S/T for R : A~B, S : A~C, T : D~C; result B~D.
Rel sandwich(const Rel& r, const Rel& s, const Rel& t);
/// R\\S = R\S ∩ (S\R)˘ for R : A~B, S : A~C; result B~C.
Rel sym_rdiv(const Rel& r, const Rel& s);
/// R//S = R/S ∩ (S/R)˘ for R : B~A, S : C~A; result B~C.
Rel sym_ldiv(const Rel& r, const Rel& s);

}  // namespace relkit
