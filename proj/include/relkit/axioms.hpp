#pragma once

#include <vector>

#include "relkit/law_report.hpp"
#include "relkit/rel.hpp"

namespace relkit {

/// Checks, for the given triple, the Dedekind rule
///   R∘S ∩ T ⊆ R∘(S ∩ R˘∘T),
/// its dual read with R, S in the roles of the left and right factor
///   R∘S ∩ T ⊆ (R ∩ T∘S˘)∘S,
/// and the cone rule ⊤∘X∘⊤ = ⊤ ≡ X ≠ ⊥ for each of R, S, T.
/// Laws whose typing the triple does not meet are reported as skipped.
std::vector<LawReport> check_axioms(const Rel& r, const Rel& s, const Rel& t);

bool dedekind_holds(const Rel& r, const Rel& s, const Rel& t);
bool dedekind_dual_holds(const Rel& r, const Rel& s, const Rel& t);
/// Requires nonempty carriers.
bool cone_holds(const Rel& r);

}  // namespace relkit
