#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relkit/index_core.hpp"
#include "relkit/law_report.hpp"
#include "relkit/rel.hpp"

namespace relkit {

/// T< ⊆ T, T> ⊆ T, T∘T ⊆ T. All three predicates throw TypeError on
/// heterogeneous input.
bool is_provisional_preorder(const Rel& t);
/// Provisional preorder with T ∩ T˘ ⊆ I.
bool is_provisional_ordering(const Rel& t);
/// Provisional ordering with T ∪ T˘ = (T∩T˘)∘⊤∘(T∩T˘).
bool is_linear_provisional_ordering(const Rel& t);

/// R< = (ΔR)< and R> = (ΔR)>.
bool is_block_ordered(const Rel& r);

/// R = f˘∘T∘g, T a provisional ordering on the block carrier, and
/// f∘f˘ = f< = T∩T˘ = g< = g∘g˘.
struct BlockOrderDecomposition {
  Rel f;
  Rel t;
  Rel g;
  Carrier carrier;
  bool linear = false;
};

/// Names of the decomposition invariants that fail for r; empty when all hold.
std::vector<std::string> decomposition_violations(const BlockOrderDecomposition& d, const Rel& r);

/// Absent exactly when r is not block-ordered. The result is checked against
/// every decomposition invariant; a failure throws LawViolation.
std::optional<BlockOrderDecomposition> block_decompose(const Rel& r,
                                                       TieBreak tie = TieBreak::least);

/// φ = f₁∘f₂˘, the order isomorphism between the block carriers of two
/// decompositions of the same relation: φ∘φ˘ = T₁∩T₁˘, φ˘∘φ = T₂∩T₂˘ and
/// T₁∘φ = φ∘T₂. Throws PreconditionError if the decompositions describe
/// different relations.
Rel representation_iso(const BlockOrderDecomposition& d1, const BlockOrderDecomposition& d2);

/// The four formulations of the staircase property:
///   under: R\R ∪ (R\R)˘ = ⊤      over: R/R ∪ (R/R)˘ = ⊤
///   both:  R ∪ (R\R/R)˘ = ⊤      neg:  R∘¬R˘∘R ⊆ R
struct StaircaseForms {
  bool under = false;
  bool over = false;
  bool both = false;
  bool neg = false;

  bool agree() const { return under == over && over == both && both == neg; }
  /// Number of formulations that hold.
  int holding() const { return int(under) + int(over) + int(both) + int(neg); }
};

StaircaseForms staircase_forms(const Rel& r);
/// Throws LawViolation when the formulations disagree.
bool is_staircase(const Rel& r);

/// For homogeneous r with r ⊆ r∘r, checks ΔR = ⊥ ≡ I∩R = ⊥. A false premise
/// gives a skipped report.
LawReport dense_diag_check(const Rel& r);

/// Block ordering of a provisional preorder via the index of its per domain:
/// T' = J∘T∘J reindexed onto the classes. Throws PreconditionError unless t
/// is a provisional preorder.
BlockOrderDecomposition preorder_block_order(const Rel& t, TieBreak tie = TieBreak::least);

}  // namespace relkit
