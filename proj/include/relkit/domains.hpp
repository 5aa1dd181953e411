#pragma once

#include <array>

#include "relkit/rel.hpp"

namespace relkit {

/// Left domain I ∩ R∘R˘: the coreflexive on targets with a nonempty row.
Rel ldom(const Rel& r);
/// Right domain I ∩ R˘∘R: the coreflexive on sources with a nonempty column.
Rel rdom(const Rel& r);

/// Heterogeneous relations are never coreflexive.
bool is_coreflexive(const Rel& p);
bool is_symmetric(const Rel& r);
bool is_transitive(const Rel& r);
/// Symmetric and transitive. Throws TypeError on heterogeneous input.
bool is_per(const Rel& p);
/// R = R∘⊤∘R.
bool is_rectangle(const Rel& r);
/// Symmetric rectangle. Throws TypeError on heterogeneous input.
bool is_square(const Rel& r);

/// Right per domain R>∘(R\\R); checked against (R\\R)∘R>.
Rel per_rdom(const Rel& r);
/// Left per domain (R//R)∘R<; checked against R<∘(R//R).
Rel per_ldom(const Rel& r);

/// f∘f˘ ⊆ I: every source element has at most one image.
bool is_functional(const Rel& f);
bool is_injective(const Rel& f);
bool is_bijection(const Rel& f);

/// The seven equivalent characterizations of difunctionality, each
/// evaluated on its own:
///   0: R∘R˘∘R ⊆ R           1: R = R∘R˘∘R
///   2: R>∘(R\R) = R˘∘R      3: R>per = R˘∘R
///   4: (R/R)∘R< = R∘R˘      5: R<per = R∘R˘
///   6: R = R ∩ (R\R/R)˘
struct DifunctionalBattery {
  std::array<bool, 7> forms{};

  bool all() const;
  bool none() const;
  bool consistent() const { return all() || none(); }
};

DifunctionalBattery difunctional_battery(const Rel& r);
/// Cheapest form, R∘R˘∘R ⊆ R.
bool is_difunctional(const Rel& r);

}  // namespace relkit
