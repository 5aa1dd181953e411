#pragma once

#include "relkit/rel.hpp"

namespace relkit {

/// ΔR = R ∩ (R\R/R)˘. Always difunctional.
Rel diagonal(const Rel& r);

}  // namespace relkit
