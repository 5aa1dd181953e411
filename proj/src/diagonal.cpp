#include "relkit/diagonal.hpp"

#include "relkit/residuals.hpp"

namespace relkit {

Rel diagonal(const Rel& r) { return meet(r, converse(sandwich(r, r, r))); }

}  // namespace relkit
