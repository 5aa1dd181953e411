#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "relkit/rel.hpp"

// Galois connections between finite complete lattices, given as relations.
// An order relation relates x to y iff x ⊑ y.
namespace relkit {

/// Complete-lattice checks enumerate every subset, so carriers are capped.
inline constexpr std::size_t kLatticeLimit = 12;

/// Reflexive, antisymmetric, transitive.
bool is_partial_order(const Rel& order);
/// Greatest lower bound of the elements flagged in `subset`, if any.
std::optional<std::size_t> infimum(const Rel& order, std::uint32_t subset);
std::optional<std::size_t> supremum(const Rel& order, std::uint32_t subset);
/// Every subset has an infimum. Throws PreconditionError above kLatticeLimit.
bool is_complete_lattice(const Rel& order);

/// ∀a,b: a R b ≡ F.a ⊑ b, with F.a the infimum of {b : a R b}.
bool represented_by_infimum(const Rel& r, const Rel& order_b);
/// Every fiber b ↦ a R b preserves all infima (the empty one included).
bool fibers_inf_preserving(const Rel& r, const Rel& order_b);

/// F : B~A, total and functional, with a R b ≡ F.a ⊑ b; absent if no such F.
/// Throws PreconditionError unless order_b makes the source of r a complete
/// lattice.
std::optional<Rel> lower_adjoint(const Rel& r, const Rel& order_b);
/// G : A~B with a R b ≡ a ⊑ G.b; absent if no such G.
std::optional<Rel> upper_adjoint(const Rel& r, const Rel& order_a);
bool is_pair_algebra(const Rel& r, const Rel& order_a, const Rel& order_b);

}  // namespace relkit
