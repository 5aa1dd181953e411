#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relkit/rel.hpp"

namespace relkit {

/// Which element of each class becomes its representative, in carrier order.
enum class TieBreak { least, greatest };

/// Coreflexive index of a per: one representative per class.
/// Throws PreconditionError unless p is a per.
Rel per_index(const Rel& p, TieBreak tie = TieBreak::least);

/// A per exhibited as the kernel of a function: f˘∘f = per, f∘f˘ = f< = I.
struct Splitting {
  Rel per;
  /// Type C~A, where C holds one element per class.
  Rel f;
  Carrier carrier;
};

/// The carrier of representatives is named `name`, or "<A>/P" by default, and
/// takes its labels from the representatives.
Splitting split(const Rel& p, TieBreak tie = TieBreak::least, const std::string& name = {});

/// J∘R∘K for J, K the indexes of R's left and right per domains.
Rel rel_index(const Rel& r, TieBreak tie = TieBreak::least);

struct IndexClauses {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  bool all() const { return a && b && c && d; }
};

/// (a) J ⊆ R  (b) R<per∘J∘R>per = R  (c) J<∘R<per∘J< = J<  (d) J>∘R>per∘J> = J>
IndexClauses index_clauses(const Rel& j, const Rel& r);
/// Difunction variant: (b) reads R∘J˘∘R = R, (c)/(d) use R∘R˘ and R˘∘R.
IndexClauses difunction_index_clauses(const Rel& j, const Rel& r);
bool is_index(const Rel& j, const Rel& r);

/// R = f˘∘g with f, g functional onto a common block carrier.
struct DifunctionSplit {
  Rel f;
  Rel g;
  Carrier carrier;
};

/// Throws PreconditionError unless r is difunctional.
DifunctionSplit difunction_split(const Rel& r, TieBreak tie = TieBreak::least,
                                 const std::string& name = {});

/// core = λ∘R∘ρ˘ and R = λ˘∘core∘ρ.
struct CoreWitness {
  Rel core;
  Rel lambda;
  Rel rho;
};

CoreWitness core_of(const Rel& r, TieBreak tie = TieBreak::least);
/// Names of the witness conditions that fail; empty when all hold.
std::vector<std::string> core_violations(const CoreWitness& w, const Rel& r);

enum class IsoStatus { found, absent, unknown };

struct IsoResult {
  IsoStatus status = IsoStatus::absent;
  /// R.target ~ S.target, a bijection between the left domains.
  std::optional<Rel> phi;
  /// R.source ~ S.source, a bijection between the right domains.
  std::optional<Rel> psi;
};

/// Larger left or right domains make the search report `unknown`.
inline constexpr std::size_t kIsoDomainLimit = 10;

/// Backtracking search for φ, ψ with R = φ∘S∘ψ˘ that restrict to bijections
/// between the left (resp. right) domains of R and S.
IsoResult are_isomorphic(const Rel& r, const Rel& s);
bool is_iso_witness(const Rel& r, const Rel& s, const Rel& phi, const Rel& psi);

}  // namespace relkit
