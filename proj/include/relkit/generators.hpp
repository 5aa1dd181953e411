#pragma once

#include <cstdint>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "relkit/rel.hpp"

namespace relkit {

/// Exhaustive enumeration is limited to relations of at most this many bits.
inline constexpr std::size_t kExhaustiveBits = 16;

/// Relation whose pair (i, j) is present iff bit i*cols + j of code is set.
Rel relation_from_code(const Carrier& target, const Carrier& source, std::uint64_t code);
/// Inverse of relation_from_code; throws BudgetError beyond 64 bits.
std::uint64_t relation_code(const Rel& r);

/// All 2^(m·n) relations of one type, in increasing code order.
class RelationEnumerator {
 public:
  /// Throws BudgetError when m·n exceeds kExhaustiveBits.
  RelationEnumerator(Carrier target, Carrier source);

  std::uint64_t size() const { return std::uint64_t{1} << bits_; }
  Rel at(std::uint64_t code) const { return relation_from_code(target_, source_, code); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Rel;
    using difference_type = std::ptrdiff_t;

    iterator(const RelationEnumerator* e, std::uint64_t code) : e_(e), code_(code) {}
    Rel operator*() const { return e_->at(code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

   private:
    const RelationEnumerator* e_;
    std::uint64_t code_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  Carrier target_;
  Carrier source_;
  std::size_t bits_;
};

RelationEnumerator enumerate_relations(const Carrier& target, const Carrier& source);

/// `in : X ~ S` for a family of subsets of X given as bit masks. The family
/// carrier is labelled by set notation, e.g. "{a,c}".
Rel membership_relation(const Carrier& ground, const std::vector<std::uint32_t>& family,
                        const std::string& family_name = "S");

struct BlockOrderedSample {
  Rel r;
  Rel f;
  Rel t;
  Rel g;
};

/// Seeded source of random relations with prescribed structure.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  /// Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin(double p);

  Carrier carrier(const std::string& name, std::size_t min_size, std::size_t max_size);

  /// Density itself drawn uniformly from [0.1, 0.9].
  Rel relation(const Carrier& target, const Carrier& source);
  Rel relation(const Carrier& target, const Carrier& source, double density);
  Rel coreflexive(const Carrier& c);
  Rel per(const Carrier& c);
  Rel preorder(const Carrier& c);
  Rel provisional_preorder(const Carrier& c);
  Rel provisional_ordering(const Carrier& c);
  /// a R b iff rank(a) ≤ rank(b) for random ranks.
  Rel linear_preorder(const Carrier& c);
  /// a R b iff a precedes b in a random permutation.
  Rel strict_linear_order(const Carrier& c);
  /// Partial function from source to target: f∘f˘ ⊆ I.
  Rel functional(const Carrier& target, const Carrier& source);
  /// f˘∘g for random functionals onto a block carrier.
  Rel difunctional(const Carrier& a, const Carrier& b, const Carrier& blocks);
  /// R = f˘∘T∘g with T a provisional ordering on (part of) c and f, g
  /// functional onto its domain.
  BlockOrderedSample block_ordered(const Carrier& a, const Carrier& b, const Carrier& c);
  /// Membership in a family of distinct random subsets of ground.
  Rel membership(const Carrier& ground, std::size_t family_size);
  /// Homogeneous R with R ⊆ R∘R.
  Rel dense(const Carrier& c);
  /// Inclusion order of a random closure system: a finite complete lattice.
  /// c must be nonempty.
  Rel lattice_order(const Carrier& c);
  Rel digraph(const Carrier& c);

 private:
  std::vector<std::size_t> permutation(std::size_t n);
  std::vector<bool> subset(std::size_t n, double p);

  std::mt19937_64 rng_;
};

struct Generated {
  Rel rel;
  /// Construction witnesses: {f, g} for difunctional, {f, T, g} for
  /// block_ordered, empty otherwise.
  std::vector<Rel> parts;
};

/// Generates an object of the named kind over the given carriers and checks
/// its defining predicate. Throws PreconditionError for an unknown kind or a
/// wrong number of carriers.
Generated gen_structured(std::string_view kind, const std::vector<Carrier>& carriers, std::uint64_t seed);
const std::vector<std::string>& structured_kinds();

}  // namespace relkit
