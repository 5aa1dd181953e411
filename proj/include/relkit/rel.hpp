#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "relkit/bit_matrix.hpp"
#include "relkit/carrier.hpp"

namespace relkit {

/// A relation of type target ~ source: a boolean matrix whose rows are indexed
/// by the target carrier and whose columns are indexed by the source carrier.
/// Values are immutable; every operation returns a fresh relation.
class Rel {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  /// The empty relation of the given type.
  Rel(Carrier target, Carrier source);
  Rel(Carrier target, Carrier source, BitMatrix bits);

  static Rel bottom(const Carrier& target, const Carrier& source);
  static Rel top(const Carrier& target, const Carrier& source);
  static Rel identity(const Carrier& c);

  /// Builds from label pairs; throws Error naming an unknown label.
  static Rel make(const Carrier& target, const Carrier& source,
                  const std::vector<std::pair<std::string, std::string>>& pairs);
  /// Builds from index pairs; throws Error on an out-of-range index.
  static Rel from_pairs(const Carrier& target, const Carrier& source,
                        const std::vector<Pair>& pairs);

  template <class Pred>
  static Rel tabulate(const Carrier& target, const Carrier& source, Pred pred) {
    BitMatrix m(target.size(), source.size());
    for (std::size_t i = 0; i < target.size(); ++i)
      for (std::size_t j = 0; j < source.size(); ++j)
        if (pred(i, j)) m.set(i, j);
    return Rel(target, source, std::move(m));
  }

  const Carrier& target() const { return target_; }
  const Carrier& source() const { return source_; }
  std::size_t rows() const { return bits_.rows(); }
  std::size_t cols() const { return bits_.cols(); }
  bool homogeneous() const { return target_ == source_; }

  bool test(std::size_t i, std::size_t j) const { return bits_.test(i, j); }
  bool operator()(std::size_t i, std::size_t j) const { return bits_.test(i, j); }

  /// True for the bottom relation.
  bool is_empty() const { return bits_.none(); }
  std::size_t count() const { return bits_.count(); }
  std::vector<Pair> pairs() const;
  const BitMatrix& bits() const { return bits_; }

  /// Same bits over equal carriers (name and size).
  friend bool operator==(const Rel& a, const Rel& b) {
    return a.target_ == b.target_ && a.source_ == b.source_ && a.bits_ == b.bits_;
  }

  /// "A~B", used in diagnostics.
  std::string type_string() const;

 private:
  Carrier target_;
  Carrier source_;
  BitMatrix bits_;
};

/// a (R∘S) c iff a R b and b S c for some b.
Rel compose(const Rel& r, const Rel& s);

template <class... Rest>
Rel compose(const Rel& r, const Rel& s, const Rest&... rest) {
  return compose(compose(r, s), rest...);
}

Rel converse(const Rel& r);
Rel meet(const Rel& r, const Rel& s);
Rel join(const Rel& r, const Rel& s);
Rel negate(const Rel& r);
bool leq(const Rel& r, const Rel& s);
/// Least reflexive transitive relation containing r; r must be homogeneous.
Rel rtc(const Rel& r);
/// Transitive closure r∘rtc(r).
Rel tc(const Rel& r);

/// Throws TypeError unless r is homogeneous.
void require_homogeneous(const Rel& r, const char* op);

}  // namespace relkit
