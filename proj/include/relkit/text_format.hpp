#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relkit/carrier.hpp"
#include "relkit/rel.hpp"

// Plain-text relation files:
//
//   # comment
//   carrier A = a0 a1 a2
//   carrier B = b0 b1
//   rel R : A ~ B
//   a0 b1
//   a2 b0
//   end
//
// Tokens are separated by whitespace. A carrier declaration ends at the end
// of its line; a relation body is a sequence of label pairs closed by `end`.
namespace relkit {

struct NamedRel {
  std::string name;
  Rel rel;
};

struct Document {
  std::vector<Carrier> carriers;
  std::vector<NamedRel> relations;

  const Rel* find(std::string_view name) const;
  /// Throws Error if absent.
  const Rel& get(std::string_view name) const;
};

/// Throws ParseError with 1-based line and column.
Document parse_document(std::string_view text);
/// Throws Error if the file cannot be read, ParseError on bad content.
Document read_document(const std::string& path);

/// Serializes relations together with every carrier they mention. Throws
/// Error if two different carriers share a name.
std::string write_document(const std::vector<NamedRel>& relations);
std::string write_relation(const std::string& name, const Rel& r);

}  // namespace relkit
