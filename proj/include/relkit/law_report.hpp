#pragma once

#include <optional>
#include <string>

namespace relkit {

/// Outcome of checking one law on one instance.
struct LawReport {
  std::string law_id;
  /// The instance in the relation text format.
  std::string instance;
  bool passed = true;
  /// Set when the law could not be applied (untypable, premise false).
  bool skipped = false;
  /// On failure: a relation document that reproduces it.
  std::optional<std::string> counterexample;
  std::string note;
};

}  // namespace relkit
