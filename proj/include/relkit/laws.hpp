#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relkit/generators.hpp"
#include "relkit/law_report.hpp"
#include "relkit/rel.hpp"

namespace relkit {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

struct LawConfig {
  /// Largest carrier size enumerated exhaustively; 0 disables exhaustive mode.
  std::size_t exhaustive = 3;
  /// Multi-relation instance spaces larger than 2^product_bits per carrier-size
  /// assignment are not enumerated.
  std::size_t product_bits = 13;
  std::uint64_t seed = kDefaultSeed;
  /// Random instances per law.
  std::size_t budget = 200;
  /// Largest carrier size in randomized mode.
  std::size_t random_max = 6;
};

enum class Verdict { holds, fails, vacuous };

struct Outcome {
  Verdict verdict = Verdict::holds;
  std::string note;
};

/// One relation argument of a law. Carrier variables shared between
/// parameters receive the same carrier.
struct LawParam {
  std::string name;
  std::string target;
  std::string source;
  /// Exhaustive mode keeps only relations passing the filter.
  std::function<bool(const Rel&)> filter;
  /// Randomized mode; a plain random relation when empty.
  std::function<Rel(Generator&, const Carrier&, const Carrier&)> make;
};

/// Result of a specialised exhaustive pass.
struct FastRun {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  /// First failing instance, in parameter order.
  std::vector<Rel> first_failure;
  std::string note;
};

struct Law {
  std::string id;
  std::string module;
  std::string statement;
  std::vector<LawParam> params;
  std::size_t min_size = 0;
  std::size_t max_size = 64;
  bool random_only = false;
  std::function<Outcome(std::span<const Rel>)> check;
  /// Joint random instance, given carriers in order of first mention in
  /// params. Overrides the per-parameter generators.
  std::function<std::vector<Rel>(Generator&, std::span<const Carrier>)> sample;
  /// Replaces the generic exhaustive pass when set.
  std::function<FastRun(const LawConfig&)> fast;
};

struct LawSummary {
  std::string law_id;
  std::string module;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t vacuous = 0;
  /// Carrier-size assignments too large to enumerate.
  std::uint64_t shapes_skipped = 0;
  std::optional<LawReport> first_failure;
};

/// Every registered law, grouped by module in dependency order.
const std::vector<Law>& law_registry();
/// The law ids that must be registered.
const std::vector<std::string>& law_manifest();
/// Ids present in exactly one of registry and manifest.
std::vector<std::string> registry_mismatches();

const Law* find_law(std::string_view id);

/// "all", an exact id, or an id prefix such as "staircase.".
std::vector<const Law*> select_laws(std::string_view filter);

LawSummary run_law(const Law& law, const LawConfig& config);
/// Ordered by registry position; deterministic for a fixed config.
std::vector<LawSummary> run_laws(std::string_view filter, const LawConfig& config);

/// Evaluates a law on one serialized instance whose relations are named after
/// the law's parameters.
Outcome recheck(const Law& law, std::string_view instance_text);
Outcome check_instance(const Law& law, std::span<const Rel> instance);

/// Serializes an instance using the parameter names.
std::string serialize_instance(const Law& law, std::span<const Rel> instance);

/// One JSON object per line: id, module, instances, failures, vacuous and
/// the first counterexample if any.
std::string to_json_line(const LawSummary& s);

}  // namespace relkit
