#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relkit/rel.hpp"
#include "relkit/text_format.hpp"

namespace th {

inline relkit::Carrier chain(std::size_t n, const std::string& name = "N") {
  return relkit::Carrier::numbered(name, n);
}

inline relkit::Rel less(const relkit::Carrier& c) {
  return relkit::Rel::tabulate(c, c, [](std::size_t a, std::size_t b) { return a < b; });
}

inline relkit::Rel at_most(const relkit::Carrier& c) {
  return relkit::Rel::tabulate(c, c, [](std::size_t a, std::size_t b) { return a <= b; });
}

inline relkit::Rel pairs(const relkit::Carrier& t, const relkit::Carrier& s,
                         std::vector<std::pair<std::size_t, std::size_t>> ps) {
  return relkit::Rel::from_pairs(t, s, ps);
}

inline relkit::Rel coreflexive(const relkit::Carrier& c, std::vector<std::size_t> xs) {
  std::vector<std::pair<std::size_t, std::size_t>> ps;
  for (auto x : xs) ps.emplace_back(x, x);
  return relkit::Rel::from_pairs(c, c, ps);
}

inline std::string fixture(const std::string& name) { return std::string(RELKIT_FIXTURES) + "/" + name; }

inline relkit::Document load(const std::string& name) { return relkit::read_document(fixture(name)); }

}  // namespace th
