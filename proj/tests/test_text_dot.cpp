#include <doctest.h>

#include <algorithm>
#include <string>

#include "helpers.hpp"
#include "relkit/dot.hpp"
#include "relkit/errors.hpp"
#include "relkit/generators.hpp"
#include "relkit/graph_condense.hpp"
#include "relkit/order_analysis.hpp"

using namespace relkit;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column, const std::string& part) {
  try {
    parse_document(text);
    FAIL("no error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK(std::string(e.what()).find(part) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("documents round-trip") {
  Generator gen(61);
  for (int i = 0; i < 200; ++i) {
    const Carrier a = gen.carrier("A", 0, 6), b = gen.carrier("B", 0, 6);
    const Rel r = gen.relation(a, b), s = gen.relation(b, b);
    const std::string text = write_document({{"R", r}, {"S", s}});
    const Document doc = parse_document(text);
    REQUIRE(doc.relations.size() == 2);
    CHECK(doc.get("R") == r);
    CHECK(doc.get("S") == s);
    CHECK(doc.get("R").target().labels() == a.labels());
    CHECK(write_document(doc.relations) == text);
  }
}

TEST_CASE("parser accepts comments and blank lines") {
  const Document doc = parse_document(
      "# heading\n\ncarrier A = x y   # trailing\ncarrier B = p\nrel R : A ~ B\n  y p\nend\n");
  CHECK(doc.carriers.size() == 2);
  CHECK(doc.get("R") == Rel::make(doc.carriers[0], doc.carriers[1], {{"y", "p"}}));
  CHECK(doc.find("Q") == nullptr);
  CHECK_THROWS_AS(doc.get("Q"), Error);
}

TEST_CASE("a label may be spelled end") {
  const Carrier a("A", {"end", "x"});
  const Rel r = th::pairs(a, a, {{1, 0}, {0, 0}});
  const Document doc = parse_document(write_document({{"R", r}}));
  CHECK(doc.get("R") == r);
  CHECK(parse_document("carrier A = end\nrel R : A ~ A\nend\n").get("R").is_empty());
}

TEST_CASE("parse errors carry positions") {
  expect_parse_error("carrier A = x y\nrel R : A ~ A\nx y\nx c\nend\n", 4, 3, "label 'c' not in carrier A");
  expect_parse_error("carrier A = x\nrel R : A ~ B\nend\n", 2, 13, "B");
  expect_parse_error("carrier A = x\nrel R : A ~ A\nx x\n", 3, 4, "end");
  expect_parse_error("carrier A = x x\n", 1, 15, "x");
  expect_parse_error("relation R\n", 1, 1, "expected 'carrier' or 'rel'");
  CHECK_THROWS_AS(read_document(th::fixture("missing.rel")), Error);
  try {
    th::load("bad.rel");
    FAIL("bad.rel parsed");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("dot for plain relations") {
  const Carrier n = th::chain(3);
  const std::string empty = emit_dot(Rel::bottom(n, n));
  CHECK(count(empty, "->") == 0);
  CHECK(count(empty, "[label=") == 3);
  const std::string less = emit_dot(th::less(n), "lt");
  CHECK(less.rfind("digraph \"lt\" {", 0) == 0);
  CHECK(count(less, "->") == 3);
  const std::string bip = emit_dot(Rel::top(n, th::chain(2, "M")));
  CHECK(count(bip, "->") == 6);
  CHECK(count(bip, "\"s:") == 2 + 6);
}

TEST_CASE("dot for condensations and block orderings") {
  const Carrier n = th::chain(2);
  const std::string cycle = emit_dot(condense(th::pairs(n, n, {{0, 1}, {1, 0}})));
  CHECK(count(cycle, "subgraph") == 1);
  CHECK(count(cycle, "->") == 0);
  const std::string graph = emit_dot(condense(th::load("graph.rel").get("G")));
  CHECK(count(graph, "subgraph") == 3);
  CHECK(count(graph, "->") == 2);
  const auto d = block_decompose(th::less(th::chain(4)));
  REQUIRE(d.has_value());
  const std::string blocks = emit_dot(*d);
  CHECK(count(blocks, "subgraph") == 3);
  CHECK(count(blocks, "\"block:0\" -> \"block:1\"") == 1);
  CHECK(count(blocks, "\"block:1\" -> \"block:2\"") == 1);
  CHECK(count(blocks, "[dir=none]") == 3);
  CHECK(count(blocks, "->") == 5);
}
