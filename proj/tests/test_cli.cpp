#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "relkit/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = relkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("diagonal verb") {
  const Result r = run({"diagonal", th::fixture("chain4.rel"), "R"});
  CHECK(r.code == 0);
  const relkit::Document doc = relkit::parse_document(r.out);
  CHECK(doc.get("Delta").pairs() == std::vector<relkit::Rel::Pair>{{0, 1}, {1, 2}, {2, 3}});
  const Result dot = run({"diagonal", th::fixture("chain4.rel"), "R", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(contains(dot.out, "digraph"));
}

TEST_CASE("block-order verb") {
  const Result yes = run({"block-order", th::fixture("chain4.rel"), "R"});
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "block-ordered: true (3 blocks, linear)"));
  const relkit::Document doc = relkit::parse_document(yes.out);
  CHECK(doc.find("T") != nullptr);
  const Result no = run({"block-order", th::fixture("membership4.rel")});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "block-ordered: false"));
}

TEST_CASE("staircase verb") {
  const Result yes = run({"staircase", th::fixture("chain4.rel"), "Le"});
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "staircase: true (4/4 formulations agree)"));
  const Result no = run({"staircase", th::fixture("membership4.rel"), "in"});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "staircase: false"));
}

TEST_CASE("index, core and scc verbs") {
  const Result idx = run({"index", th::fixture("preorder.rel")});
  CHECK(idx.code == 0);
  CHECK(relkit::parse_document(idx.out).find("J") != nullptr);
  const Result core = run({"core", th::fixture("preorder.rel"), "T"});
  CHECK(core.code == 0);
  const relkit::Document cd = relkit::parse_document(core.out);
  CHECK(cd.get("C").rows() == 3);
  CHECK(cd.find("lambda") != nullptr);
  CHECK(cd.find("rho") != nullptr);
  const Result scc = run({"scc", th::fixture("graph.rel"), "G"});
  CHECK(scc.code == 0);
  CHECK(contains(scc.out, "# 3 strongly connected components"));
  const relkit::Document sd = relkit::parse_document(scc.out);
  CHECK(sd.get("A").pairs() == std::vector<relkit::Rel::Pair>{{0, 1}, {1, 2}});
  const Result dot = run({"scc", th::fixture("graph.rel"), "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(contains(dot.out, "subgraph \"cluster_e\""));
}

TEST_CASE("pair-algebra and iso verbs") {
  const Result pair = run({"pair-algebra", th::fixture("pair.rel"), "P", "leqAB", "leqGreek"});
  CHECK(pair.code == 1);
  CHECK(contains(pair.out, "pair-algebra: false"));
  const Result self = run({"pair-algebra", th::fixture("pair.rel"), "leqAB", "leqAB", "leqAB"});
  CHECK(self.code == 0);
  CHECK(contains(self.out, "pair-algebra: true"));
  const Result iso = run({"iso", th::fixture("iso.rel"), "R", "S"});
  CHECK(iso.code == 0);
  CHECK(contains(iso.out, "isomorphic: true"));
  const Result not_iso = run({"iso", th::fixture("iso.rel"), "R", "T"});
  CHECK(not_iso.code == 1);
  CHECK(contains(not_iso.out, "isomorphic: false"));
}

TEST_CASE("check-laws verb") {
  const Result ok = run({"check-laws", "staircase.", "--exhaustive", "2", "--budget", "10"});
  CHECK(ok.code == 0);
  std::istringstream lines(ok.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    CHECK(contains(line, "\"failures\":0"));
    ++n;
  }
  CHECK(n == 3);
  const Result text = run({"check-laws", "scc.idempotent", "--format", "text", "--budget", "5"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "scc.idempotent: "));
  CHECK(run({"check-laws", "no.such.law"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", th::fixture("chain4.rel")}).code == 2);
  CHECK(run({"diagonal"}).code == 2);
  CHECK(run({"iso", th::fixture("iso.rel"), "R"}).code == 2);
  CHECK(run({"staircase", th::fixture("chain4.rel"), "R", "--format", "dot"}).code == 2);
  CHECK(run({"diagonal", th::fixture("two.rel")}).code == 2);
  CHECK(run({"diagonal", th::fixture("chain4.rel"), "Nope"}).code == 2);
  const Result bad = run({"diagonal", th::fixture("bad.rel")});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "bad.rel:4:3: label 'c' not in carrier A"));
  const Result missing = run({"diagonal", "/nonexistent/x.rel"});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "cannot open"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output file option") {
  const std::string path = "relkit_cli_test_out.rel";
  CHECK(run({"diagonal", th::fixture("chain4.rel"), "R", "--out", path}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(relkit::parse_document(buf.str()).find("Delta") != nullptr);
  std::remove(path.c_str());
}
