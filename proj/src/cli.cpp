#include "relkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "relkit/diagonal.hpp"
#include "relkit/domains.hpp"
#include "relkit/dot.hpp"
#include "relkit/errors.hpp"
#include "relkit/graph_condense.hpp"
#include "relkit/index_core.hpp"
#include "relkit/laws.hpp"
#include "relkit/order_analysis.hpp"
#include "relkit/pair_algebra.hpp"
#include "relkit/text_format.hpp"

namespace relkit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string verb;
  std::vector<std::string> args;
  std::string format = "text";
  std::string out_path;
  std::size_t exhaustive = LawConfig{}.exhaustive;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = LawConfig{}.budget;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Result {
  int status = ok;
  std::string text;
};

const std::vector<std::string> kVerbs{"diagonal", "block-order", "staircase", "index", "core",
                                      "scc",      "pair-algebra", "check-laws", "iso"};

// Positional arguments after the verb: {min, max}.
std::pair<std::size_t, std::size_t> arity(const std::string& verb) {
  if (verb == "check-laws") return {0, 1};
  if (verb == "pair-algebra") return {4, 4};
  if (verb == "iso") return {3, 3};
  return {1, 2};
}

const Rel& pick(const Document& doc, const std::vector<std::string>& args, std::size_t at) {
  if (args.size() > at) return doc.get(args[at]);
  if (doc.relations.size() != 1)
    throw UsageError("file has " + std::to_string(doc.relations.size()) + " relations; name one");
  return doc.relations.front().rel;
}

std::string relation_name(const Document& doc, const std::vector<std::string>& args, std::size_t at) {
  return args.size() > at ? args[at] : doc.relations.front().name;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format " + o.format + " is not available for " + o.verb);
}

std::string dump(const json& j) { return j.dump() + "\n"; }

Result diagonal_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "dot", "report"});
  const Rel& r = pick(doc, o.args, 1);
  const Rel d = diagonal(r);
  const std::string name = relation_name(doc, o.args, 1);
  if (o.format == "dot") return {ok, emit_dot(d, "diagonal")};
  if (o.format == "report")
    return {ok, dump({{"verb", o.verb}, {"relation", name}, {"pairs", d.count()}, {"difunctional", is_difunctional(d)}})};
  return {ok, "# diagonal of " + name + "\n" + write_document({{"Delta", d}})};
}

Result block_order_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "dot", "report"});
  const Rel& r = pick(doc, o.args, 1);
  const auto d = block_decompose(r);
  if (o.format == "report") {
    json j{{"verb", o.verb}, {"relation", relation_name(doc, o.args, 1)}, {"block_ordered", d.has_value()}};
    if (d) {
      j["blocks"] = d->carrier.size();
      j["linear"] = d->linear;
    }
    return {d ? ok : negative, dump(j)};
  }
  if (!d) return {negative, "block-ordered: false\n"};
  if (o.format == "dot") return {ok, emit_dot(*d)};
  std::ostringstream s;
  s << "# block-ordered: true (" << d->carrier.size() << " blocks" << (d->linear ? ", linear" : "") << ")\n"
    << write_document({{"f", d->f}, {"T", d->t}, {"g", d->g}});
  return {ok, s.str()};
}

Result staircase_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "report"});
  const Rel& r = pick(doc, o.args, 1);
  const bool sc = is_staircase(r);
  if (o.format == "report")
    return {sc ? ok : negative, dump({{"verb", o.verb}, {"relation", relation_name(doc, o.args, 1)}, {"staircase", sc}})};
  return {sc ? ok : negative,
          std::string("staircase: ") + (sc ? "true" : "false") + " (" + (sc ? "4/4" : "0/4") +
              " formulations " + (sc ? "agree" : "hold") + ")\n"};
}

Result index_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "dot", "report"});
  const Rel& r = pick(doc, o.args, 1);
  const Rel j = rel_index(r);
  if (o.format == "dot") return {ok, emit_dot(j, "index")};
  if (o.format == "report")
    return {ok, dump({{"verb", o.verb}, {"relation", relation_name(doc, o.args, 1)}, {"pairs", j.count()}})};
  return {ok, "# index of " + relation_name(doc, o.args, 1) + "\n" + write_document({{"J", j}})};
}

Result core_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "dot", "report"});
  const Rel& r = pick(doc, o.args, 1);
  const CoreWitness w = core_of(r);
  if (o.format == "dot") return {ok, emit_dot(w.core, "core")};
  if (o.format == "report")
    return {ok, dump({{"verb", o.verb},
                      {"relation", relation_name(doc, o.args, 1)},
                      {"rows", w.core.rows()},
                      {"cols", w.core.cols()},
                      {"pairs", w.core.count()}})};
  return {ok, "# core of " + relation_name(doc, o.args, 1) + "\n" +
                  write_document({{"C", w.core}, {"lambda", w.lambda}, {"rho", w.rho}})};
}

Result scc_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "dot", "report"});
  const Rel& g = pick(doc, o.args, 1);
  const CondensationResult c = condense(g);
  if (o.format == "dot") return {ok, emit_dot(c)};
  if (o.format == "report")
    return {ok, dump({{"verb", o.verb}, {"relation", relation_name(doc, o.args, 1)}, {"components", c.components}})};
  std::ostringstream s;
  s << "# " << c.components.size() << " strongly connected components\n";
  for (const auto& comp : c.components) {
    s << "#";
    for (const auto& label : comp) s << ' ' << label;
    s << '\n';
  }
  s << write_document({{"sc", c.sc}, {"A", c.a}});
  return {ok, s.str()};
}

Result pair_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "report"});
  const Rel& r = doc.get(o.args[1]);
  const Rel& oa = doc.get(o.args[2]);
  const Rel& ob = doc.get(o.args[3]);
  const auto lower = lower_adjoint(r, ob);
  const auto upper = upper_adjoint(r, oa);
  const bool pa = lower && upper;
  if (o.format == "report")
    return {pa ? ok : negative,
            dump({{"verb", o.verb}, {"lower_adjoint", lower.has_value()}, {"upper_adjoint", upper.has_value()}, {"pair_algebra", pa}})};
  std::ostringstream s;
  s << "pair-algebra: " << (pa ? "true" : "false") << "\n# lower adjoint: " << (lower ? "yes" : "none")
    << "\n# upper adjoint: " << (upper ? "yes" : "none") << "\n";
  std::vector<NamedRel> rels;
  if (lower) rels.push_back({"F", *lower});
  if (upper) rels.push_back({"G", *upper});
  if (!rels.empty()) s << write_document(rels);
  return {pa ? ok : negative, s.str()};
}

Result iso_cmd(const Options& o, const Document& doc) {
  require_format(o, {"text", "report"});
  const Rel& r = doc.get(o.args[1]);
  const Rel& s = doc.get(o.args[2]);
  const IsoResult res = are_isomorphic(r, s);
  const char* status = res.status == IsoStatus::found ? "true" : res.status == IsoStatus::absent ? "false" : "unknown";
  const int code = res.status == IsoStatus::found ? ok : negative;
  if (o.format == "report") return {code, dump({{"verb", o.verb}, {"isomorphic", status}})};
  std::string text = std::string("isomorphic: ") + status;
  if (res.status == IsoStatus::unknown)
    text += " (a domain exceeds " + std::to_string(kIsoDomainLimit) + " elements)";
  text += "\n";
  if (res.status == IsoStatus::found) text += write_document({{"phi", *res.phi}, {"psi", *res.psi}});
  return {code, text};
}

Result check_laws_cmd(const Options& o) {
  require_format(o, {"text", "report"});
  std::ostringstream s;
  int code = ok;
  for (const auto& id : registry_mismatches()) {
    s << "# registry mismatch: " << id << "\n";
    code = violation;
  }
  const std::string filter = o.args.empty() ? "all" : o.args[0];
  const auto laws = select_laws(filter);
  if (laws.empty()) throw UsageError("no law matches '" + filter + "'");
  LawConfig cfg;
  cfg.exhaustive = o.exhaustive;
  cfg.seed = o.seed;
  cfg.budget = o.budget;
  std::uint64_t failures = 0;
  for (const Law* law : laws) {
    const LawSummary sum = run_law(*law, cfg);
    failures += sum.failures;
    if (o.format == "report") {
      s << to_json_line(sum) << "\n";
    } else {
      s << sum.law_id << ": " << sum.instances << " instances, " << sum.failures << " failures";
      if (sum.vacuous) s << ", " << sum.vacuous << " vacuous";
      s << "\n";
      if (sum.first_failure) s << "# " << sum.first_failure->note << "\n" << sum.first_failure->instance;
    }
  }
  if (failures > 0) code = violation;
  return {code, s.str()};
}

Result dispatch(const Options& o) {
  if (o.verb == "check-laws") return check_laws_cmd(o);
  const Document doc = read_document(o.args[0]);
  if (o.verb == "diagonal") return diagonal_cmd(o, doc);
  if (o.verb == "block-order") return block_order_cmd(o, doc);
  if (o.verb == "staircase") return staircase_cmd(o, doc);
  if (o.verb == "index") return index_cmd(o, doc);
  if (o.verb == "core") return core_cmd(o, doc);
  if (o.verb == "scc") return scc_cmd(o, doc);
  if (o.verb == "pair-algebra") return pair_cmd(o, doc);
  return iso_cmd(o, doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Relation-algebraic analysis of finite relations", "relkit"};
  app.add_option("verb", o.verb, "diagonal | block-order | staircase | index | core | scc | pair-algebra | iso | check-laws")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("args", o.args, "relation file, then relation names (check-laws: optional law filter)");
  app.add_option("--format", o.format, "text, dot or report")->check(CLI::IsMember({"text", "dot", "report"}));
  app.add_option("--out", o.out_path, "write output here instead of stdout");
  app.add_option("--exhaustive", o.exhaustive, "largest carrier enumerated exhaustively (check-laws)")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "random seed (check-laws)")->capture_default_str();
  app.add_option("--budget", o.budget, "random instances per law (check-laws)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  if (o.verb == "check-laws" && !app.count("--format")) o.format = "report";

  const auto [lo, hi] = arity(o.verb);
  if (o.args.size() < lo || o.args.size() > hi) {
    err << "relkit " << o.verb << ": expected " << lo;
    if (hi != lo) err << " to " << hi;
    err << " positional arguments, got " << o.args.size() << "\n";
    return usage;
  }

  Result res;
  try {
    res = dispatch(o);
  } catch (const ParseError& e) {
    err << "relkit: " << o.args[0] << ":" << e.what() << "\n";
    return usage;
  } catch (const LawViolation& e) {
    err << "relkit: law violation: " << e.what() << "\n";
    return violation;
  } catch (const std::exception& e) {
    err << "relkit: " << e.what() << "\n";
    return usage;
  }

  if (o.out_path.empty()) {
    out << res.text;
  } else {
    std::ofstream f(o.out_path);
    if (!(f << res.text)) {
      err << "relkit: cannot write " << o.out_path << "\n";
      return usage;
    }
  }
  return res.status;
}

}  // namespace relkit::cli
