#include <algorithm>
#include <limits>
#include <map>

#include <json.hpp>

#include "relkit/errors.hpp"
#include "relkit/laws.hpp"
#include "relkit/text_format.hpp"

namespace relkit {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t seed, std::string_view id, std::uint64_t i) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : id) h = (h ^ std::uint8_t(c)) * 0x100000001b3ULL;
  return splitmix(seed ^ splitmix(h ^ splitmix(i)));
}

std::vector<std::string> variables(const Law& law) {
  std::vector<std::string> vars;
  auto add = [&](const std::string& v) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  };
  for (const auto& p : law.params) {
    add(p.target);
    add(p.source);
  }
  return vars;
}

std::size_t var_index(const std::vector<std::string>& vars, const std::string& v) {
  return std::size_t(std::find(vars.begin(), vars.end(), v) - vars.begin());
}

// Earliest failure seen by any thread; ties resolved by index.
struct FirstFailure {
  std::uint64_t index = kNone;
  std::vector<Rel> instance;
  std::string note;

  void offer(std::uint64_t i, std::vector<Rel> inst, std::string why) {
#pragma omp critical(relkit_first_failure)
    if (i < index) {
      index = i;
      instance = std::move(inst);
      note = std::move(why);
    }
  }
};

struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t vacuous = 0;
};

template <class Make>
void run_space(const Law& law, std::uint64_t count, std::uint64_t base, Make make, Tally& tally,
               FirstFailure& first) {
  std::uint64_t fails = 0;
  std::uint64_t vac = 0;
  const auto n = std::int64_t(count);
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : fails, vac)
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<Rel> inst;
    Outcome out;
    try {
      inst = make(std::uint64_t(i));
      out = check_instance(law, inst);
    } catch (const std::exception& e) {
      out = {Verdict::fails, std::string("instance construction failed: ") + e.what()};
    }
    if (out.verdict == Verdict::vacuous) ++vac;
    if (out.verdict == Verdict::fails) {
      ++fails;
      first.offer(base + std::uint64_t(i), std::move(inst), std::move(out.note));
    }
  }
  tally.instances += count;
  tally.failures += fails;
  tally.vacuous += vac;
}

Rel random_param(const LawParam& p, Generator& gen, const Carrier& t, const Carrier& s) {
  if (p.make) return p.make(gen, t, s);
  if (!p.filter) return gen.relation(t, s);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Rel r = gen.relation(t, s);
    if (p.filter(r)) return r;
  }
  throw PreconditionError("no random " + p.name + " satisfies its filter");
}

void exhaustive_pass(const Law& law, const LawConfig& cfg, Tally& tally, FirstFailure& first,
                     std::uint64_t& shapes_skipped) {
  const auto vars = variables(law);
  const std::size_t lo = law.min_size;
  const std::size_t hi = std::min(cfg.exhaustive, law.max_size);
  if (lo > hi) return;
  std::vector<std::size_t> sizes(vars.size(), lo);
  const std::uint64_t cap = std::uint64_t{1} << std::min<std::size_t>(cfg.product_bits, 62);

  while (true) {
    std::vector<Carrier> carriers;
    for (std::size_t v = 0; v < vars.size(); ++v) carriers.push_back(Carrier::numbered(vars[v], sizes[v]));

    bool skip = false;
    std::uint64_t total = 1;
    std::vector<std::vector<std::uint64_t>> codes(law.params.size());
    for (std::size_t k = 0; k < law.params.size() && !skip; ++k) {
      const auto& p = law.params[k];
      const auto& t = carriers[var_index(vars, p.target)];
      const auto& s = carriers[var_index(vars, p.source)];
      if (t.size() * s.size() > kExhaustiveBits) {
        skip = true;
        break;
      }
      const std::uint64_t n = std::uint64_t{1} << (t.size() * s.size());
      for (std::uint64_t c = 0; c < n; ++c)
        if (!p.filter || p.filter(relation_from_code(t, s, c))) codes[k].push_back(c);
      total *= codes[k].size();
      if (law.params.size() > 1 && total > cap) skip = true;
    }
    if (skip) {
      ++shapes_skipped;
    } else if (total > 0) {
      auto make = [&](std::uint64_t i) {
        std::vector<Rel> inst;
        inst.reserve(law.params.size());
        for (std::size_t k = 0; k < law.params.size(); ++k) {
          const auto& p = law.params[k];
          const auto m = codes[k].size();
          inst.push_back(relation_from_code(carriers[var_index(vars, p.target)],
                                            carriers[var_index(vars, p.source)], codes[k][i % m]));
          i /= m;
        }
        return inst;
      };
      run_space(law, total, tally.instances, make, tally, first);
    }

    std::size_t v = 0;
    while (v < sizes.size() && sizes[v] == hi) sizes[v++] = lo;
    if (v == sizes.size()) break;
    ++sizes[v];
  }
}

void random_pass(const Law& law, const LawConfig& cfg, Tally& tally, FirstFailure& first) {
  const auto vars = variables(law);
  const std::size_t hi = std::min(cfg.random_max, law.max_size);
  if (law.min_size > hi) return;
  auto make = [&](std::uint64_t i) {
    Generator gen(instance_seed(cfg.seed, law.id, i));
    std::vector<Carrier> carriers;
    for (const auto& v : vars) carriers.push_back(gen.carrier(v, law.min_size, hi));
    if (law.sample) return law.sample(gen, carriers);
    std::vector<Rel> inst;
    for (const auto& p : law.params)
      inst.push_back(random_param(p, gen, carriers[var_index(vars, p.target)],
                                  carriers[var_index(vars, p.source)]));
    return inst;
  };
  run_space(law, cfg.budget, tally.instances, make, tally, first);
}

}  // namespace

Outcome check_instance(const Law& law, std::span<const Rel> instance) {
  if (instance.size() != law.params.size())
    return {Verdict::fails, "instance has " + std::to_string(instance.size()) + " relations, law takes " +
                                std::to_string(law.params.size())};
  try {
    return law.check(instance);
  } catch (const std::exception& e) {
    return {Verdict::fails, std::string("exception: ") + e.what()};
  }
}

std::string serialize_instance(const Law& law, std::span<const Rel> instance) {
  std::vector<NamedRel> named;
  for (std::size_t k = 0; k < instance.size() && k < law.params.size(); ++k)
    named.push_back({law.params[k].name, instance[k]});
  return write_document(named);
}

Outcome recheck(const Law& law, std::string_view instance_text) {
  const Document doc = parse_document(instance_text);
  std::vector<Rel> inst;
  for (const auto& p : law.params) inst.push_back(doc.get(p.name));
  return check_instance(law, inst);
}

LawSummary run_law(const Law& law, const LawConfig& cfg) {
  LawSummary s;
  s.law_id = law.id;
  s.module = law.module;
  Tally tally;
  FirstFailure first;

  if (cfg.exhaustive > 0 && !law.random_only) {
    if (law.fast) {
      FastRun fr = law.fast(cfg);
      tally.instances += fr.instances;
      tally.failures += fr.failures;
      if (fr.failures > 0) first.offer(0, std::move(fr.first_failure), std::move(fr.note));
    } else {
      exhaustive_pass(law, cfg, tally, first, s.shapes_skipped);
    }
  }
  if (cfg.budget > 0) random_pass(law, cfg, tally, first);

  s.instances = tally.instances;
  s.failures = tally.failures;
  s.vacuous = tally.vacuous;
  if (first.index != kNone) {
    LawReport r;
    r.law_id = law.id;
    r.passed = false;
    r.note = first.note;
    try {
      r.instance = serialize_instance(law, first.instance);
      r.counterexample = r.instance;
    } catch (const std::exception& e) {
      r.note += std::string(" (instance not serializable: ") + e.what() + ")";
    }
    s.first_failure = std::move(r);
  }
  return s;
}

const Law* find_law(std::string_view id) {
  for (const auto& law : law_registry())
    if (law.id == id) return &law;
  return nullptr;
}

std::vector<const Law*> select_laws(std::string_view filter) {
  std::vector<const Law*> out;
  if (const Law* exact = find_law(filter)) return {exact};
  for (const auto& law : law_registry())
    if (filter.empty() || filter == "all" || law.id.starts_with(filter) || law.module == filter)
      out.push_back(&law);
  return out;
}

std::vector<LawSummary> run_laws(std::string_view filter, const LawConfig& config) {
  std::vector<LawSummary> out;
  for (const Law* law : select_laws(filter)) out.push_back(run_law(*law, config));
  return out;
}

std::string to_json_line(const LawSummary& s) {
  nlohmann::ordered_json j;
  j["id"] = s.law_id;
  j["module"] = s.module;
  j["instances"] = s.instances;
  j["failures"] = s.failures;
  j["vacuous"] = s.vacuous;
  j["shapes_skipped"] = s.shapes_skipped;
  if (s.first_failure) {
    j["note"] = s.first_failure->note;
    j["counterexample"] = s.first_failure->counterexample.value_or("");
  }
  return j.dump();
}

}  // namespace relkit
