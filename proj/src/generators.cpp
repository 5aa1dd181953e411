#include "relkit/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "relkit/domains.hpp"
#include "relkit/errors.hpp"
#include "relkit/order_analysis.hpp"
#include "relkit/pair_algebra.hpp"

namespace relkit {

Rel relation_from_code(const Carrier& target, const Carrier& source, std::uint64_t code) {
  const std::size_t n = source.size();
  BitMatrix m(target.size(), n);
  while (code) {
    const int bit = std::countr_zero(code);
    code &= code - 1;
    const auto i = std::size_t(bit) / n;
    if (i >= target.size()) break;
    m.set(i, std::size_t(bit) % n);
  }
  return Rel(target, source, std::move(m));
}

std::uint64_t relation_code(const Rel& r) {
  if (r.rows() * r.cols() > 64)
    throw BudgetError("relation " + r.type_string() + " has more than 64 entries");
  std::uint64_t code = 0;
  for (auto [i, j] : r.pairs()) code |= std::uint64_t{1} << (i * r.cols() + j);
  return code;
}

RelationEnumerator::RelationEnumerator(Carrier target, Carrier source)
    : target_(std::move(target)), source_(std::move(source)) {
  bits_ = target_.size() * source_.size();
  if (bits_ > kExhaustiveBits)
    throw BudgetError("exhaustive enumeration of " + target_.describe() + "~" +
                      source_.describe() + " needs 2^" + std::to_string(bits_) +
                      " relations; use randomized mode");
}

RelationEnumerator enumerate_relations(const Carrier& target, const Carrier& source) {
  return RelationEnumerator(target, source);
}

Rel membership_relation(const Carrier& ground, const std::vector<std::uint32_t>& family,
                        const std::string& family_name) {
  std::vector<std::string> labels;
  labels.reserve(family.size());
  for (auto mask : family) {
    std::string s = "{";
    bool first = true;
    for (std::size_t x = 0; x < ground.size(); ++x) {
      if (!(mask >> x & 1u)) continue;
      if (!first) s += ',';
      s += ground.label(x);
      first = false;
    }
    labels.push_back(s + "}");
  }
  Carrier fam(family_name, std::move(labels));
  return Rel::tabulate(ground, fam, [&](std::size_t x, std::size_t k) { return (family[k] >> x & 1u) != 0; });
}

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::vector<std::size_t> Generator::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng_);
  return p;
}

std::vector<bool> Generator::subset(std::size_t n, double p) {
  std::vector<bool> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = coin(p);
  return s;
}

Carrier Generator::carrier(const std::string& name, std::size_t min_size, std::size_t max_size) {
  return Carrier::numbered(name, uniform(min_size, max_size));
}

Rel Generator::relation(const Carrier& target, const Carrier& source) {
  return relation(target, source, std::uniform_real_distribution<double>(0.1, 0.9)(rng_));
}

Rel Generator::relation(const Carrier& target, const Carrier& source, double density) {
  return Rel::tabulate(target, source, [&](std::size_t, std::size_t) { return coin(density); });
}

Rel Generator::coreflexive(const Carrier& c) {
  auto s = subset(c.size(), 0.6);
  return Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return i == j && s[i]; });
}

Rel Generator::per(const Carrier& c) {
  const std::size_t n = c.size();
  auto in = subset(n, 0.75);
  const std::size_t k = n == 0 ? 1 : uniform(1, n);
  std::vector<std::size_t> cls(n);
  for (auto& x : cls) x = uniform(0, k - 1);
  return Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return in[i] && in[j] && cls[i] == cls[j]; });
}

Rel Generator::preorder(const Carrier& c) {
  return rtc(relation(c, c, std::uniform_real_distribution<double>(0.05, 0.4)(rng_)));
}

Rel Generator::provisional_preorder(const Carrier& c) {
  const Rel p = coreflexive(c);
  return compose(p, preorder(c), p);
}

Rel Generator::provisional_ordering(const Carrier& c) {
  const std::size_t n = c.size();
  auto in = subset(n, 0.75);
  auto rank = permutation(n);
  const double d = std::uniform_real_distribution<double>(0.1, 0.7)(rng_);
  const Rel up = Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) {
    return in[i] && in[j] && rank[i] < rank[j] && coin(d);
  });
  const Rel p = Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return i == j && in[i]; });
  return compose(p, rtc(up), p);
}

Rel Generator::linear_preorder(const Carrier& c) {
  const std::size_t n = c.size();
  std::vector<std::size_t> rank(n);
  for (auto& x : rank) x = uniform(0, n == 0 ? 0 : n - 1);
  return Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return rank[i] <= rank[j]; });
}

Rel Generator::strict_linear_order(const Carrier& c) {
  auto pos = permutation(c.size());
  return Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return pos[i] < pos[j]; });
}

Rel Generator::functional(const Carrier& target, const Carrier& source) {
  BitMatrix m(target.size(), source.size());
  if (!target.empty())
    for (std::size_t a = 0; a < source.size(); ++a)
      if (coin(0.8)) m.set(uniform(0, target.size() - 1), a);
  return Rel(target, source, std::move(m));
}

Rel Generator::difunctional(const Carrier& a, const Carrier& b, const Carrier& blocks) {
  return compose(converse(functional(blocks, a)), functional(blocks, b));
}

BlockOrderedSample Generator::block_ordered(const Carrier& a, const Carrier& b, const Carrier& c) {
  const std::size_t k = uniform(0, std::min({a.size(), b.size(), c.size()}));
  // Blocks are the first k elements of a random arrangement of c.
  auto chosen = permutation(c.size());
  chosen.resize(k);
  std::vector<bool> used(c.size());
  for (auto x : chosen) used[x] = true;

  auto rank = permutation(c.size());
  const double d = std::uniform_real_distribution<double>(0.1, 0.8)(rng_);
  const Rel up = Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) {
    return used[i] && used[j] && rank[i] < rank[j] && coin(d);
  });
  const Rel p = Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return i == j && used[i]; });
  const Rel t = compose(p, rtc(up), p);

  // Every block gets at least one element on each side.
  auto onto = [&](const Carrier& x) {
    BitMatrix m(c.size(), x.size());
    auto order = permutation(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i < k)
        m.set(chosen[i], order[i]);
      else if (k > 0 && coin(0.6))
        m.set(chosen[uniform(0, k - 1)], order[i]);
    }
    return Rel(c, x, std::move(m));
  };
  Rel f = onto(a);
  Rel g = onto(b);
  Rel r = compose(converse(f), t, g);
  return {std::move(r), std::move(f), t, std::move(g)};
}

Rel Generator::membership(const Carrier& ground, std::size_t family_size) {
  const std::size_t n = ground.size();
  if (n > 20) throw BudgetError("membership: ground carrier too large");
  const std::uint64_t universe = std::uint64_t{1} << n;
  family_size = std::min<std::uint64_t>(family_size, universe);
  std::set<std::uint32_t> seen;
  std::vector<std::uint32_t> family;
  while (family.size() < family_size) {
    auto mask = std::uint32_t(uniform(0, universe - 1));
    if (seen.insert(mask).second) family.push_back(mask);
  }
  return membership_relation(ground, family);
}

Rel Generator::dense(const Carrier& c) {
  // Q∘p for a preorder Q is idempotent, so dense and transitive.
  if (coin(0.3)) return compose(preorder(c), coreflexive(c));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rel r = relation(c, c, std::uniform_real_distribution<double>(0.3, 0.95)(rng_));
    if (coin(0.5)) r = meet(r, negate(Rel::identity(c)));
    if (leq(r, compose(r, r))) return r;
  }
  return Rel::bottom(c, c);
}

Rel Generator::lattice_order(const Carrier& c) {
  const std::size_t n = c.size();
  if (n == 0) throw PreconditionError("lattice_order: empty carrier");
  const std::size_t u = std::min<std::size_t>(n - 1, 16);
  const std::uint32_t full = (std::uint32_t{1} << u) - 1;
  std::vector<std::uint32_t> sets;
  for (int attempt = 0; attempt < 200 && sets.size() != n; ++attempt) {
    std::set<std::uint32_t> family{full};
    while (family.size() < n) {
      std::set<std::uint32_t> next = family;
      next.insert(std::uint32_t(uniform(0, full)));
      for (bool grew = true; grew;) {
        grew = false;
        for (auto x : std::vector<std::uint32_t>(next.begin(), next.end()))
          for (auto y : std::vector<std::uint32_t>(next.begin(), next.end()))
            if (next.insert(x & y).second) grew = true;
      }
      if (next.size() > n) break;
      family = std::move(next);
    }
    if (family.size() == n) sets.assign(family.begin(), family.end());
  }
  if (sets.size() != n) {
    // A chain is always a closure system.
    sets.clear();
    for (std::size_t i = 0; i < n; ++i) sets.push_back((std::uint32_t{1} << i) - 1);
  }
  std::shuffle(sets.begin(), sets.end(), rng_);
  return Rel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return (sets[i] & ~sets[j]) == 0; });
}

Rel Generator::digraph(const Carrier& c) {
  return relation(c, c, std::uniform_real_distribution<double>(0.05, 0.5)(rng_));
}

namespace {

struct Kind {
  std::string name;
  std::size_t carriers;
};

const std::vector<Kind>& kinds() {
  static const std::vector<Kind> k{
      {"relation", 2},          {"coreflexive", 1},       {"per", 1},
      {"preorder", 1},          {"provisional_preorder", 1}, {"provisional_ordering", 1},
      {"linear_preorder", 1},   {"strict_linear_order", 1}, {"functional", 2},
      {"difunctional", 3},      {"block_ordered", 3},     {"membership", 1},
      {"dense", 1},             {"lattice", 1},           {"digraph", 1},
  };
  return k;
}

bool is_preorder(const Rel& r) {
  return leq(Rel::identity(r.target()), r) && is_transitive(r);
}

bool is_strict_linear(const Rel& r) {
  const Rel i = Rel::identity(r.target());
  return meet(r, i).is_empty() && is_transitive(r) &&
         join(join(r, converse(r)), i) == Rel::top(r.target(), r.source());
}

}  // namespace

const std::vector<std::string>& structured_kinds() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& k : kinds()) v.push_back(k.name);
    return v;
  }();
  return names;
}

Generated gen_structured(std::string_view kind, const std::vector<Carrier>& cs, std::uint64_t seed) {
  auto it = std::find_if(kinds().begin(), kinds().end(), [&](const Kind& k) { return k.name == kind; });
  if (it == kinds().end()) throw PreconditionError("unknown structured kind '" + std::string(kind) + "'");
  if (cs.size() != it->carriers)
    throw PreconditionError(std::string(kind) + " takes " + std::to_string(it->carriers) + " carrier(s)");

  Generator gen(seed);
  Generated out{Rel(cs[0], cs[0]), {}};
  bool ok = true;
  if (kind == "relation") {
    out.rel = gen.relation(cs[0], cs[1]);
  } else if (kind == "coreflexive") {
    out.rel = gen.coreflexive(cs[0]);
    ok = is_coreflexive(out.rel);
  } else if (kind == "per") {
    out.rel = gen.per(cs[0]);
    ok = is_per(out.rel);
  } else if (kind == "preorder") {
    out.rel = gen.preorder(cs[0]);
    ok = is_preorder(out.rel);
  } else if (kind == "provisional_preorder") {
    out.rel = gen.provisional_preorder(cs[0]);
    ok = is_provisional_preorder(out.rel);
  } else if (kind == "provisional_ordering") {
    out.rel = gen.provisional_ordering(cs[0]);
    ok = is_provisional_ordering(out.rel);
  } else if (kind == "linear_preorder") {
    out.rel = gen.linear_preorder(cs[0]);
    ok = is_preorder(out.rel) &&
         join(out.rel, converse(out.rel)) == Rel::top(cs[0], cs[0]);
  } else if (kind == "strict_linear_order") {
    out.rel = gen.strict_linear_order(cs[0]);
    ok = is_strict_linear(out.rel);
  } else if (kind == "functional") {
    out.rel = gen.functional(cs[0], cs[1]);
    ok = is_functional(out.rel);
  } else if (kind == "difunctional") {
    Rel f = gen.functional(cs[2], cs[0]);
    Rel g = gen.functional(cs[2], cs[1]);
    out.rel = compose(converse(f), g);
    out.parts = {std::move(f), std::move(g)};
    ok = is_difunctional(out.rel);
  } else if (kind == "block_ordered") {
    auto s = gen.block_ordered(cs[0], cs[1], cs[2]);
    BlockOrderDecomposition d{s.f, s.t, s.g, cs[2], is_linear_provisional_ordering(s.t)};
    ok = decomposition_violations(d, s.r).empty();
    out.rel = s.r;
    out.parts = {s.f, s.t, s.g};
  } else if (kind == "membership") {
    const std::size_t n = cs[0].size();
    const std::size_t cap = n >= 5 ? 32 : (std::size_t{1} << n);
    out.rel = gen.membership(cs[0], gen.uniform(1, cap));
  } else if (kind == "dense") {
    out.rel = gen.dense(cs[0]);
    ok = leq(out.rel, compose(out.rel, out.rel));
  } else if (kind == "lattice") {
    out.rel = gen.lattice_order(cs[0]);
    ok = cs[0].size() > kLatticeLimit || is_complete_lattice(out.rel);
  } else if (kind == "digraph") {
    out.rel = gen.digraph(cs[0]);
  }
  if (!ok) throw LawViolation("generated " + std::string(kind) + " fails its defining predicate");
  return out;
}

}  // namespace relkit
