#include "relkit/index_core.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "relkit/domains.hpp"
#include "relkit/errors.hpp"

namespace relkit {
namespace {

std::vector<std::size_t> visit_order(std::size_t n, TieBreak tie) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (tie == TieBreak::greatest) std::reverse(order.begin(), order.end());
  return order;
}

void require_same_type(const Rel& j, const Rel& r, const char* op) {
  if (!(j.target() == r.target()) || !(j.source() == r.source()))
    throw TypeError(std::string(op) + ": types differ (" + j.type_string() + " vs " + r.type_string() + ")");
}

}  // namespace

Rel per_index(const Rel& p, TieBreak tie) {
  if (!is_per(p)) throw PreconditionError("per_index: relation is not a per");
  const std::size_t n = p.rows();
  std::vector<bool> covered(n, false);
  BitMatrix j(n, n);
  for (std::size_t a : visit_order(n, tie)) {
    if (covered[a] || !p(a, a)) continue;
    j.set(a, a);
    for (std::size_t b = 0; b < n; ++b)
      if (p(a, b)) covered[b] = true;
  }
  Rel jr(p.target(), p.source(), std::move(j));
  if (!leq(jr, ldom(p)) || !(compose(jr, p, jr) == jr) || !(compose(p, jr, p) == p))
    throw LawViolation("per_index: selected representatives do not form an index");
  return jr;
}

Splitting split(const Rel& p, TieBreak tie, const std::string& name) {
  Rel j = per_index(p, tie);
  std::vector<std::size_t> reps;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < j.rows(); ++a)
    if (j(a, a)) {
      reps.push_back(a);
      labels.push_back(p.target().label(a));
    }
  Carrier c(name.empty() ? p.target().name() + "/P" : name, std::move(labels));
  Rel f = Rel::tabulate(c, p.source(), [&](std::size_t k, std::size_t a) { return p(reps[k], a); });
  if (!(compose(converse(f), f) == p) || !(compose(f, converse(f)) == Rel::identity(c)))
    throw LawViolation("split: f˘∘f = P or f∘f˘ = I fails");
  return {p, std::move(f), std::move(c)};
}

Rel rel_index(const Rel& r, TieBreak tie) {
  return compose(per_index(per_ldom(r), tie), r, per_index(per_rdom(r), tie));
}

IndexClauses index_clauses(const Rel& j, const Rel& r) {
  require_same_type(j, r, "index_clauses");
  const Rel pl = per_ldom(r);
  const Rel pr = per_rdom(r);
  const Rel jl = ldom(j);
  const Rel jr = rdom(j);
  IndexClauses c;
  c.a = leq(j, r);
  c.b = compose(pl, j, pr) == r;
  c.c = compose(jl, pl, jl) == jl;
  c.d = compose(jr, pr, jr) == jr;
  return c;
}

IndexClauses difunction_index_clauses(const Rel& j, const Rel& r) {
  require_same_type(j, r, "difunction_index_clauses");
  const Rel rc = converse(r);
  const Rel jl = ldom(j);
  const Rel jr = rdom(j);
  IndexClauses c;
  c.a = leq(j, r);
  c.b = compose(r, converse(j), r) == r;
  c.c = compose(jl, r, rc, jl) == jl;
  c.d = compose(jr, rc, r, jr) == jr;
  return c;
}

bool is_index(const Rel& j, const Rel& r) { return index_clauses(j, r).all(); }

DifunctionSplit difunction_split(const Rel& r, TieBreak tie, const std::string& name) {
  const DifunctionalBattery battery = difunctional_battery(r);
  if (!battery.consistent())
    throw LawViolation("difunction_split: difunctionality characterizations disagree");
  if (!battery.all()) throw PreconditionError("difunction_split: relation is not difunctional");
  Splitting s = split(per_ldom(r), tie, name);
  Rel g = compose(s.f, r);
  const Rel ff = compose(s.f, converse(s.f));
  const Rel gg = compose(g, converse(g));
  if (!(compose(converse(s.f), g) == r) || !is_functional(s.f) || !is_functional(g) ||
      !(ff == ldom(s.f)) || !(ff == gg) || !(gg == ldom(g)))
    throw LawViolation("difunction_split: R = f˘∘g or the functionality conditions fail");
  return {std::move(s.f), std::move(g), std::move(s.carrier)};
}

std::vector<std::string> core_violations(const CoreWitness& w, const Rel& r) {
  std::vector<std::string> bad;
  const Rel& l = w.lambda;
  const Rel& p = w.rho;
  const Rel& c = w.core;
  auto check = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  check(per_ldom(r) == compose(converse(l), l), "R<per = λ˘∘λ");
  check(ldom(l) == compose(l, converse(l)), "λ< = λ∘λ˘");
  check(per_rdom(r) == compose(converse(p), p), "R>per = ρ˘∘ρ");
  check(ldom(p) == compose(p, converse(p)), "ρ< = ρ∘ρ˘");
  check(c == compose(l, r, converse(p)), "C = λ∘R∘ρ˘");
  check(r == compose(converse(l), c, p), "R = λ˘∘C∘ρ");
  check(ldom(r) == rdom(l), "R< = λ>");
  check(ldom(c) == ldom(l), "C< = λ<");
  check(rdom(r) == rdom(p), "R> = ρ>");
  check(rdom(c) == ldom(p), "C> = ρ<");
  check(ldom(c) == per_ldom(c) && rdom(c) == per_rdom(c), "core relation");
  return bad;
}

CoreWitness core_of(const Rel& r, TieBreak tie) {
  Rel lambda = split(per_ldom(r), tie, r.target().name() + "/left").f;
  Rel rho = split(per_rdom(r), tie, r.source().name() + "/right").f;
  Rel core = compose(lambda, r, converse(rho));
  CoreWitness w{std::move(core), std::move(lambda), std::move(rho)};
  auto bad = core_violations(w, r);
  if (!bad.empty()) throw LawViolation("core_of: witness condition fails: " + bad.front());
  return w;
}

bool is_iso_witness(const Rel& r, const Rel& s, const Rel& phi, const Rel& psi) {
  if (!(phi.target() == r.target()) || !(phi.source() == s.target()) ||
      !(psi.target() == r.source()) || !(psi.source() == s.source()))
    return false;
  return compose(phi, converse(phi)) == ldom(r) && compose(converse(phi), phi) == ldom(s) &&
         compose(psi, converse(psi)) == rdom(r) && compose(converse(psi), psi) == rdom(s) &&
         r == compose(phi, s, converse(psi));
}

namespace {

struct IsoSearch {
  const Rel& r;
  const Rel& s;
  std::vector<std::size_t> r_rows, s_rows, r_cols, s_cols;
  std::vector<std::size_t> assigned;
  std::vector<bool> used;
  std::vector<std::uint32_t> r_sig, s_sig;

  static std::vector<std::size_t> row_domain(const Rel& x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.rows(); ++i)
      if (!x.bits().row_empty(i)) out.push_back(i);
    return out;
  }

  static std::vector<std::size_t> col_domain(const Rel& x) {
    std::vector<std::size_t> out;
    const Rel d = rdom(x);
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (d(j, j)) out.push_back(j);
    return out;
  }

  std::size_t row_degree(const Rel& x, std::size_t i) const {
    std::size_t n = 0;
    for (std::size_t j = 0; j < x.cols(); ++j) n += x(i, j) ? 1 : 0;
    return n;
  }

  bool signatures_match() const {
    auto a = r_sig;
    auto b = s_sig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool extend(std::size_t k) {
    if (k == r_rows.size()) return true;
    const std::size_t row = r_rows[k];
    const std::size_t deg = row_degree(r, row);
    for (std::size_t ci = 0; ci < r_cols.size(); ++ci)
      if (r(row, r_cols[ci])) r_sig[ci] |= 1u << k;
    for (std::size_t cand = 0; cand < s_rows.size(); ++cand) {
      if (used[cand] || row_degree(s, s_rows[cand]) != deg) continue;
      for (std::size_t ci = 0; ci < s_cols.size(); ++ci)
        if (s(s_rows[cand], s_cols[ci])) s_sig[ci] |= 1u << k;
      if (signatures_match()) {
        used[cand] = true;
        assigned[k] = cand;
        if (extend(k + 1)) return true;
        used[cand] = false;
      }
      for (auto& sig : s_sig) sig &= ~(1u << k);
    }
    for (auto& sig : r_sig) sig &= ~(1u << k);
    return false;
  }
};

}  // namespace

IsoResult are_isomorphic(const Rel& r, const Rel& s) {
  IsoSearch st{r, s, IsoSearch::row_domain(r), IsoSearch::row_domain(s), IsoSearch::col_domain(r),
               IsoSearch::col_domain(s), {}, {}, {}, {}};
  IsoResult out;
  if (st.r_rows.size() != st.s_rows.size() || st.r_cols.size() != st.s_cols.size() ||
      r.count() != s.count())
    return out;
  if (st.r_rows.size() > kIsoDomainLimit || st.r_cols.size() > kIsoDomainLimit) {
    out.status = IsoStatus::unknown;
    return out;
  }
  // Visit high-degree rows first; they constrain the search most.
  std::stable_sort(st.r_rows.begin(), st.r_rows.end(), [&](std::size_t x, std::size_t y) {
    return st.row_degree(r, x) > st.row_degree(r, y);
  });
  st.assigned.assign(st.r_rows.size(), 0);
  st.used.assign(st.s_rows.size(), false);
  st.r_sig.assign(st.r_cols.size(), 0);
  st.s_sig.assign(st.s_cols.size(), 0);
  if (!st.extend(0)) return out;

  std::vector<Rel::Pair> phi_pairs, psi_pairs;
  for (std::size_t k = 0; k < st.r_rows.size(); ++k)
    phi_pairs.emplace_back(st.r_rows[k], st.s_rows[st.assigned[k]]);
  std::vector<bool> taken(st.s_cols.size(), false);
  for (std::size_t ci = 0; ci < st.r_cols.size(); ++ci)
    for (std::size_t cj = 0; cj < st.s_cols.size(); ++cj)
      if (!taken[cj] && st.s_sig[cj] == st.r_sig[ci]) {
        taken[cj] = true;
        psi_pairs.emplace_back(st.r_cols[ci], st.s_cols[cj]);
        break;
      }
  Rel phi = Rel::from_pairs(r.target(), s.target(), phi_pairs);
  Rel psi = Rel::from_pairs(r.source(), s.source(), psi_pairs);
  if (!is_iso_witness(r, s, phi, psi)) throw LawViolation("are_isomorphic: witnesses fail verification");
  out.status = IsoStatus::found;
  out.phi = std::move(phi);
  out.psi = std::move(psi);
  return out;
}

}  // namespace relkit
