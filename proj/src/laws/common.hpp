#pragma once

#include <span>
#include <string>
#include <vector>

#include "relkit/domains.hpp"
#include "relkit/generators.hpp"
#include "relkit/laws.hpp"
#include "relkit/rel.hpp"

namespace relkit::laws {

using Inst = std::span<const Rel>;

inline LawParam any(std::string name, std::string target, std::string source) {
  return {std::move(name), std::move(target), std::move(source), {}, {}};
}

inline LawParam homo(std::string name, const std::string& v) { return any(std::move(name), v, v); }

LawParam coreflexive(std::string name, const std::string& v);
LawParam per(std::string name, const std::string& v);
LawParam functional(std::string name, const std::string& target, const std::string& source);
LawParam difunctional(std::string name, const std::string& target, const std::string& source);
LawParam provisional_preorder(std::string name, const std::string& v);
LawParam provisional_ordering(std::string name, const std::string& v);
LawParam dense(std::string name, const std::string& v);

inline Law& add(std::vector<Law>& out, std::string id, std::string module, std::string statement,
               std::vector<LawParam> params, std::function<Outcome(Inst)> check) {
  Law law;
  law.id = std::move(id);
  law.module = std::move(module);
  law.statement = std::move(statement);
  law.params = std::move(params);
  law.check = std::move(check);
  return out.emplace_back(std::move(law));
}

inline Outcome holds() { return {}; }
inline Outcome vacuous() { return {Verdict::vacuous, {}}; }
inline Outcome fails(std::string note) { return {Verdict::fails, std::move(note)}; }

/// Collects failing conditions; holds when none failed.
class Checks {
 public:
  Checks& expect(bool ok, const char* what) {
    if (!ok) failed_.push_back(what);
    return *this;
  }
  Checks& eq(const Rel& a, const Rel& b, const char* what) { return expect(a == b, what); }
  Checks& le(const Rel& a, const Rel& b, const char* what) { return expect(leq(a, b), what); }
  Outcome outcome() const;

 private:
  std::vector<std::string> failed_;
};

bool is_preorder(const Rel& r);
bool is_total(const Rel& r);
Rel id(const Rel& homogeneous);

void register_rel_laws(std::vector<Law>& out);
void register_residual_laws(std::vector<Law>& out);
void register_domain_laws(std::vector<Law>& out);
void register_diagonal_laws(std::vector<Law>& out);
void register_index_laws(std::vector<Law>& out);
void register_order_laws(std::vector<Law>& out);
void register_graph_laws(std::vector<Law>& out);

}  // namespace relkit::laws

namespace relkit::laws {

/// Results of a binary operation on all relation pairs of two fixed types,
/// indexed by bit codes. Only for relations of at most 9 bits.
class CodeTable {
 public:
  template <class Op>
  CodeTable(const Carrier& t1, const Carrier& s1, const Carrier& t2, const Carrier& s2, Op op)
      : bits2_(t2.size() * s2.size()) {
    const std::uint64_t n1 = std::uint64_t{1} << (t1.size() * s1.size());
    const std::uint64_t n2 = std::uint64_t{1} << bits2_;
    v_.resize(n1 * n2);
    for (std::uint64_t a = 0; a < n1; ++a) {
      const Rel x = relation_from_code(t1, s1, a);
      for (std::uint64_t b = 0; b < n2; ++b)
        v_[(a << bits2_) | b] = std::uint16_t(relation_code(op(x, relation_from_code(t2, s2, b))));
    }
  }
  std::uint16_t operator()(std::uint64_t a, std::uint64_t b) const { return v_[(a << bits2_) | b]; }

 private:
  std::size_t bits2_;
  std::vector<std::uint16_t> v_;
};

template <class Op>
std::vector<std::uint16_t> unary_table(const Carrier& t, const Carrier& s, Op op) {
  const std::uint64_t n = std::uint64_t{1} << (t.size() * s.size());
  std::vector<std::uint16_t> v(n);
  for (std::uint64_t a = 0; a < n; ++a) v[a] = std::uint16_t(relation_code(op(relation_from_code(t, s, a))));
  return v;
}

/// Exhaustive pass over all triples for three carrier variables of sizes up
/// to min(config.exhaustive, 3). `prepare(A, B, C)` returns an evaluator with
///   std::array<std::uint64_t, 3> bits;  bool ok(r, s, t) const;
///   std::vector<Rel> decode(r, s, t) const;
template <class Prepare>
FastRun triple_fast(const LawConfig& cfg, Prepare prepare) {
  FastRun run;
  const std::size_t hi = std::min<std::size_t>(cfg.exhaustive, 3);
  for (std::size_t a = 0; a <= hi; ++a)
    for (std::size_t b = 0; b <= hi; ++b)
      for (std::size_t c = 0; c <= hi; ++c) {
        const auto ev = prepare(Carrier::numbered("A", a), Carrier::numbered("B", b), Carrier::numbered("C", c));
        const std::int64_t nr = std::int64_t{1} << ev.bits[0];
        const std::uint64_t ns = std::uint64_t{1} << ev.bits[1];
        const std::uint64_t nt = std::uint64_t{1} << ev.bits[2];
        std::uint64_t fails = 0;
        std::uint64_t first = ~std::uint64_t{0};
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : fails) reduction(min : first)
        for (std::int64_t r = 0; r < nr; ++r)
          for (std::uint64_t s = 0; s < ns; ++s)
            for (std::uint64_t t = 0; t < nt; ++t)
              if (!ev.ok(std::uint64_t(r), s, t)) {
                ++fails;
                first = std::min(first, (std::uint64_t(r) * ns + s) * nt + t);
              }
        run.instances += std::uint64_t(nr) * ns * nt;
        if (fails && run.failures == 0) {
          const std::uint64_t t = first % nt, s = first / nt % ns, r = first / nt / ns;
          run.first_failure = ev.decode(r, s, t);
        }
        run.failures += fails;
      }
  return run;
}

}  // namespace relkit::laws
