#include <array>

#include "laws/common.hpp"
#include "relkit/axioms.hpp"

namespace relkit::laws {

namespace {

// R : A~B, S : B~C, T : A~C.
struct DedekindEval {
  Carrier a, b, c;
  std::array<std::uint64_t, 3> bits;
  CodeTable rs, rct, tsc;
  std::vector<std::uint16_t> conv_r, conv_s;
  bool dual;

  DedekindEval(const Carrier& A, const Carrier& B, const Carrier& C, bool dual_form)
      : a(A), b(B), c(C),
        bits{A.size() * B.size(), B.size() * C.size(), A.size() * C.size()},
        rs(A, B, B, C, [](const Rel& x, const Rel& y) { return compose(x, y); }),
        rct(B, A, A, C, [](const Rel& x, const Rel& y) { return compose(x, y); }),
        tsc(A, C, C, B, [](const Rel& x, const Rel& y) { return compose(x, y); }),
        conv_r(unary_table(A, B, [](const Rel& x) { return converse(x); })),
        conv_s(unary_table(B, C, [](const Rel& x) { return converse(x); })),
        dual(dual_form) {}

  bool ok(std::uint64_t r, std::uint64_t s, std::uint64_t t) const {
    const std::uint64_t lhs = rs(r, s) & t;
    const std::uint64_t rhs = dual ? rs(r & tsc(t, conv_s[s]), s) : rs(r, s & rct(conv_r[r], t));
    return (lhs & ~rhs) == 0;
  }

  std::vector<Rel> decode(std::uint64_t r, std::uint64_t s, std::uint64_t t) const {
    return {relation_from_code(a, b, r), relation_from_code(b, c, s), relation_from_code(a, c, t)};
  }
};

Law dedekind_law(bool dual) {
  Law law;
  law.id = dual ? "rel.dedekind-dual" : "rel.dedekind";
  law.module = "carrier-rel";
  law.statement = dual ? "R∘S ∩ T ⊆ (R ∩ T∘S˘)∘S" : "R∘S ∩ T ⊆ R∘(S ∩ R˘∘T)";
  law.params = {any("R", "A", "B"), any("S", "B", "C"), any("T", "A", "C")};
  law.check = [dual](Inst x) {
    return (dual ? dedekind_dual_holds(x[0], x[1], x[2]) : dedekind_holds(x[0], x[1], x[2]))
               ? holds()
               : fails("inclusion fails");
  };
  law.fast = [dual](const LawConfig& cfg) {
    return triple_fast(cfg, [dual](const Carrier& a, const Carrier& b, const Carrier& c) {
      return DedekindEval(a, b, c, dual);
    });
  };
  return law;
}

}  // namespace

void register_rel_laws(std::vector<Law>& out) {
  const std::string m = "carrier-rel";

  add(out, "rel.compose.associative", m, "(R∘S)∘T = R∘(S∘T)",
      {any("R", "A", "B"), any("S", "B", "C"), any("T", "C", "D")}, [](Inst x) {
        return Checks()
            .eq(compose(compose(x[0], x[1]), x[2]), compose(x[0], compose(x[1], x[2])), "associativity")
            .outcome();
      });

  add(out, "rel.converse.lattice-iso", m, "(R∩S)˘ = R˘∩S˘, (R∪S)˘ = R˘∪S˘, R˘˘ = R",
      {any("R", "A", "B"), any("S", "A", "B")}, [](Inst x) {
        const Rel &r = x[0], &s = x[1];
        return Checks()
            .eq(converse(meet(r, s)), meet(converse(r), converse(s)), "meet")
            .eq(converse(join(r, s)), join(converse(r), converse(s)), "join")
            .eq(converse(converse(r)), r, "involution")
            .expect(leq(r, s) == leq(converse(r), converse(s)), "monotonicity")
            .outcome();
      });

  out.push_back(dedekind_law(false));
  out.push_back(dedekind_law(true));

  add(out, "rel.cone", m, "⊤∘R∘⊤ = ⊤ ≡ R ≠ ⊥ over nonempty carriers", {any("R", "A", "B")},
      [](Inst x) { return cone_holds(x[0]) ? holds() : fails("cone rule"); })
      .min_size = 1;

  add(out, "rel.rtc.least-fixpoint", m, "R* = ⋃ Rⁿ; I ∪ R∘R* = R*; I ∪ R∘Y ⊆ Y ⇒ R* ⊆ Y",
      {homo("R", "A"), homo("Y", "A")}, [](Inst x) {
        const Rel &r = x[0], &y = x[1];
        const Rel i = id(r);
        const Rel star = rtc(r);
        Rel powers = i;
        Rel p = i;
        for (std::size_t n = 0; n < r.rows(); ++n) {
          p = compose(p, r);
          powers = join(powers, p);
        }
        Checks c;
        c.eq(star, powers, "union of powers").eq(join(i, compose(r, star)), star, "fixpoint");
        if (leq(join(i, compose(r, y)), y)) c.le(star, y, "least pre-fixpoint");
        return c.outcome();
      });
}

}  // namespace relkit::laws
