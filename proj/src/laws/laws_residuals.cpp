#include <array>

#include "laws/common.hpp"
#include "relkit/pointwise.hpp"
#include "relkit/residuals.hpp"

namespace relkit::laws {

namespace {

// R : A~B, S : A~C, T : B~C. Both adjunctions are phrased against R∘T ⊆ S.
struct GaloisEval {
  Carrier a, b, c;
  std::array<std::uint64_t, 3> bits;
  CodeTable und, ovr, rt;

  GaloisEval(const Carrier& A, const Carrier& B, const Carrier& C)
      : a(A), b(B), c(C),
        bits{A.size() * B.size(), A.size() * C.size(), B.size() * C.size()},
        und(A, B, A, C, [](const Rel& x, const Rel& y) { return under(x, y); }),
        ovr(A, C, B, C, [](const Rel& x, const Rel& y) { return over(x, y); }),
        rt(A, B, B, C, [](const Rel& x, const Rel& y) { return compose(x, y); }) {}

  bool ok(std::uint64_t r, std::uint64_t s, std::uint64_t t) const {
    const bool inc = (rt(r, t) & ~s) == 0;
    return ((t & ~std::uint64_t(und(r, s))) == 0) == inc && ((r & ~std::uint64_t(ovr(s, t))) == 0) == inc;
  }

  std::vector<Rel> decode(std::uint64_t r, std::uint64_t s, std::uint64_t t) const {
    return {relation_from_code(a, b, r), relation_from_code(a, c, s), relation_from_code(b, c, t)};
  }
};

}  // namespace

void register_residual_laws(std::vector<Law>& out) {
  const std::string m = "residuals";

  add(out, "residual.galois", m, "T ⊆ R\\S ≡ R∘T ⊆ S ≡ R ⊆ S/T",
      {any("R", "A", "B"), any("S", "A", "C"), any("T", "B", "C")}, [](Inst x) {
        const Rel &r = x[0], &s = x[1], &t = x[2];
        const bool inc = leq(compose(r, t), s);
        return Checks()
            .expect(leq(t, under(r, s)) == inc, "under")
            .expect(leq(r, over(s, t)) == inc, "over")
            .outcome();
      })
      .fast = [](const LawConfig& cfg) {
    return triple_fast(cfg, [](const Carrier& a, const Carrier& b, const Carrier& c) { return GaloisEval(a, b, c); });
  };

  add(out, "residual.cancellation", m, "R∘(R\\R) = R = (R/R)∘R", {any("R", "A", "B")}, [](Inst x) {
    const Rel& r = x[0];
    return Checks()
        .eq(compose(r, under(r, r)), r, "R∘(R\\R) = R")
        .eq(compose(over(r, r), r), r, "(R/R)∘R = R")
        .outcome();
  });

  add(out, "residual.division-absorption", m, "R/(R\\R) = R = (R/R)\\R", {any("R", "A", "B")},
      [](Inst x) {
        const Rel& r = x[0];
        return Checks()
            .eq(over(r, under(r, r)), r, "R/(R\\R) = R")
            .eq(under(over(r, r), r), r, "(R/R)\\R = R")
            .outcome();
      });

  add(out, "residual.self-division", m, "(R\\R)/(R\\R) = R\\R = (R\\R)\\(R\\R), dually for R/R",
      {any("R", "A", "B")}, [](Inst x) {
        const Rel u = under(x[0], x[0]);
        const Rel v = over(x[0], x[0]);
        return Checks()
            .eq(over(u, u), u, "(R\\R)/(R\\R)")
            .eq(under(u, u), u, "(R\\R)\\(R\\R)")
            .eq(over(v, v), v, "(R/R)/(R/R)")
            .eq(under(v, v), v, "(R/R)\\(R/R)")
            .outcome();
      });

  add(out, "residual.converse-distribution", m, "R˘\\S˘ = (S/R)˘ and (R\\S/T)˘ = T˘\\S˘/R˘",
      {any("R", "A", "B"), any("S", "A", "C"), any("T", "D", "C")}, [](Inst x) {
        const Rel &r = x[0], &s = x[1], &t = x[2];
        // R˘ and S˘ share their source A, as the first identity needs.
        const Rel rc = converse(r), sc = converse(s);
        return Checks()
            .eq(under(converse(rc), converse(sc)), converse(over(sc, rc)), "under/over")
            .eq(over(s, t), converse(under(converse(t), converse(s))), "over/under")
            .eq(converse(sandwich(r, s, t)), sandwich(converse(t), converse(s), converse(r)), "sandwich")
            .outcome();
      });

  add(out, "residual.cross-check", m, "complement formulas agree with the quantifier definitions",
      {any("R", "A", "B"), any("S", "A", "C"), any("T", "D", "C")}, [](Inst x) {
        const Rel &r = x[0], &s = x[1], &t = x[2];
        return Checks()
            .eq(compose(r, converse(r)), pointwise::compose(r, pointwise::converse(r)), "compose")
            .eq(under(r, s), pointwise::under(r, s), "under")
            .eq(over(s, t), pointwise::over(s, t), "over")
            .eq(sandwich(r, s, t), pointwise::sandwich(r, s, t), "sandwich")
            .eq(sym_rdiv(r, s), pointwise::sym_rdiv(r, s), "symmetric right division")
            .eq(sym_ldiv(s, t), pointwise::sym_ldiv(s, t), "symmetric left division")
            .outcome();
      });
}

}  // namespace relkit::laws
