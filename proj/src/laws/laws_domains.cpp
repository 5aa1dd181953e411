#include "laws/common.hpp"
#include "relkit/index_core.hpp"
#include "relkit/residuals.hpp"

namespace relkit::laws {

void register_domain_laws(std::vector<Law>& out) {
  const std::string m = "domains";

  add(out, "domain.coreflexive-calculus", m, "p = p˘ = p∘p and p∘q = p∩q = q∘p",
      {coreflexive("p", "A"), coreflexive("q", "A")}, [](Inst x) {
        const Rel &p = x[0], &q = x[1];
        return Checks()
            .eq(converse(p), p, "p = p˘")
            .eq(compose(p, p), p, "p = p∘p")
            .eq(compose(p, q), meet(p, q), "p∘q = p∩q")
            .eq(compose(q, p), meet(p, q), "q∘p = p∩q")
            .outcome();
      });

  add(out, "domain.universal", m, "R = R∘p ≡ R> = R>∘p, and dually on the left",
      {any("R", "A", "B"), coreflexive("p", "B")}, [](Inst x) {
        const Rel &r = x[0], &p = x[1];
        const Rel rc = converse(r);
        return Checks()
            .expect((r == compose(r, p)) == (rdom(r) == compose(rdom(r), p)), "right domain")
            .expect((rc == compose(p, rc)) == (ldom(rc) == compose(p, ldom(rc))), "left domain")
            .outcome();
      });

  add(out, "domain.universal-per", m, "R = R∘P ≡ R>per = R>per∘P for pers P, and dually on the left",
      {any("R", "A", "B"), per("P", "B")}, [](Inst x) {
        const Rel &r = x[0], &p = x[1];
        const Rel rc = converse(r);
        return Checks()
            .expect((r == compose(r, p)) == (per_rdom(r) == compose(per_rdom(r), p)), "right per domain")
            .expect((rc == compose(p, rc)) == (per_ldom(rc) == compose(p, per_ldom(rc))), "left per domain")
            .outcome();
      });

  add(out, "domain.per-domain-identities", m,
      "(R\\\\R∘R>)> = R> = (R>∘R\\\\R)<, (R\\\\R∘R>)< = R> = (R>∘R\\\\R)>, "
      "R\\\\R∘R> = R>∘R\\\\R∘R> = R>∘R\\\\R",
      {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        const Rel k = sym_rdiv(r, r);
        const Rel d = rdom(r);
        const Rel kd = compose(k, d), dk = compose(d, k);
        return Checks()
            .eq(rdom(kd), d, "(R\\\\R∘R>)> = R>")
            .eq(ldom(dk), d, "(R>∘R\\\\R)< = R>")
            .eq(ldom(kd), d, "(R\\\\R∘R>)< = R>")
            .eq(rdom(dk), d, "(R>∘R\\\\R)> = R>")
            .eq(kd, compose(d, k, d), "R\\\\R∘R> = R>∘R\\\\R∘R>")
            .eq(dk, compose(d, k, d), "R>∘R\\\\R = R>∘R\\\\R∘R>")
            .outcome();
      });

  add(out, "function.galois", m, "f∘R ⊆ S ≡ f>∘R ⊆ f˘∘S, and R∘f˘ ⊆ S ≡ R∘f> ⊆ S∘f",
      {functional("f", "X", "Y"), any("R", "Y", "Z"), any("S", "X", "Z")}, [](Inst x) {
        const Rel &f = x[0], &r = x[1], &s = x[2];
        const Rel rc = converse(r), sc = converse(s);
        return Checks()
            .expect(leq(compose(f, r), s) == leq(compose(rdom(f), r), compose(converse(f), s)), "left")
            .expect(leq(compose(rc, converse(f)), sc) == leq(compose(rc, rdom(f)), compose(sc, f)), "right")
            .outcome();
      });

  add(out, "function.under", m, "f>∘(f\\R) = f˘∘R for functional f",
      {functional("f", "X", "Y"), any("R", "X", "Z")}, [](Inst x) {
        const Rel &f = x[0], &r = x[1];
        return Checks().eq(compose(rdom(f), under(f, r)), compose(converse(f), r), "f>∘(f\\R) = f˘∘R").outcome();
      });

  add(out, "function.converse-cancel", m, "f<∘(f˘\\(f˘∘R)) = f<∘R for functional f",
      {functional("f", "X", "Y"), any("R", "X", "Z")}, [](Inst x) {
        const Rel &f = x[0], &r = x[1];
        const Rel fc = converse(f);
        return Checks()
            .eq(compose(ldom(f), under(fc, compose(fc, r))), compose(ldom(f), r), "f<∘(f˘\\(f˘∘R)) = f<∘R")
            .outcome();
      });

  add(out, "function.factor-distribution", m, "(R\\(S∘f))∘f> = (R\\S)∘f for functional f",
      {functional("f", "X", "Y"), any("S", "W", "X"), any("R", "W", "V")}, [](Inst x) {
        const Rel &f = x[0], &s = x[1], &r = x[2];
        return Checks()
            .eq(compose(under(r, compose(s, f)), rdom(f)), compose(under(r, s), f), "(R\\(S∘f))∘f> = (R\\S)∘f")
            .outcome();
      });

  add(out, "function.factor-shift", m,
      "f˘∘((g<∘U)\\V/(W∘f<))∘g = f>∘((g˘∘U∘f)\\(g˘∘V∘f)/(g˘∘W∘f))∘g> for functional f, g",
      {functional("f", "F", "A"), functional("g", "G", "B"), any("U", "G", "F"), any("V", "G", "F"),
       any("W", "G", "F")},
      [](Inst x) {
        const Rel &f = x[0], &g = x[1], &u = x[2], &v = x[3], &w = x[4];
        const Rel gc = converse(g);
        const Rel lhs = compose(converse(f), sandwich(compose(ldom(g), u), v, compose(w, ldom(f))), g);
        const Rel rhs = compose(rdom(f), sandwich(compose(gc, u, f), compose(gc, v, f), compose(gc, w, f)), rdom(g));
        return Checks().eq(lhs, rhs, "factor shift").outcome();
      })
      .max_size = 3;

  add(out, "function.split-factor", m,
      "g>∘(f˘∘R∘g)\\(f˘∘S) = g˘∘(R\\S) and g>∘(f˘∘R∘g)\\(f˘∘R∘g)∘g> = g˘∘(R\\R)∘g "
      "where f∘f˘ = f< = R< and g functional",
      {any("R", "X", "Y"), any("S", "X", "Z"), functional("g", "Y", "B")}, [](Inst x) {
        const Rel &r = x[0], &s = x[1], &g = x[2];
        // f is the converse of a splitting of R<, so f∘f˘ = f< = R<.
        const Rel f = converse(split(ldom(r)).f);
        const Rel fc = converse(f), gc = converse(g);
        const Rel frg = compose(fc, r, g);
        return Checks()
            .eq(compose(f, fc), ldom(r), "premise")
            .eq(compose(rdom(g), under(frg, compose(fc, s))), compose(gc, under(r, s)), "first")
            .eq(compose(rdom(g), under(frg, frg), rdom(g)), compose(gc, under(r, r), g), "second")
            .outcome();
      });

  add(out, "difunction.battery-agreement", m, "the seven characterizations of difunctionality agree",
      {any("R", "A", "B")}, [](Inst x) {
        const auto b = difunctional_battery(x[0]);
        if (b.consistent()) return holds();
        std::string note = "forms:";
        for (bool f : b.forms) note += f ? " 1" : " 0";
        return fails(note);
      });
}

}  // namespace relkit::laws
