"""Grothendieck constructions, the f↓g pullback model and the
induction isomorphism that peels one degree layer off a hom-category."""

from __future__ import annotations

from ..fincat import (CategoryError, Diagram, FinCategory, Functor,
                      check_functor, comma_over, comma_transport,
                      identity_functor, poset_category, product_category,
                      product_of, restrict_diagram, topological_order,
                      under_projection, union_under)
from ..labels import label
from ..report import Report
from ..search import as_budget
from .hom import DiagramHom, Matching, hom_category, overcat_diagram


def grothendieck(F: Diagram, name: str = ""):
    """K∫F: objects ``(k, x)``, morphisms ``(α, x, δ: α_* x -> y)``."""
    K = F.base
    objs = [(k, x) for k in K.objects for x in F.vertex[k].objects]
    arrows = []
    for a in K.morphisms:
        k, l = K.src[a], K.tgt[a]
        Fa, T = F.transition[a], F.vertex[l]
        for x in F.vertex[k].objects:
            for d in T.out_of(Fa.obmap[x]):
                arrows.append(((a, x, d), (k, x), (l, T.tgt[d])))
    identity = {(k, x): (K.identity[k], x, F.vertex[k].identity[x])
                for k, x in objs}

    def compose(g, f):
        b, _, e = g
        a, x, d = f
        T = F.vertex[K.tgt[b]]
        return (K.table[(b, a)], x, T.table[(e, F.transition[b].mormap[d])])

    cat = FinCategory.build(objs, arrows, identity, compose,
                            name or f"{K.name}∫F")
    proj = Functor(cat, K, {o: o[0] for o in objs},
                   {m[0]: m[0][0] for m in arrows})
    return cat, proj


# ---------------------------------------------------------------------------
# cospans and f↓g

def cospan_base() -> FinCategory:
    return poset_category(["c", "d", "e"],
                          [("c", "c"), ("d", "d"), ("e", "e"),
                           ("c", "d"), ("e", "d")], "•→•←•")


def cospan_diagram(f: Functor, g: Functor) -> Diagram:
    if f.target != g.target:
        raise CategoryError("cospan legs have different targets")
    I = cospan_base()
    vertex = {"c": f.source, "d": f.target, "e": g.source}
    transition = {("c", "c"): identity_functor(f.source),
                  ("d", "d"): identity_functor(f.target),
                  ("e", "e"): identity_functor(g.source),
                  ("c", "d"): f, ("e", "d"): g}
    return Diagram(I, vertex, transition)


def cospan_legs(X: Diagram):
    """``(c, e, d, α, β)`` for a diagram over a cospan-shaped base."""
    I = X.base
    legs = I.nonidentity
    if len(I.objects) != 3 or len(legs) != 2 or \
            I.tgt[legs[0]] != I.tgt[legs[1]] or \
            I.src[legs[0]] == I.src[legs[1]]:
        raise CategoryError("base is not of the shape •→•←•")
    a, b = legs
    return I.src[a], I.src[b], I.tgt[a], a, b


def barwick_kan(f: Functor, g: Functor) -> FinCategory:
    """f↓g: objects ``(c, e, (φ, ψ))`` with ``φ: f c -> d <- g e: ψ``."""
    C, D, E = f.source, f.target, g.source
    if g.target != D:
        raise CategoryError("f and g must share their target")
    objs = []
    for c in C.objects:
        for e in E.objects:
            for d in D.objects:
                for p in D.hom(f.obmap[c], d):
                    for q in D.hom(g.obmap[e], d):
                        objs.append((c, e, (p, q)))
    arrows = []
    for o1 in objs:
        c, e, (p, q) = o1
        d = D.tgt[p]
        for o2 in objs:
            c2, e2, (p2, q2) = o2
            d2 = D.tgt[p2]
            for u in C.hom(c, c2):
                fu = f.mormap[u]
                for v in E.hom(e, e2):
                    gv = g.mormap[v]
                    for w in D.hom(d, d2):
                        if D.table[(w, p)] == D.table[(p2, fu)] and \
                                D.table[(w, q)] == D.table[(q2, gv)]:
                            arrows.append(((o1, (u, w, v), o2), o1, o2))
    identity = {o: (o, (C.identity[o[0]], D.identity[D.tgt[o[2][0]]],
                        E.identity[o[1]]), o) for o in objs}

    def compose(y, x):
        (u2, w2, v2), (u, w, v) = y[1], x[1]
        return (x[0], (C.table[(u2, u)], D.table[(w2, w)], E.table[(v2, v)]),
                y[2])

    return FinCategory.build(objs, arrows, identity, compose, "f↓g")


def comma_pair_diagram(f: Functor, g: Functor) -> Diagram:
    """d ↦ f/d × g/d over D."""
    D = f.target
    cf = {d: comma_over(f, d)[0] for d in D.objects}
    cg = {d: comma_over(g, d)[0] for d in D.objects}
    vertex = {d: product_category(cf[d], cg[d]) for d in D.objects}
    transition = {}
    for w in D.morphisms:
        d, d2 = D.src[w], D.tgt[w]
        A = comma_transport(f, w, cf[d], cf[d2])
        B = comma_transport(g, w, cg[d], cg[d2])
        S = vertex[d]
        transition[w] = Functor(
            S, vertex[d2],
            {(x, y): (A.obmap[x], B.obmap[y]) for x, y in S.objects},
            {(m, n): (A.mormap[m], B.mormap[n]) for m, n in S.morphisms})
    return Diagram(D, vertex, transition)


def bk_to_grothendieck(f: Functor, g: Functor, BK: FinCategory,
                       G: FinCategory) -> Functor:
    """f↓g -> D∫(f/(−) × g/(−)), ``(c,e,(φ,ψ)) ↦ (d, ((c,φ),(e,ψ)))``."""
    D = f.target

    def ob(o):
        c, e, (p, q) = o
        return (D.tgt[p], ((c, p), (e, q)))

    obmap = {o: ob(o) for o in BK.objects}
    mormap = {}
    for m in BK.morphisms:
        o1, (u, w, v), o2 = m
        (c, e, (p, q)), (c2, e2, (p2, q2)) = o1, o2
        delta = (((c, D.table[(w, p)]), u, (c2, p2)),
                 ((e, D.table[(w, q)]), v, (e2, q2)))
        mormap[m] = (w, obmap[o1][1], delta)
    return Functor(BK, G, obmap, mormap)


def hom_to_bk(hom: DiagramHom, BK: FinCategory) -> Functor:
    """Hom((•→•←•)/(−), X) -> f↓g, reading off the two legs at the apex."""
    X = hom.X
    I = X.base
    c, e, d, a, b = cospan_legs(X)
    Y = hom.Y
    ic, ie, idd = I.identity[c], I.identity[e], I.identity[d]
    pa, pb = (a, a, idd), (b, b, idd)
    obmap = {}
    for o in hom.category.objects:
        fam = hom.family(o)
        obmap[o] = (fam[c].obmap[ic], fam[e].obmap[ie],
                    (fam[d].mormap[pa], fam[d].mormap[pb]))
    mormap = {}
    H = hom.category
    for m in H.morphisms:
        comps = hom.components(m)
        mormap[m] = (obmap[H.src[m]],
                     (comps[c][ic], comps[d][idd], comps[e][ie]),
                     obmap[H.tgt[m]])
    assert all(y in Y.vertex[d].morphisms for y in (pa, pb))
    return Functor(H, BK, obmap, mormap)


def _bijective(F: Functor) -> bool:
    return (check_functor(F).ok
            and len(set(F.obmap.values())) == len(F.target.objects)
            == len(F.source.objects)
            and len(set(F.mormap.values())) == len(F.target.morphisms)
            == len(F.source.morphisms))


def barwick_kan_check(f: Functor, g: Functor, budget=None) -> Report:
    """Hom((•→•←•)/(−), cospan) ≅ f↓g ≅ D∫(f/(−) × g/(−)) explicitly."""
    X = cospan_diagram(f, g)
    hom = hom_category(overcat_diagram(X.base), X, budget)
    BK = barwick_kan(f, g)
    G, _ = grothendieck(comma_pair_diagram(f, g))
    A = hom_to_bk(hom, BK)
    B = bk_to_grothendieck(f, g, BK, G)
    a_ok, b_ok = _bijective(A), _bijective(B)
    summary = {"objects": len(BK.objects), "morphisms": len(BK.morphisms),
               "hom_iso": a_ok, "grothendieck_iso": b_ok}
    return Report("bk-pullback", a_ok and b_ok, summary, proxy=False)


# ---------------------------------------------------------------------------
# one degree layer at a time

class LayerInduction:
    """Hom((U≤I)/(−), X_{U≤}) ≅ Hom((U<I)/(−), X_{U<}) ∫ F_U, explicitly."""

    def __init__(self, X: Diagram, U, budget=None):
        budget = as_budget(budget)
        I = X.base
        topological_order(I)
        self.X, self.I, self.U = X, I, list(U)
        self.leq, self.lt = union_under(I, self.U)
        self.Yleq = overcat_diagram(self.leq)
        self.Ylt = overcat_diagram(self.lt)
        self.L = hom_category(
            self.Yleq, restrict_diagram(X, under_projection(I, self.leq)),
            budget, "Hom(U≤)")
        self.HU = hom_category(
            self.Ylt, restrict_diagram(X, under_projection(I, self.lt)),
            budget, "Hom(U<)")
        self.match = {u: Matching(X, u, budget=budget) for u in self.U}
        self._commas = {}
        self.FU = self._functor()
        self.R, self.Rproj = grothendieck(self.FU, "Hom(U<)∫F_U")

    # restriction of a family over U<I to the part u<I
    def restrict_object(self, phi, u):
        fam = self.HU.family(phi)
        sub = {a: F for a, F in fam.items() if self.I.src[a] == u}
        return self.match[u].hom.find_object(sub)

    def restrict_morphism(self, lam, u):
        H = self.HU.category
        comps = {a: c for a, c in self.HU.components(lam).items()
                 if self.I.src[a] == u}
        return self.match[u].hom.find_morphism(
            self.restrict_object(H.src[lam], u),
            self.restrict_object(H.tgt[lam], u), comps)

    def comma(self, u, phi_u) -> FinCategory:
        k = (u, phi_u)
        if k not in self._commas:
            self._commas[k] = comma_over(self.match[u].functor, phi_u)[0]
        return self._commas[k]

    def _functor(self) -> Diagram:
        H = self.HU.category
        vertex = {}
        for phi in H.objects:
            vertex[phi] = product_of(
                [self.comma(u, self.restrict_object(phi, u)) for u in self.U])
        transition = {}
        for lam in H.morphisms:
            p, q = H.src[lam], H.tgt[lam]
            parts = []
            for u in self.U:
                parts.append(comma_transport(
                    self.match[u].functor, self.restrict_morphism(lam, u),
                    self.comma(u, self.restrict_object(p, u)),
                    self.comma(u, self.restrict_object(q, u))))
            S = vertex[p]
            transition[lam] = Functor(
                S, vertex[q],
                {o: tuple(F.obmap[x] for F, x in zip(parts, o))
                 for o in S.objects},
                {m: tuple(F.mormap[x] for F, x in zip(parts, m))
                 for m in S.morphisms})
        return Diagram(H, vertex, transition)

    # Θ: the Grothendieck side to the hom side
    def _theta_family(self, phi, xs) -> dict:
        I, X = self.I, self.X
        fam = self.HU.family(phi)
        pos = {u: n for n, u in enumerate(self.U)}
        out = {}
        for b in self.leq.objects:
            u, i = I.src[b], I.tgt[b]
            x, phiu = xs[pos[u]]
            S, T = self.Yleq.vertex[b], X.vertex[i]
            base = X.transition[b].obmap[x]
            gamma = self.match[u].hom.components(phiu)
            ob, mo = {}, {}
            for o in S.objects:
                ob[o] = base if I.is_identity(o[0]) else fam[b].obmap[o]
            for m in S.morphisms:
                o1, _, o2 = m
                if I.is_identity(o2[0]):
                    mo[m] = T.identity[base]
                elif I.is_identity(o1[0]):
                    mo[m] = gamma[b][o2]
                else:
                    mo[m] = fam[b].mormap[m]
            out[b] = Functor(S, T, ob, mo)
        return out

    def theta(self) -> Functor:
        I, X = self.I, self.X
        R, L = self.R, self.L
        obmap = {}
        for r in R.objects:
            phi, xs = r
            obmap[r] = L.find_object(self._theta_family(phi, xs))
        pos = {u: n for n, u in enumerate(self.U)}
        mormap = {}
        for m in R.morphisms:
            lam, _, dl = m
            comps_lam = self.HU.components(lam)
            comps = {}
            for b in self.leq.objects:
                u = I.src[b]
                f_u = dl[pos[u]][1]
                comps[b] = {o: (X.transition[b].mormap[f_u]
                                if I.is_identity(o[0]) else comps_lam[b][o])
                            for o in self.Yleq.vertex[b].objects}
            mormap[m] = L.find_morphism(obmap[R.src[m]], obmap[R.tgt[m]],
                                        comps)
        return Functor(R, L.category, obmap, mormap)

    # Θ⁻¹: restrict, and read x_u and γ off the identity components
    def _theta_inv_object(self, psi):
        I = self.I
        fam = self.L.family(psi)
        sub = {}
        for b in self.lt.objects:
            F = fam[b]
            S = self.Ylt.vertex[b]
            sub[b] = Functor(S, F.target,
                             {o: F.obmap[o] for o in S.objects},
                             {m: F.mormap[m] for m in S.morphisms})
        phi = self.HU.find_object(sub)
        xs = []
        for u in self.U:
            iu = I.identity[u]
            top = self.leq.identity[iu]
            x = fam[iu].obmap[top]
            gamma = {}
            for b in self.lt.objects:
                if I.src[b] != u:
                    continue
                src = (iu, b, b)
                gamma[b] = {o: fam[b].mormap[(src, (iu, o[0], o[0]), o)]
                            for o in self.Ylt.vertex[b].objects}
            M = self.match[u]
            phiu = M.hom.find_morphism(M.functor.obmap[x],
                                       self.restrict_object(phi, u), gamma)
            xs.append((x, phiu))
        return (phi, tuple(xs))

    def theta_inv(self) -> Functor:
        I, L, R = self.I, self.L, self.R
        obmap = {p: self._theta_inv_object(p) for p in L.category.objects}
        mormap = {}
        for m in L.category.morphisms:
            comps = L.components(m)
            r1, r2 = obmap[L.category.src[m]], obmap[L.category.tgt[m]]
            lam = self.HU.find_morphism(
                r1[0], r2[0],
                {b: {o: comps[b][o] for o in self.Ylt.vertex[b].objects}
                 for b in self.lt.objects})
            delta = []
            for n, u in enumerate(self.U):
                iu = I.identity[u]
                f_u = comps[iu][self.leq.identity[iu]]
                x, phiu = r1[1][n]
                x2, phiu2 = r2[1][n]
                moved = self.match[u].hom.category.table[
                    (self.restrict_morphism(lam, u), phiu)]
                delta.append(((x, moved), f_u, (x2, phiu2)))
            mormap[m] = (lam, r1[1], tuple(delta))
        return Functor(L.category, R, obmap, mormap)

    def report(self) -> Report:
        T, Ti = self.theta(), self.theta_inv()
        t_ok, ti_ok = check_functor(T).ok, check_functor(Ti).ok
        left = T.then(Ti).same_maps(identity_functor(self.R))
        right = Ti.then(T).same_maps(identity_functor(self.L.category))
        summary = {"U": [label(u) for u in self.U],
                   "grothendieck_objects": len(self.R.objects),
                   "grothendieck_morphisms": len(self.R.morphisms),
                   "hom_objects": len(self.L.category.objects),
                   "hom_morphisms": len(self.L.category.morphisms),
                   "theta_functor": t_ok, "theta_inverse_functor": ti_ok,
                   "inverse_after_theta_is_identity": left,
                   "theta_after_inverse_is_identity": right}
        rep = Report("lemma-iso", t_ok and ti_ok and left and right,
                     summary, proxy=False)
        if left and right:
            rep.notes.append("round trips are identity functors on the nose")
        return rep


def F_U_functor(X: Diagram, U, budget=None) -> Diagram:
    """Φ ↦ ∏_u m_u/(Φ restricted to u<I), as a diagram over Hom(U<)."""
    return LayerInduction(X, U, budget).FU


def lemma_indgrot_iso(X: Diagram, U, budget=None):
    """(Θ, Θ⁻¹, report) for the layer induction isomorphism."""
    li = LayerInduction(X, U, budget)
    return li.theta(), li.theta_inv(), li.report()
