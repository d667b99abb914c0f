"""Finite group actions on categories and on diagrams of categories.

Conventions: a G-diagram carries structure functors ``g_{X,i}: X_i -> X_{gi}``
with ``(gh)_{X,i} = g_{X,hi} ∘ h_{X,i}``.  Conjugation on a hom-category is

    (g·Φ)_{gi} = g_{X,i} ∘ Φ_i ∘ (g⁻¹)_{Y,gi}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Mapping

from .fincat import (CategoryError, Diagram, FinCategory, Functor,
                     ValidationReport, check_functor, degree_function,
                     identity_functor, restrict_diagram, under_projection,
                     validate_diagram)
from .holim.grothendieck import LayerInduction, grothendieck
from .holim.hom import (DiagramHom, Matching, _ChainImage, hom_chains,
                        matching_rows, overcat_diagram)
from .labels import label
from .report import Report
from .search import as_budget
from .simpl import delta_n, nerve, nerve_map, simplicial_product, \
    identity_map, map_product

COCYCLE = "(gh)_{X,i} = g_{X,hi} ∘ h_{X,i}"


# ---------------------------------------------------------------------------
# groups

@dataclass(frozen=True, eq=False)
class FinGroup:
    elements: tuple
    table: Mapping
    identity: object
    name: str = ""

    def mul(self, g, h):
        return self.table[(g, h)]

    @cached_property
    def _inverses(self) -> dict:
        out = {}
        for g in self.elements:
            for h in self.elements:
                if self.table.get((g, h)) == self.identity:
                    out[g] = h
                    break
        return out

    def inverse(self, g):
        return self._inverses[g]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"<FinGroup {self.name} order {self.order}>"


def group_from_table(elements, rows, name: str = "") -> FinGroup:
    """``rows[a][b]`` is the product ``elements[a]·elements[b]``."""
    elements = tuple(elements)
    table = {}
    for a, row in enumerate(rows):
        for b, c in enumerate(row):
            table[(elements[a], elements[b])] = c
    ident = None
    for e in elements:
        if all(table.get((e, g)) == g and table.get((g, e)) == g
               for g in elements):
            ident = e
            break
    return FinGroup(elements, table, ident, name)


def validate_group(G: FinGroup) -> ValidationReport:
    rep = ValidationReport(f"group {G.name}".strip())
    els = set(G.elements)
    if len(els) != len(G.elements):
        rep.add("typing", "repeated elements")
    for g in G.elements:
        for h in G.elements:
            if G.table.get((g, h)) not in els:
                rep.add("closure", "product missing or outside the group",
                        g, h)
    if not rep.ok:
        return rep
    if G.identity not in els:
        rep.add("unit", "no identity element")
        return rep
    for g in G.elements:
        if G.mul(G.identity, g) != g or G.mul(g, G.identity) != g:
            rep.add("unit", "identity is not a two-sided unit", g)
        if g not in G._inverses or G.mul(G.inverse(g), g) != G.identity:
            rep.add("inverse", "element has no two-sided inverse", g)
    for a in G.elements:
        for b in G.elements:
            ab = G.mul(a, b)
            for c in G.elements:
                if G.mul(ab, c) != G.mul(a, G.mul(b, c)):
                    rep.add("associativity", "(ab)c != a(bc)", a, b, c)
    return rep


def trivial_group() -> FinGroup:
    return FinGroup(("e",), {("e", "e"): "e"}, "e", "1")


def cyclic_group(n: int) -> FinGroup:
    els = tuple(range(n))
    return FinGroup(els, {(a, b): (a + b) % n for a in els for b in els}, 0,
                    f"C{n}")


def symmetric_group(n: int) -> FinGroup:
    """Permutations of range(n) as tuples; (στ)(x) = σ(τ(x))."""
    els = tuple(permutations(range(n)))
    table = {(s, t): tuple(s[t[x]] for x in range(n))
             for s in els for t in els}
    return FinGroup(els, table, tuple(range(n)), f"S{n}")


def subgroup(G: FinGroup, elements, name: str = "") -> FinGroup:
    keep = [g for g in G.elements if g in set(elements)]
    ks = set(keep)
    if G.identity not in ks or any(G.mul(a, b) not in ks
                                   for a in keep for b in keep):
        raise CategoryError("elements do not form a subgroup")
    return FinGroup(tuple(keep), {(a, b): G.mul(a, b)
                                  for a in keep for b in keep},
                    G.identity, name or "{" + ",".join(map(label, keep)) + "}")


def _closure(G: FinGroup, gens) -> frozenset:
    out = {G.identity}
    frontier = list(gens)
    while frontier:
        g = frontier.pop()
        if g in out:
            continue
        out.add(g)
        frontier.extend(G.mul(g, h) for h in list(out))
        frontier.extend(G.mul(h, g) for h in list(out))
    return frozenset(out)


def subgroups(G: FinGroup) -> list:
    """Every subgroup, ordered by size then by element positions."""
    found = {_closure(G, [g]) for g in G.elements}
    frontier = set(found)
    cyclic = list(found)
    while frontier:
        new = set()
        for H in frontier:
            for C in cyclic:
                J = _closure(G, H | C)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    pos = {g: n for n, g in enumerate(G.elements)}
    ordered = sorted(found, key=lambda H: (len(H), sorted(map(pos.get, H))))
    return [subgroup(G, H) for H in ordered]


def _as_subgroup(G: FinGroup, H) -> FinGroup:
    if isinstance(H, FinGroup):
        return subgroup(G, H.elements, H.name)
    return subgroup(G, H)


# ---------------------------------------------------------------------------
# actions on categories

@dataclass(frozen=True, eq=False)
class CategoryGAction:
    group: FinGroup
    carrier: FinCategory
    action: Mapping

    def ob(self, g, x):
        return self.action[g].obmap[x]

    def mor(self, g, m):
        return self.action[g].mormap[m]


def trivial_action(G: FinGroup, C: FinCategory) -> CategoryGAction:
    idf = identity_functor(C)
    return CategoryGAction(G, C, {g: idf for g in G.elements})


def validate_g_action(A: CategoryGAction) -> ValidationReport:
    G, C = A.group, A.carrier
    rep = ValidationReport("group action")
    rep.extend(validate_group(G))
    for g in G.elements:
        F = A.action.get(g)
        if F is None:
            rep.add("missing", "no functor for element", g)
            continue
        for v in check_functor(F).violations:
            rep.add(v.kind, f"action of {label(g)}: {v.detail}", *v.witness)
    if not rep.ok:
        return rep
    if not A.action[G.identity].same_maps(identity_functor(C)):
        rep.add("unit", "identity element does not act as the identity")
    for g in G.elements:
        for h in G.elements:
            if not A.action[h].then(A.action[g]).same_maps(
                    A.action[G.mul(g, h)]):
                rep.add("composition", "g(h x) != (gh) x", g, h)
    return rep


def degree_is_invariant(A: CategoryGAction) -> bool:
    deg = degree_function(A.carrier)
    return all(deg[A.ob(g, x)] == deg[x]
               for g in A.group.elements for x in A.carrier.objects)


def fixed_category(A: CategoryGAction, H=None) -> FinCategory:
    """Objects and morphisms fixed by every element of H, on the nose."""
    H = A.group if H is None else _as_subgroup(A.group, H)
    C = A.carrier
    obs = [x for x in C.objects if all(A.ob(h, x) == x for h in H.elements)]
    ms = [m for m in C.morphisms
          if all(A.mor(h, m) == m for h in H.elements)]
    return C.subcategory(obs, ms, f"{C.name}^{H.name}")


def restrict_action(A: CategoryGAction, H) -> CategoryGAction:
    H = _as_subgroup(A.group, H)
    return CategoryGAction(H, A.carrier, {h: A.action[h] for h in H.elements})


def stabilizer(A: CategoryGAction, U) -> FinGroup:
    """G_U = {g : gU = U} for a set of objects U."""
    U = frozenset(U)
    G = A.group
    return subgroup(G, [g for g in G.elements
                        if frozenset(A.ob(g, u) for u in U) == U],
                    "G_U")


def under_action(A: CategoryGAction, sub: FinCategory,
                 K: FinGroup) -> CategoryGAction:
    """The action induced on an under-type category built from morphisms."""
    action = {}
    for g in K.elements:
        F = A.action[g]
        ob = {a: F.mormap[a] for a in sub.objects}
        mo = {m: (F.mormap[m[0]], F.mormap[m[1]], F.mormap[m[2]])
              for m in sub.morphisms}
        action[g] = Functor(sub, sub, ob, mo)
    return CategoryGAction(K, sub, action)


# ---------------------------------------------------------------------------
# G-diagrams

@dataclass(frozen=True, eq=False)
class GDiagram:
    action: CategoryGAction
    diagram: Diagram
    structure: Mapping       # g -> i -> Functor X_i -> X_{gi}

    @property
    def group(self) -> FinGroup:
        return self.action.group


def trivial_g_diagram(A: CategoryGAction, X: Diagram) -> GDiagram:
    """Structure maps are identities; needs every X_{gi} = X_i."""
    return GDiagram(A, X, {g: {i: identity_functor(X.vertex[i])
                               for i in X.base.objects}
                           for g in A.group.elements})


def validate_g_diagram(Xg: GDiagram) -> ValidationReport:
    A, X = Xg.action, Xg.diagram
    G, I = A.group, X.base
    rep = ValidationReport("G-diagram")
    rep.extend(validate_g_action(A))
    rep.extend(validate_diagram(X))
    if A.carrier != I:
        rep.add("typing", "action and diagram have different base categories")
    if not rep.ok:
        return rep
    for g in G.elements:
        for i in I.objects:
            F = Xg.structure.get(g, {}).get(i)
            if F is None:
                rep.add("missing", "no structure functor", g, i)
                continue
            if F.source != X.vertex[i] or F.target != X.vertex[A.ob(g, i)]:
                rep.add("typing", "structure functor has wrong type", g, i)
                continue
            for v in check_functor(F).violations:
                rep.add(v.kind, f"structure {label(g)} at {label(i)}: "
                        f"{v.detail}", *v.witness)
    if not rep.ok:
        return rep
    S = Xg.structure
    for i in I.objects:
        if not S[G.identity][i].same_maps(identity_functor(X.vertex[i])):
            rep.add("unit", "1_X is not the identity", G.identity, i)
    for g in G.elements:
        for h in G.elements:
            gh = G.mul(g, h)
            for i in I.objects:
                lhs = S[h][i].then(S[g][A.ob(h, i)])
                if not lhs.same_maps(S[gh][i]):
                    rep.add("cocycle", COCYCLE + " fails", g, h, i)
    for g in G.elements:
        for a in I.morphisms:
            i, j = I.src[a], I.tgt[a]
            lhs = S[g][i].then(X.transition[A.mor(g, a)])
            rhs = X.transition[a].then(S[g][j])
            if not lhs.same_maps(rhs):
                rep.add("naturality", "g_X is not natural", g, a)
    return rep


def restrict_g_diagram(Xg: GDiagram, B: CategoryGAction,
                       P: Functor) -> GDiagram:
    """X∘P for an equivariant P: B.carrier -> base."""
    X = restrict_diagram(Xg.diagram, P)
    S = {g: {a: Xg.structure[g][P.obmap[a]] for a in B.carrier.objects}
         for g in B.group.elements}
    return GDiagram(B, X, S)


def restrict_g_group(Xg: GDiagram, H) -> GDiagram:
    B = restrict_action(Xg.action, H)
    return GDiagram(B, Xg.diagram,
                    {h: Xg.structure[h] for h in B.group.elements})


def overcat_g_diagram(A: CategoryGAction) -> GDiagram:
    """I/(−) with g_{Y,i}: I/i -> I/gi applying g to everything."""
    I = A.carrier
    Y = overcat_diagram(I)
    S = {}
    for g in A.group.elements:
        F = A.action[g]
        S[g] = {}
        for i in I.objects:
            src, tgt = Y.vertex[i], Y.vertex[F.obmap[i]]
            S[g][i] = Functor(
                src, tgt, {p: F.mormap[p] for p in src.objects},
                {m: (F.mormap[m[0]], F.mormap[m[1]], F.mormap[m[2]])
                 for m in src.morphisms})
    return GDiagram(A, Y, S)


# ---------------------------------------------------------------------------
# conjugation on hom-categories

def conjugate_family(Yg: GDiagram, Xg: GDiagram, g, fam: dict) -> dict:
    A, G = Yg.action, Yg.group
    gi = G.inverse(g)
    out = {}
    for i, F in fam.items():
        j = A.ob(g, i)
        back = Yg.structure[gi][j]
        fwd = Xg.structure[g][i]
        out[j] = back.then(F).then(fwd)
    return out


def conjugate_components(Yg: GDiagram, Xg: GDiagram, g, comps: dict) -> dict:
    A, G = Yg.action, Yg.group
    gi = G.inverse(g)
    out = {}
    for i, c in comps.items():
        j = A.ob(g, i)
        back = Yg.structure[gi][j]
        fwd = Xg.structure[g][i]
        out[j] = {y: fwd.mormap[c[back.obmap[y]]]
                  for y in Yg.diagram.vertex[j].objects}
    return out


def conjugation_action_on_hom(Yg: GDiagram, Xg: GDiagram,
                              hom: DiagramHom) -> CategoryGAction:
    if Yg.action.carrier != Xg.action.carrier:
        raise CategoryError("G-diagrams over different base actions")
    H = hom.category
    action = {}
    for g in Yg.group.elements:
        ob = {p: hom.find_object(conjugate_family(Yg, Xg, g, hom.family(p)))
              for p in H.objects}
        mo = {m: hom.find_morphism(
            ob[H.src[m]], ob[H.tgt[m]],
            conjugate_components(Yg, Xg, g, hom.components(m)))
            for m in H.morphisms}
        action[g] = Functor(H, H, ob, mo)
    return CategoryGAction(Yg.group, H, action)


def fixed_hom_category(Yg: GDiagram, Xg: GDiagram, hom: DiagramHom,
                       H=None) -> FinCategory:
    return fixed_category(conjugation_action_on_hom(Yg, Xg, hom), H)


def structure_action(Xg: GDiagram, i, H: FinGroup) -> CategoryGAction:
    """H acts on X_i through the structure maps when H fixes i."""
    for h in H.elements:
        if Xg.action.ob(h, i) != i:
            raise CategoryError(f"object {label(i)} is not fixed by "
                                f"{label(h)}")
    return CategoryGAction(H, Xg.diagram.vertex[i],
                           {h: Xg.structure[h][i] for h in H.elements})


class EquivariantMatching:
    """m_i^H: X_i^H -> Hom((i<I)/(−), X_{i<})^H."""

    def __init__(self, Xg: GDiagram, i, H=None, matching: Matching = None,
                 budget=None):
        G = Xg.group
        self.H = G if H is None else _as_subgroup(G, H)
        XH = restrict_g_group(Xg, self.H)
        self.source_action = structure_action(XH, i, self.H)
        M = matching or Matching(Xg.diagram, i, budget=budget)
        self.matching = M
        I = Xg.diagram.base
        B = under_action(XH.action, M.lt, self.H)
        self.Yg = overcat_g_diagram(B)
        self.Xg = restrict_g_diagram(XH, B, under_projection(I, M.lt))
        self.conj = conjugation_action_on_hom(self.Yg, self.Xg, M.hom)
        self.target = fixed_category(self.conj)
        self.source = fixed_category(self.source_action)
        m = M.functor
        self.equivariant = all(
            self.conj.ob(h, m.obmap[x]) == m.obmap[self.source_action.ob(h, x)]
            for h in self.H.elements for x in m.source.objects) and all(
            self.conj.mor(h, m.mormap[f]) ==
            m.mormap[self.source_action.mor(h, f)]
            for h in self.H.elements for f in m.source.morphisms)
        tobs = set(self.target.objects)
        tmors = set(self.target.morphisms)
        ob = {x: m.obmap[x] for x in self.source.objects}
        mo = {f: m.mormap[f] for f in self.source.morphisms}
        self.lands_in_fixed = (set(ob.values()) <= tobs
                               and set(mo.values()) <= tmors)
        self.functor = Functor(self.source, self.target, ob, mo)


def equivariant_matching(Xg: GDiagram, i, H=None, budget=None) -> Functor:
    return EquivariantMatching(Xg, i, H, budget=budget).functor


def equivariant_reedy_check(Xg: GDiagram, budget=None) -> Report:
    """Every subgroup H, every i in I^H, every morphism of Hom(...)^H."""
    budget = as_budget(budget)
    A = Xg.action
    matchings = {}
    blocks, ok = [], True
    for H in subgroups(A.group):
        IH = fixed_category(A, H)
        rows = []
        equi = True
        for i in IH.objects:
            if i not in matchings:
                matchings[i] = Matching(Xg.diagram, i, budget=budget)
            E = EquivariantMatching(Xg, i, H, matchings[i])
            equi = equi and E.equivariant and E.lands_in_fixed
            rows.extend(matching_rows(E.functor, label(i)))
        passed = all(r["verdict"] for r in rows) and equi
        ok = ok and passed
        blocks.append({"subgroup": H.name, "order": H.order,
                       "fixed_objects": [label(i) for i in IH.objects],
                       "equivariant": equi, "passed": passed,
                       "rows": rows})
    rep = Report("reedy-equivariant", ok,
                 {"subgroups": len(blocks),
                  "checks": sum(len(b["rows"]) for b in blocks),
                  "degree_invariant": degree_is_invariant(A)},
                 blocks)
    rep.notes.append("cocycle convention " + COCYCLE)
    return rep


# ---------------------------------------------------------------------------
# Grothendieck constructions

def grothendieck_g_action(Yg: GDiagram, R: FinCategory | None = None
                          ) -> CategoryGAction:
    """g·(i, c) = (gi, g_Y c) and g·(α, x, δ) = (gα, g_Y x, g_Y δ)."""
    A, Y = Yg.action, Yg.diagram
    I = Y.base
    if R is None:
        R, _ = grothendieck(Y)
    action = {}
    for g in A.group.elements:
        S = Yg.structure[g]
        ob = {(i, x): (A.ob(g, i), S[i].obmap[x]) for i, x in R.objects}
        mo = {}
        for m in R.morphisms:
            a, x, d = m
            mo[m] = (A.mor(g, a), S[I.src[a]].obmap[x],
                     S[I.tgt[a]].mormap[d])
        action[g] = Functor(R, R, ob, mo)
    return CategoryGAction(A.group, R, action)


class EquivariantLayerInduction:
    """The layer induction isomorphism with its G_U-actions on both sides."""

    def __init__(self, Xg: GDiagram, U, budget=None):
        self.Xg = Xg
        A = Xg.action
        I = A.carrier
        self.GU = stabilizer(A, U)
        self.li = li = LayerInduction(Xg.diagram, U, budget)
        XU = restrict_g_group(Xg, self.GU)
        self.B_leq = under_action(XU.action, li.leq, self.GU)
        self.B_lt = under_action(XU.action, li.lt, self.GU)
        Yleq = overcat_g_diagram(self.B_leq)
        Xleq = restrict_g_diagram(XU, self.B_leq, under_projection(I, li.leq))
        self.Ylt = overcat_g_diagram(self.B_lt)
        self.Xlt = restrict_g_diagram(XU, self.B_lt, under_projection(I, li.lt))
        self.conj_L = conjugation_action_on_hom(Yleq, Xleq, li.L)
        self.conj_HU = conjugation_action_on_hom(self.Ylt, self.Xlt, li.HU)
        self.FUg = self._fu_structure()
        self.act_R = grothendieck_g_action(self.FUg, li.R)

    def _move_phi(self, g, u, phiu):
        """Conjugate a morphism m_u(x) -> Φ|_u to one into (gΦ)|_{gu}."""
        li = self.li
        gu = self.Xg.action.ob(g, u)
        Hu, Hgu = li.match[u].hom, li.match[gu].hom
        comps = conjugate_components(self.Ylt, self.Xlt, g,
                                     Hu.components(phiu))
        src = Hu.category.src[phiu]
        tgt = Hu.category.tgt[phiu]
        fam_s = conjugate_family(self.Ylt, self.Xlt, g, Hu.family(src))
        fam_t = conjugate_family(self.Ylt, self.Xlt, g, Hu.family(tgt))
        return Hgu.find_morphism(Hgu.find_object(fam_s),
                                 Hgu.find_object(fam_t), comps)

    def _fu_structure(self) -> GDiagram:
        li = self.li
        FU = li.FU
        H = li.HU.category
        A = self.Xg.action
        pos = {u: n for n, u in enumerate(li.U)}
        S = {}
        for g in self.GU.elements:
            gi = self.GU.inverse(g)
            perm = [pos[A.ob(gi, v)] for v in li.U]
            S[g] = {}
            for p in H.objects:
                src = FU.vertex[p]
                tgt = FU.vertex[self.conj_HU.ob(g, p)]

                def move_obj(n, o):
                    u = li.U[n]
                    x, phiu = o
                    return (self.Xg.structure[g][u].obmap[x],
                            self._move_phi(g, u, phiu))

                ob = {o: tuple(move_obj(n, o[n]) for n in perm)
                      for o in src.objects}
                mo = {}
                for m in src.morphisms:
                    parts = []
                    for n in perm:
                        s, f, t = m[n]
                        u = li.U[n]
                        parts.append((move_obj(n, s),
                                      self.Xg.structure[g][u].mormap[f],
                                      move_obj(n, t)))
                    mo[m] = tuple(parts)
                S[g][p] = Functor(src, tgt, ob, mo)
        return GDiagram(self.conj_HU, FU, S)

    def report(self) -> Report:
        li = self.li
        T = li.theta()
        va = validate_g_action(self.act_R)
        vl = validate_g_action(self.conj_L)
        vf = validate_g_diagram(self.FUg)
        equi = all(
            T.obmap[self.act_R.ob(g, r)] == self.conj_L.ob(g, T.obmap[r])
            for g in self.GU.elements for r in li.R.objects) and all(
            T.mormap[self.act_R.mor(g, m)] == self.conj_L.mor(g, T.mormap[m])
            for g in self.GU.elements for m in li.R.morphisms)
        summary = {"U": [label(u) for u in li.U],
                   "stabilizer_order": self.GU.order,
                   "grothendieck_action_valid": va.ok,
                   "hom_action_valid": vl.ok,
                   "F_U_structure_valid": vf.ok,
                   "theta_equivariant": equi}
        ok = va.ok and vl.ok and vf.ok and equi
        return Report("lemma-iso-equivariance", ok, summary, proxy=False)


def lemma_equivariance_check(Xg: GDiagram, U, budget=None) -> Report:
    return EquivariantLayerInduction(Xg, U, budget).report()


# ---------------------------------------------------------------------------
# nerve comparison

def nerve_conjugation_check(Yg: GDiagram, Xg: GDiagram, hom: DiagramHom,
                            up_to_dim: int = 1) -> Report:
    """N(g·c) agrees with the simplicial conjugate of the map attached to c.

    The simplicial conjugate of f: NY_i × Δ^n -> NX_i is
    N(g_{X,i}) ∘ f ∘ (N((g⁻¹)_{Y,gi}) × id), landing at gi.
    """
    conj = conjugation_action_on_hom(Yg, Xg, hom)
    A, G = Yg.action, Yg.group
    Y, X = Yg.diagram, Xg.diagram
    I = Y.base
    NY = {i: nerve(Y.vertex[i]) for i in I.objects}
    NX = {i: nerve(X.vertex[i]) for i in I.objects}
    rows, ok = [], True
    H = hom.category
    for n in range(up_to_dim + 1):
        Dn = delta_n(n)
        idD = identity_map(Dn)
        P = {i: simplicial_product(NY[i], Dn) for i in I.objects}
        image = _ChainImage(hom, n, P, NX)
        agree = 0
        chains = hom_chains(H, n)
        for g in G.elements:
            gi = G.inverse(g)
            back = {}
            fwd = {}
            for i in I.objects:
                j = A.ob(g, i)
                back[j] = map_product(
                    nerve_map(Yg.structure[gi][j], NY[j], NY[i]), idD,
                    P[j], P[i])
                fwd[i] = nerve_map(Xg.structure[g][i], NX[i], NX[j])
            for c in chains:
                if n == 0:
                    gc = conj.ob(g, c)
                else:
                    gc = tuple(conj.mor(g, m) for m in c)
                lhs = image(gc)
                f = image(c)
                good = True
                for i in I.objects:
                    j = A.ob(g, i)
                    for s, (z, rho) in back[j].images.items():
                        val = fwd[i].apply(NX[i].act(f[i][z], rho))
                        if val != lhs[j][s]:
                            good = False
                agree += good
                ok = ok and good
        rows.append({"dim": n, "chains": len(chains),
                     "elements": G.order, "agreeing": agree})
    return Report("nerve-conjugation", ok, {"dims": up_to_dim}, rows,
                  proxy=False)
