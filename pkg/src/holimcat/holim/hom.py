"""Hom-categories of Cat-valued diagrams and matching functors.

An object of ``Hom(Y, X)`` is a strictly natural family of functors
``Φ_i: Y_i -> X_i``; a morphism is a modification, i.e. natural
transformations ``λ_i: Φ_i => Φ'_i`` with ``X_α λ_i = λ_j Y_α``.
Object ids are canonical: ``frozenset((i, Φ_i.key()))``.
"""

from __future__ import annotations

from ..fincat import (CategoryError, Diagram, FinCategory, Functor,
                      comma_over, comma_transport, interval, is_loop_free,
                      over_category, strict_under,
                      topological_order, restrict_diagram)
from ..labels import label
from ..report import Report
from ..search import as_budget, solve
from ..simpl import (PROXY, delta, delta_n, homology, identity_map,
                     induced_homology_map, map_product, nerve,
                     nerve_chain, nerve_map, nerve_simplex, simplicial_product,
                     _MapCandidates)


def overcat_diagram(I: FinCategory) -> Diagram:
    """i ↦ I/i, with transitions given by postcomposition."""
    vertex = {i: over_category(I, i)[0] for i in I.objects}
    transition = {}
    for a in I.morphisms:
        S, T = vertex[I.src[a]], vertex[I.tgt[a]]
        ob = {p: I.table[(a, p)] for p in S.objects}
        mo = {m: (ob[m[0]], m[1], ob[m[2]]) for m in S.morphisms}
        transition[a] = Functor(S, T, ob, mo)
    return Diagram(I, vertex, transition)


def family_key(fam) -> frozenset:
    return frozenset((i, F.key()) for i, F in fam.items())


def components_key(comps) -> frozenset:
    return frozenset((i, frozenset(c.items())) for i, c in comps.items())


class DiagramHom:
    """Hom(Y, X) together with the data behind its canonical ids."""

    def __init__(self, Y: Diagram, X: Diagram, category: FinCategory,
                 families: dict, modifications: dict):
        self.Y, self.X = Y, X
        self.category = category
        self._families = families
        self._mods = modifications
        self._obj_index = {o: n for n, o in enumerate(category.objects)}
        self._mor_index = {m: n for n, m in enumerate(category.morphisms)}

    def family(self, obj) -> dict:
        return self._families[obj]

    def components(self, mor) -> dict:
        return self._mods[mor]

    def find_object(self, fam):
        k = family_key(fam)
        if k not in self._families:
            raise KeyError("family is not an object of the hom-category")
        return k

    def find_morphism(self, src, tgt, comps):
        m = (src, tgt, components_key(comps))
        if m not in self._mods:
            raise KeyError("components do not form a morphism")
        return m

    def object_index(self, obj) -> int:
        return self._obj_index[obj]

    def morphism_index(self, mor) -> int:
        return self._mor_index[mor]

    def __repr__(self):
        C = self.category
        return f"<Hom {len(C.objects)} objects, {len(C.morphisms)} morphisms>"


def _base_order(I: FinCategory) -> list:
    return topological_order(I) if is_loop_free(I) else list(I.objects)


def _check_same_base(Y: Diagram, X: Diagram):
    if Y.base != X.base:
        raise CategoryError("diagrams live over different base categories")


def natural_families(Y: Diagram, X: Diagram, budget=None):
    """Yield every natural family ``{i: Functor Y_i -> X_i}``."""
    _check_same_base(Y, X)
    I = Y.base
    order = _base_order(I)
    variables = []
    for i in order:
        Yi = Y.vertex[i]
        variables += [("o", i, y) for y in Yi.objects]
        variables += [("m", i, m) for m in Yi.nonidentity]
    pos = {v: n for n, v in enumerate(variables)}

    def value(a, i, m):
        Yi = Y.vertex[i]
        if Yi.is_identity(m):
            return X.vertex[i].identity[a[("o", i, Yi.src[m])]]
        return a[("m", i, m)]

    def deps(i, m):
        Yi = Y.vertex[i]
        if Yi.is_identity(m):
            return [("o", i, Yi.src[m])]
        return [("m", i, m)]

    checks: dict = {}
    forcer: dict = {}

    def register(vs, fn):
        last = max(vs, key=pos.__getitem__)
        checks.setdefault(last, []).append(fn)

    for a in I.nonidentity:
        i, j = I.src[a], I.tgt[a]
        FY, FX = Y.transition[a], X.transition[a]
        for y in Y.vertex[i].objects:
            u, v = ("o", i, y), ("o", j, FY.obmap[y])
            register([u, v], lambda s, u=u, v=v, FX=FX:
                     FX.obmap[s[u]] == s[v])
            if pos[u] < pos[v]:
                forcer.setdefault(v, (u, FX.obmap))
        for m in Y.vertex[i].nonidentity:
            u, m2 = ("m", i, m), FY.mormap[m]
            vs = [u] + deps(j, m2)
            register(vs, lambda s, u=u, j=j, m2=m2, FX=FX:
                     FX.mormap[s[u]] == value(s, j, m2))
            if not Y.vertex[j].is_identity(m2):
                v = ("m", j, m2)
                if pos[u] < pos[v]:
                    forcer.setdefault(v, (u, FX.mormap))
    for i in order:
        Yi, Xi = Y.vertex[i], X.vertex[i]
        for (g, f), gf in Yi.table.items():
            if Yi.is_identity(g) or Yi.is_identity(f):
                continue
            vs = deps(i, g) + deps(i, f) + deps(i, gf)
            register(vs, lambda s, i=i, g=g, f=f, gf=gf, Xi=Xi:
                     Xi.table.get((value(s, i, g), value(s, i, f)))
                     == value(s, i, gf))

    def candidates(var, a):
        if var in forcer:
            u, mp = forcer[var]
            return (mp[a[u]],)
        kind, i, z = var
        Xi = X.vertex[i]
        if kind == "o":
            return Xi.objects
        Yi = Y.vertex[i]
        return Xi.hom(a[("o", i, Yi.src[z])], a[("o", i, Yi.tgt[z])])

    for sol in solve(variables, candidates, checks, budget):
        fam = {}
        for i in I.objects:
            Yi, Xi = Y.vertex[i], X.vertex[i]
            ob = {y: sol[("o", i, y)] for y in Yi.objects}
            mo = {m: value(sol, i, m) for m in Yi.morphisms}
            fam[i] = Functor(Yi, Xi, ob, mo)
        yield fam


def modifications(Y: Diagram, X: Diagram, P: dict, Q: dict, budget=None):
    """Yield every modification P => Q as ``{i: {y: morphism}}``."""
    I = Y.base
    order = _base_order(I)
    variables = [("c", i, y) for i in order for y in Y.vertex[i].objects]
    pos = {v: n for n, v in enumerate(variables)}
    checks: dict = {}
    forcer: dict = {}

    def register(vs, fn):
        last = max(vs, key=pos.__getitem__)
        checks.setdefault(last, []).append(fn)

    for i in order:
        Yi, Xi = Y.vertex[i], X.vertex[i]
        for m in Yi.nonidentity:
            u, v = ("c", i, Yi.src[m]), ("c", i, Yi.tgt[m])
            pm, qm = P[i].mormap[m], Q[i].mormap[m]
            register([u, v], lambda s, u=u, v=v, pm=pm, qm=qm, Xi=Xi:
                     Xi.table[(s[v], pm)] == Xi.table[(qm, s[u])])
    for a in I.nonidentity:
        i, j = I.src[a], I.tgt[a]
        FY, FX = Y.transition[a], X.transition[a]
        for y in Y.vertex[i].objects:
            u, v = ("c", i, y), ("c", j, FY.obmap[y])
            register([u, v], lambda s, u=u, v=v, FX=FX:
                     FX.mormap[s[u]] == s[v])
            if pos[u] < pos[v]:
                forcer.setdefault(v, (u, FX.mormap))

    def candidates(var, a):
        if var in forcer:
            u, mp = forcer[var]
            return (mp[a[u]],)
        _, i, y = var
        return X.vertex[i].hom(P[i].obmap[y], Q[i].obmap[y])

    for sol in solve(variables, candidates, checks, budget):
        yield {i: {y: sol[("c", i, y)] for y in Y.vertex[i].objects}
               for i in I.objects}


def hom_category(Y: Diagram, X: Diagram, budget=None,
                 name: str = "Hom") -> DiagramHom:
    """Natural families as objects, modifications as morphisms."""
    budget = as_budget(budget)
    I = Y.base
    families = {}
    for fam in natural_families(Y, X, budget):
        families[family_key(fam)] = fam
    objs = list(families)
    mods = {}
    arrows = []
    for p in objs:
        for q in objs:
            for comps in modifications(Y, X, families[p], families[q],
                                       budget):
                m = (p, q, components_key(comps))
                mods[m] = comps
                arrows.append((m, p, q))
    identity = {}
    for p in objs:
        comps = {i: {y: X.vertex[i].identity[F.obmap[y]]
                     for y in Y.vertex[i].objects}
                 for i, F in families[p].items()}
        identity[p] = (p, p, components_key(comps))

    def compose(g, f):
        cg, cf = mods[g], mods[f]
        comps = {i: {y: X.vertex[i].table[(cg[i][y], cf[i][y])]
                     for y in Y.vertex[i].objects} for i in I.objects}
        return (f[0], g[1], components_key(comps))

    cat = FinCategory.build(objs, arrows, identity, compose, name)
    return DiagramHom(Y, X, cat, families, mods)


# ---------------------------------------------------------------------------
# matching functors

class Matching:
    """m_i: X_i -> Hom((i<I)/(−), X_{i<}) with its ingredients."""

    def __init__(self, X: Diagram, i, hom: DiagramHom | None = None,
                 budget=None):
        I = X.base
        I.require(i)
        topological_order(I)
        self.X, self.i = X, i
        self.lt, self.proj = strict_under(I, i)
        self.Xlt = restrict_diagram(X, self.proj)
        if hom is None:
            hom = hom_category(overcat_diagram(self.lt), self.Xlt, budget,
                               f"Hom({label(i)}<)")
        self.hom = hom
        self.functor = self._build()

    def _build(self) -> Functor:
        X, H, lt = self.X, self.hom, self.lt
        Y = H.Y
        Xi = X.vertex[self.i]
        obmap = {}
        for x in Xi.objects:
            fam = {}
            for a in lt.objects:
                T = X.vertex[self.proj.obmap[a]]
                v = X.transition[a].obmap[x]
                S = Y.vertex[a]
                fam[a] = Functor(S, T, {o: v for o in S.objects},
                                 {m: T.identity[v] for m in S.morphisms})
            obmap[x] = H.find_object(fam)
        mormap = {}
        for f in Xi.morphisms:
            comps = {a: {o: X.transition[a].mormap[f]
                         for o in Y.vertex[a].objects} for a in lt.objects}
            mormap[f] = H.find_morphism(obmap[Xi.src[f]], obmap[Xi.tgt[f]],
                                        comps)
        return Functor(Xi, H.category, obmap, mormap)


def matching_functor(X: Diagram, i, hom: DiagramHom | None = None,
                     budget=None) -> Functor:
    return Matching(X, i, hom, budget).functor


def matching_hom(X: Diagram, i, budget=None) -> DiagramHom:
    return Matching(X, i, budget=budget).hom


class CommaCache:
    """Memoized commas m/Φ, their nerves and homology, keyed by Φ."""

    def __init__(self, m: Functor):
        self.m = m
        self._cat, self._nerve, self._hom = {}, {}, {}

    def category(self, phi) -> FinCategory:
        if phi not in self._cat:
            self._cat[phi] = comma_over(self.m, phi)[0]
        return self._cat[phi]

    def nerve(self, phi):
        if phi not in self._nerve:
            self._nerve[phi] = nerve(self.category(phi))
        return self._nerve[phi]

    def homology(self, phi):
        if phi not in self._hom:
            self._hom[phi] = homology(self.nerve(phi))
        return self._hom[phi]

    def transport(self, lam) -> Functor:
        H = self.m.target
        p, q = H.src[lam], H.tgt[lam]
        return comma_transport(self.m, lam, self.category(p),
                               self.category(q))


def matching_rows(m: Functor, obj_label: str, cache: CommaCache | None = None,
                  hom: DiagramHom | None = None) -> list:
    """One proxy verdict per morphism of the matching target."""
    cache = cache or CommaCache(m)
    H = m.target
    oidx = {o: n for n, o in enumerate(H.objects)}
    rows = []
    for n, lam in enumerate(H.morphisms):
        p, q = H.src[lam], H.tgt[lam]
        F = cache.transport(lam)
        eq = induced_homology_map(
            nerve_map(F, cache.nerve(p), cache.nerve(q)), matrices=False)
        rows.append({
            "object": obj_label,
            "morphism": n,
            "source": oidx[p],
            "target": oidx[q],
            "identity": H.is_identity(lam),
            "verdict": eq.verdict,
            "test": PROXY,
            "source_comma": {"objects": len(cache.category(p).objects),
                             "homology": cache.homology(p).to_dict()},
            "target_comma": {"objects": len(cache.category(q).objects),
                             "homology": cache.homology(q).to_dict()},
            "pi0_bijection": eq.pi0_bijection,
            "cone": eq.cone.to_dict(),
        })
    return rows


def reedy_qf_check(X: Diagram, budget=None) -> Report:
    """Every m_i/(−) sends every morphism to a homology-proxy equivalence."""
    budget = as_budget(budget)
    I = X.base
    topological_order(I)
    rows, per_object = [], {}
    for i in I.objects:
        M = Matching(X, i, budget=budget)
        r = matching_rows(M.functor, label(i))
        rows.extend(r)
        per_object[label(i)] = {
            "hom_objects": len(M.hom.category.objects),
            "hom_morphisms": len(M.hom.category.morphisms),
            "passed": all(x["verdict"] for x in r)}
    failures = [r for r in rows if not r["verdict"]]
    rep = Report("reedy", not failures,
                 {"objects": len(I.objects), "checks": len(rows),
                  "failures": len(failures), "per_object": per_object},
                 rows)
    for f in failures:
        rep.notes.append(f"object {f['object']}: morphism {f['morphism']} "
                         f"({f['source']} -> {f['target']}) is not an "
                         f"equivalence")
    return rep


# ---------------------------------------------------------------------------
# nerve of Hom(Y, X) versus the simplicial mapping space

def hom_chains(C: FinCategory, n: int) -> list:
    """All n-simplices of NC, degenerate included, as morphism tuples.

    For n = 0 the entries are objects.
    """
    if n == 0:
        return list(C.objects)
    chains = [(m,) for m in C.morphisms]
    for _ in range(n - 1):
        chains = [c + (g,) for c in chains for g in C.out_of(C.tgt[c[-1]])]
    return chains


def _chain_face(C: FinCategory, n: int, c, k: int):
    if n == 1:
        return C.tgt[c[0]] if k == 0 else C.src[c[0]]
    if k == 0:
        return c[1:]
    if k == n:
        return c[:-1]
    return c[:k - 1] + (C.table[(c[k], c[k - 1])],) + c[k + 1:]


class _ChainImage:
    """The natural family NY_i × Δ^n -> NX_i attached to an n-chain of Hom."""

    def __init__(self, hom: DiagramHom, n: int, P: dict, NX: dict):
        self.hom, self.n, self.P, self.NX = hom, n, P, NX

    def __call__(self, chain) -> dict:
        H = self.hom.category
        Y, X = self.hom.Y, self.hom.X
        n = self.n
        if n == 0:
            objs, mors = [chain], []
        else:
            objs = [H.src[chain[0]]] + [H.tgt[m] for m in chain]
            mors = list(chain)

        def between(k, k2):
            m = H.identity[objs[k]]
            for t in range(k, k2):
                m = H.table[(mors[t], m)]
            return m

        fams = [self.hom.family(o) for o in objs]
        out = {}
        for i in Y.base.objects:
            Yi, Xi = Y.vertex[i], X.vertex[i]
            imgs = {}
            for s, d in self.P[i].dim_of.items():
                x, y = s
                oy, my = nerve_chain(Yi, x)
                ok, _ = nerve_chain(interval(n), y)
                start = fams[ok[0]][i].obmap[oy[0]]
                ms = []
                for t in range(d):
                    u, k, k2 = my[t], ok[t], ok[t + 1]
                    lam = self.hom.components(between(k, k2))[i][oy[t]]
                    ms.append(Xi.table[(fams[k2][i].mormap[u], lam)])
                imgs[s] = (nerve_simplex(Xi, start, ms) if d else
                           (start, (0,)))
            out[i] = imgs
        return out


def _images_key(imgs: dict) -> frozenset:
    return frozenset((i, frozenset(v.items())) for i, v in imgs.items())


def natural_simplicial_families(base: FinCategory, P: dict, NX: dict,
                                PY: dict, NXm: dict, budget=None) -> list:
    """All natural families of simplicial maps P_i -> NX_i."""
    order = _base_order(base)
    cand = {i: _MapCandidates(P[i], NX[i]) for i in base.objects}
    top = max((P[i].dim for i in base.objects), default=-1)
    variables = [(i, s) for d in range(top + 1) for i in order
                 if d <= P[i].dim for s in P[i].simplices[d]]
    pos = {v: n for n, v in enumerate(variables)}
    checks: dict = {}
    for a in base.nonidentity:
        i, j = base.src[a], base.tgt[a]
        fY, fX = PY[a], NXm[a]
        for s in P[i].dim_of:
            z, rho = fY.images[s]
            u, v = (i, s), (j, z)
            last = u if pos[u] > pos[v] else v
            checks.setdefault(last, []).append(
                lambda A, u=u, v=v, rho=rho, fX=fX, j=j:
                fX.apply(A[u]) == NX[j].act(A[v], rho))

    def candidates(var, A):
        i, s = var
        return cand[i](s, lambda z: A[(i, z)])

    out = []
    for sol in solve(variables, candidates, checks, budget):
        fam = {i: {} for i in base.objects}
        for (i, s), x in sol.items():
            fam[i][s] = x
        out.append(fam)
    return out


def lydakis_check(Y: Diagram, X: Diagram, up_to_dim: int = 2, budget=None,
                  hom: DiagramHom | None = None) -> Report:
    """Compare n-simplices of N Hom(Y,X) with natural maps NY × Δ^n -> NX."""
    budget = as_budget(budget)
    hom = hom or hom_category(Y, X, budget)
    H = hom.category
    I = Y.base
    NY = {i: nerve(Y.vertex[i]) for i in I.objects}
    NX = {i: nerve(X.vertex[i]) for i in I.objects}
    NYm = {a: nerve_map(Y.transition[a], NY[I.src[a]], NY[I.tgt[a]])
           for a in I.nonidentity}
    NXm = {a: nerve_map(X.transition[a], NX[I.src[a]], NX[I.tgt[a]])
           for a in I.nonidentity}
    rows, ok = [], True
    prev = None
    for n in range(up_to_dim + 1):
        Dn = delta_n(n)
        idD = identity_map(Dn)
        P = {i: simplicial_product(NY[i], Dn) for i in I.objects}
        PY = {a: map_product(NYm[a], idD, P[I.src[a]], P[I.tgt[a]])
              for a in I.nonidentity}
        right = natural_simplicial_families(I, P, NX, PY, NXm, budget)
        right_keys = {_images_key(f) for f in right}
        chains = hom_chains(H, n)
        image = _ChainImage(hom, n, P, NX)
        imgs = {c: image(c) for c in chains}
        left_keys = {_images_key(v) for v in imgs.values()}
        bijective = (len(left_keys) == len(chains)
                     and left_keys == right_keys)
        faces_ok = True
        if n and prev is not None:
            pimgs, pP = prev
            for k in range(n + 1):
                Dk = _coface_map(n, k)
                pre = {i: map_product(identity_map(NY[i]), Dk, pP[i], P[i])
                       for i in I.objects}
                for c in chains:
                    face = pimgs[_chain_face(H, n, c, k)]
                    for i in I.objects:
                        for s2, g in pre[i].images.items():
                            z, rho = g
                            if NX[i].act(imgs[c][i][z], rho) != face[i][s2]:
                                faces_ok = False
        row = {"dim": n, "nerve_simplices": len(chains),
               "natural_maps": len(right), "bijection": bijective,
               "faces_compatible": faces_ok}
        ok = ok and bijective and faces_ok
        rows.append(row)
        prev = (imgs, P)
    return Report("lydakis", ok,
                  {"hom_objects": len(H.objects),
                   "hom_morphisms": len(H.morphisms),
                   "dims": up_to_dim}, rows, proxy=False)


def _coface_map(n: int, k: int):
    """δ_k: Δ^{n-1} -> Δ^n as a simplicial map of nerves."""
    src, tgt = interval(n - 1), interval(n)
    d = delta(n, k)
    ob = {t: d[t] for t in src.objects}
    mo = {m: (d[src.src[m]], d[src.tgt[m]]) for m in src.morphisms}
    F = Functor(src, tgt, ob, mo)
    return nerve_map(F, delta_n(n - 1), delta_n(n))
