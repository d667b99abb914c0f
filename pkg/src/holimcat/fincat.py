"""Finite categories, functors, natural transformations and diagrams.

Categories are explicit tables: object ids, morphism ids with source and
target, identities, and a total composition table keyed by ``(g, f)`` for
every composable pair (``g`` after ``f``).  Ids are arbitrary hashable values.
Derived constructions (slices, commas, products, ...) build their ids from
the ids of their ingredients, so two constructions of the same thing agree
on the nose.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product as iproduct
from typing import Callable, Iterable, Mapping, Sequence

from .labels import label


class CategoryError(ValueError):
    pass


class NotLeftFinite(CategoryError):
    """A cycle of non-identity morphisms (or a non-identity endomorphism)."""


class UnknownObject(CategoryError, KeyError):
    pass


# ---------------------------------------------------------------------------
# validation reports

@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    witness: tuple = ()

    def to_dict(self):
        return {"kind": self.kind, "detail": self.detail,
                "witness": [label(w) for w in self.witness]}


@dataclass
class ValidationReport:
    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind, detail, *witness):
        self.violations.append(Violation(kind, detail, tuple(witness)))

    def extend(self, other: "ValidationReport"):
        self.violations.extend(other.violations)

    def kinds(self):
        return [v.kind for v in self.violations]

    def to_dict(self):
        return {"subject": self.subject, "ok": self.ok,
                "violations": [v.to_dict() for v in self.violations]}

    def __len__(self):
        return len(self.violations)


# ---------------------------------------------------------------------------
# categories

@dataclass(frozen=True, eq=False)
class FinCategory:
    objects: tuple
    morphisms: tuple
    src: Mapping
    tgt: Mapping
    identity: Mapping
    table: Mapping
    name: str = ""

    @classmethod
    def build(cls, objects: Iterable, arrows: Iterable[tuple],
              identity: Mapping, compose: Callable | Mapping,
              name: str = "") -> "FinCategory":
        """Assemble a category from ``(id, src, tgt)`` triples.

        ``compose`` is either a ready table or a function ``(g, f) -> g∘f``
        evaluated on every composable pair.
        """
        objects = tuple(objects)
        arrows = list(arrows)
        morphisms = tuple(a[0] for a in arrows)
        src = {a[0]: a[1] for a in arrows}
        tgt = {a[0]: a[2] for a in arrows}
        if len(src) != len(morphisms):
            raise CategoryError("duplicate morphism ids")
        if len(set(objects)) != len(objects):
            raise CategoryError("duplicate object ids")
        if callable(compose):
            out = {}
            for o in objects:
                out[o] = []
            for m in morphisms:
                out.setdefault(src[m], []).append(m)
            table = {}
            for f in morphisms:
                for g in out.get(tgt[f], ()):
                    table[(g, f)] = compose(g, f)
        else:
            table = dict(compose)
        return cls(objects, morphisms, src, tgt, dict(identity), table, name)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.src == other.src and self.tgt == other.tgt
                and self.identity == other.identity
                and self.table == other.table)

    def __hash__(self):
        return hash((len(self.objects), len(self.morphisms)))

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return (f"<FinCategory{nm}: {len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms>")

    # -- indexes ------------------------------------------------------------

    @cached_property
    def _object_set(self):
        return frozenset(self.objects)

    @cached_property
    def _identity_set(self):
        return frozenset(self.identity.values())

    @cached_property
    def _homs(self):
        homs = {}
        for m in self.morphisms:
            homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _out(self):
        out = {o: [] for o in self.objects}
        for m in self.morphisms:
            out.setdefault(self.src[m], []).append(m)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def _into(self):
        into = {o: [] for o in self.objects}
        for m in self.morphisms:
            into.setdefault(self.tgt[m], []).append(m)
        return {k: tuple(v) for k, v in into.items()}

    def has_object(self, x) -> bool:
        return x in self._object_set

    def require(self, x):
        if x not in self._object_set:
            raise UnknownObject(f"unknown object {label(x)!r}")
        return x

    def hom(self, a, b) -> tuple:
        return self._homs.get((a, b), ())

    def out_of(self, a) -> tuple:
        return self._out.get(a, ())

    def into(self, b) -> tuple:
        return self._into.get(b, ())

    def is_identity(self, m) -> bool:
        return m in self._identity_set

    def compose(self, g, f):
        """g∘f."""
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CategoryError(
                f"{label(g)} and {label(f)} are not composable") from None

    def compose_path(self, *ms):
        """Compose ``ms[0]∘ms[1]∘...``; at least one morphism."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    @cached_property
    def nonidentity(self) -> tuple:
        return tuple(m for m in self.morphisms if not self.is_identity(m))

    # -- subcategories ------------------------------------------------------

    def subcategory(self, objects: Iterable, morphisms: Iterable,
                    name: str = "") -> "FinCategory":
        objs = set(objects)
        mors = set(morphisms)
        obs = tuple(o for o in self.objects if o in objs)
        ms = tuple(m for m in self.morphisms if m in mors)
        table = {k: v for k, v in self.table.items()
                 if k[0] in mors and k[1] in mors}
        return FinCategory(obs, ms, {m: self.src[m] for m in ms},
                           {m: self.tgt[m] for m in ms},
                           {o: self.identity[o] for o in obs}, table, name)

    def full_subcategory(self, objects: Iterable,
                         name: str = "") -> "FinCategory":
        objs = set(objects)
        for o in objs:
            self.require(o)
        mors = [m for m in self.morphisms
                if self.src[m] in objs and self.tgt[m] in objs]
        return self.subcategory(objs, mors, name)


# ---------------------------------------------------------------------------
# functors and natural transformations

@dataclass(frozen=True, eq=False)
class Functor:
    source: FinCategory
    target: FinCategory
    obmap: Mapping
    mormap: Mapping

    def ob(self, x):
        return self.obmap[x]

    def mor(self, m):
        return self.mormap[m]

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.same_maps(other))

    def __hash__(self):
        return hash(len(self.obmap))

    def same_maps(self, other: "Functor") -> bool:
        return (dict(self.obmap) == dict(other.obmap)
                and dict(self.mormap) == dict(other.mormap))

    def key(self):
        """Hashable graph of the functor, independent of table order."""
        return (frozenset(self.obmap.items()), frozenset(self.mormap.items()))

    def then(self, other: "Functor") -> "Functor":
        """other∘self."""
        return Functor(self.source, other.target,
                       {x: other.obmap[y] for x, y in self.obmap.items()},
                       {m: other.mormap[n] for m, n in self.mormap.items()})

    def __repr__(self):
        return f"<Functor {self.source!r} -> {self.target!r}>"


def identity_functor(C: FinCategory) -> Functor:
    return Functor(C, C, {o: o for o in C.objects},
                   {m: m for m in C.morphisms})


def inclusion_functor(sub: FinCategory, C: FinCategory) -> Functor:
    return Functor(sub, C, {o: o for o in sub.objects},
                   {m: m for m in sub.morphisms})


def constant_functor(C: FinCategory, D: FinCategory, x) -> Functor:
    D.require(x)
    idx = D.identity[x]
    return Functor(C, D, {o: x for o in C.objects},
                   {m: idx for m in C.morphisms})


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G∘F."""
    return F.then(G)


@dataclass(frozen=True, eq=False)
class NatTrans:
    source: Functor
    target: Functor
    components: Mapping

    def __getitem__(self, x):
        return self.components[x]


def check_functor(F: Functor) -> ValidationReport:
    rep = ValidationReport("functor")
    C, D = F.source, F.target
    for o in C.objects:
        if o not in F.obmap:
            rep.add("missing", "object not mapped", o)
        elif not D.has_object(F.obmap[o]):
            rep.add("typing", "object image not in target", o)
    for m in C.morphisms:
        if m not in F.mormap:
            rep.add("missing", "morphism not mapped", m)
    if not rep.ok:
        return rep
    for m in C.morphisms:
        n = F.mormap[m]
        if n not in D.src:
            rep.add("typing", "morphism image not in target", m)
        elif (D.src[n] != F.obmap[C.src[m]]
              or D.tgt[n] != F.obmap[C.tgt[m]]):
            rep.add("typing", "image has wrong source or target", m)
    if not rep.ok:
        return rep
    for o in C.objects:
        if F.mormap[C.identity[o]] != D.identity[F.obmap[o]]:
            rep.add("identity", "identity not preserved", o)
    for (g, f), gf in C.table.items():
        lhs = F.mormap[gf]
        rhs = D.table.get((F.mormap[g], F.mormap[f]))
        if lhs != rhs:
            rep.add("composition", "composite not preserved", g, f)
    return rep


def check_nat_trans(eta: NatTrans) -> ValidationReport:
    rep = ValidationReport("natural transformation")
    F, G = eta.source, eta.target
    if F.source != G.source or F.target != G.target:
        rep.add("typing", "functors have different source or target")
        return rep
    C, D = F.source, F.target
    for o in C.objects:
        c = eta.components.get(o)
        if c is None:
            rep.add("missing", "no component", o)
        elif D.src.get(c) != F.obmap[o] or D.tgt.get(c) != G.obmap[o]:
            rep.add("typing", "component has wrong source or target", o)
    if not rep.ok:
        return rep
    for m in C.morphisms:
        a, b = C.src[m], C.tgt[m]
        lhs = D.table.get((eta.components[b], F.mormap[m]))
        rhs = D.table.get((G.mormap[m], eta.components[a]))
        if lhs != rhs:
            rep.add("naturality", "naturality square fails", m)
    return rep


def is_isomorphism(F: Functor) -> bool:
    if not check_functor(F).ok:
        return False
    C, D = F.source, F.target
    obs = set(F.obmap[o] for o in C.objects)
    ms = set(F.mormap[m] for m in C.morphisms)
    return (len(obs) == len(C.objects) == len(D.objects)
            and len(ms) == len(C.morphisms) == len(D.morphisms))


# ---------------------------------------------------------------------------
# category validation

def validate_category(C: FinCategory) -> ValidationReport:
    rep = ValidationReport(f"category {C.name}".strip())
    objs = set(C.objects)
    for m in C.morphisms:
        if C.src.get(m) not in objs or C.tgt.get(m) not in objs:
            rep.add("typing", "morphism endpoint is not an object", m)
    for o in C.objects:
        i = C.identity.get(o)
        if i is None or i not in C.src:
            rep.add("identity", "object has no identity morphism", o)
        elif C.src[i] != o or C.tgt[i] != o:
            rep.add("identity", "identity is not an endomorphism", o)
    if not rep.ok:
        return rep

    ill_typed = set()
    for (g, f), gf in C.table.items():
        if g not in C.src or f not in C.src or C.tgt[f] != C.src[g]:
            rep.add("typing", "composite defined on non-composable pair", g, f)
            ill_typed.add((g, f))
        elif gf not in C.src or C.src[gf] != C.src[f] or C.tgt[gf] != C.tgt[g]:
            rep.add("typing", "composite has wrong source or target", g, f)
            ill_typed.add((g, f))
    for f in C.morphisms:
        for g in C.out_of(C.tgt[f]):
            if (g, f) not in C.table:
                rep.add("missing", "composable pair has no composite", g, f)
                ill_typed.add((g, f))

    for m in C.morphisms:
        if (m, C.identity[C.src[m]]) in ill_typed or \
                (C.identity[C.tgt[m]], m) in ill_typed:
            continue
        if C.table.get((m, C.identity[C.src[m]])) != m:
            rep.add("unit", "right unit law fails", m)
        if C.table.get((C.identity[C.tgt[m]], m)) != m:
            rep.add("unit", "left unit law fails", m)

    for f in C.morphisms:
        for g in C.out_of(C.tgt[f]):
            if (g, f) in ill_typed:
                continue
            gf = C.table[(g, f)]
            for h in C.out_of(C.tgt[g]):
                if (h, g) in ill_typed or (h, gf) in ill_typed:
                    continue
                hg = C.table[(h, g)]
                if (hg, f) in ill_typed:
                    continue
                if C.table[(h, gf)] != C.table[(hg, f)]:
                    rep.add("associativity", "associativity fails", h, g, f)
    return rep


# ---------------------------------------------------------------------------
# basic constructions

def poset_category(elements: Iterable, order_pairs: Iterable,
                   name: str = "") -> FinCategory:
    """The poset as a category: one morphism ``(x, y)`` for each x ≤ y."""
    elements = tuple(elements)
    elset = set(elements)
    pairs = set()
    for a, b in order_pairs:
        if a not in elset or b not in elset:
            raise CategoryError(f"pair ({label(a)}, {label(b)}) "
                                "mentions an unknown element")
        pairs.add((a, b))
    for x in elements:
        if (x, x) not in pairs:
            raise CategoryError(f"order is not reflexive at {label(x)}")
    for a, b in pairs:
        if a != b and (b, a) in pairs:
            raise CategoryError(
                f"order is not antisymmetric: {label(a)}, {label(b)}")
    up = {x: [] for x in elements}
    for a, b in pairs:
        up[a].append(b)
    for a, b in pairs:
        for c in up[b]:
            if (a, c) not in pairs:
                raise CategoryError(
                    f"order is not transitive: {label(a)} ≤ {label(b)} ≤ "
                    f"{label(c)}")
    pos = {x: n for n, x in enumerate(elements)}
    arrows = sorted(pairs, key=lambda p: (pos[p[0]], pos[p[1]]))
    return FinCategory.build(
        elements, [((a, b), a, b) for a, b in arrows],
        {x: (x, x) for x in elements},
        lambda g, f: (f[0], g[1]), name)


def discrete_category(objects: Iterable, name: str = "") -> FinCategory:
    objects = tuple(objects)
    return poset_category(objects, [(x, x) for x in objects], name)


def terminal_category() -> FinCategory:
    return discrete_category(["*"], "*")


def empty_category() -> FinCategory:
    return FinCategory((), (), {}, {}, {}, {}, "∅")


def interval(n: int) -> FinCategory:
    """The ordinal [n] = {0 < 1 < ... < n}."""
    els = list(range(n + 1))
    return poset_category(els, [(a, b) for a in els for b in els if a <= b],
                          f"[{n}]")


def subsets(ground: Sequence, nonempty: bool = False,
            proper: bool = False) -> list:
    ground = list(ground)
    out = []
    lo = 1 if nonempty else 0
    hi = len(ground) - 1 if proper else len(ground)
    for r in range(lo, hi + 1):
        for c in combinations(ground, r):
            out.append(frozenset(c))
    return out


def subset_poset(ground: Sequence, nonempty: bool = False,
                 proper: bool = False, name: str = "") -> FinCategory:
    """Subsets of ``ground`` ordered by inclusion; ids are frozensets."""
    els = subsets(ground, nonempty, proper)
    pairs = [(a, b) for a in els for b in els if a <= b]
    if not name:
        name = ("P_0" if nonempty else "P") + "(" + ",".join(
            label(g) for g in ground) + ")"
    return poset_category(els, pairs, name)


def product_category(C: FinCategory, D: FinCategory) -> FinCategory:
    return FinCategory.build(
        [(c, d) for c in C.objects for d in D.objects],
        [((f, g), (C.src[f], D.src[g]), (C.tgt[f], D.tgt[g]))
         for f in C.morphisms for g in D.morphisms],
        {(c, d): (C.identity[c], D.identity[d])
         for c in C.objects for d in D.objects},
        lambda q, p: (C.table[(q[0], p[0])], D.table[(q[1], p[1])]),
        f"{C.name}×{D.name}")


def product_of(cats: Sequence[FinCategory]) -> FinCategory:
    """n-ary product with tuple ids; the empty product is a point."""
    cats = list(cats)
    objs = list(iproduct(*[C.objects for C in cats]))
    mors = list(iproduct(*[C.morphisms for C in cats]))
    return FinCategory.build(
        objs,
        [(m, tuple(C.src[x] for C, x in zip(cats, m)),
          tuple(C.tgt[x] for C, x in zip(cats, m))) for m in mors],
        {o: tuple(C.identity[x] for C, x in zip(cats, o)) for o in objs},
        lambda q, p: tuple(C.table[(a, b)] for C, a, b in zip(cats, q, p)),
        "×".join(C.name for C in cats))


def product_projection(P: FinCategory, cats: Sequence[FinCategory],
                       k: int) -> Functor:
    return Functor(P, cats[k], {o: o[k] for o in P.objects},
                   {m: m[k] for m in P.morphisms})


# ---------------------------------------------------------------------------
# slices

def over_category(C: FinCategory, i):
    """C/i: objects are morphisms φ into i, morphisms ``(φ, u, φ')``."""
    C.require(i)
    obs = C.into(i)
    arrows = []
    for p in obs:
        for q in obs:
            for u in C.hom(C.src[p], C.src[q]):
                if C.table[(q, u)] == p:
                    arrows.append(((p, u, q), p, q))
    cat = FinCategory.build(
        obs, arrows, {p: (p, C.identity[C.src[p]], p) for p in obs},
        lambda g, f: (f[0], C.table[(g[1], f[1])], g[2]),
        f"{C.name}/{label(i)}")
    proj = Functor(cat, C, {p: C.src[p] for p in obs},
                   {a[0]: a[0][1] for a in arrows})
    return cat, proj


def under_category(C: FinCategory, i):
    """i/C: objects are morphisms α out of i, morphisms ``(α, w, α')``."""
    C.require(i)
    return _under(C, C.out_of(i), f"{label(i)}/{C.name}")


def strict_under(C: FinCategory, i):
    """i<C: full subcategory of i/C on the non-identity morphisms."""
    C.require(i)
    obs = [a for a in C.out_of(i) if a != C.identity[i]]
    return _under(C, obs, f"{label(i)}<{C.name}")


def _under(C, obs, name):
    arrows = []
    for a in obs:
        for b in obs:
            for w in C.hom(C.tgt[a], C.tgt[b]):
                if C.table[(w, a)] == b:
                    arrows.append(((a, w, b), a, b))
    cat = FinCategory.build(
        obs, arrows, {a: (a, C.identity[C.tgt[a]], a) for a in obs},
        lambda g, f: (f[0], C.table[(g[1], f[1])], g[2]), name)
    proj = Functor(cat, C, {a: C.tgt[a] for a in obs},
                   {x[0]: x[0][1] for x in arrows})
    return cat, proj


def union_under(C: FinCategory, U: Iterable):
    """(U≤C, U<C) for a set U of objects of one degree.

    U≤C is the disjoint union of the under categories u/C; since a morphism
    determines its source, its ids are exactly those of the u/C.  U<C is the
    full subcategory of non-identity maps.
    """
    U = list(U)
    for u in U:
        C.require(u)
    if len(set(U)) != len(U):
        raise CategoryError("U has repeated objects")
    if U:
        deg = degree_function(C)
        ds = {deg[u] for u in U}
        if len(ds) > 1:
            raise CategoryError("U contains objects of unequal degree")
    obs = [a for u in U for a in C.out_of(u)]
    leq, _ = _under(C, obs, "U≤" + C.name)
    lt = leq.full_subcategory(
        [a for a in obs if not C.is_identity(a)], "U<" + C.name)
    return leq, lt


def under_projection(C: FinCategory, sub: FinCategory) -> Functor:
    """Target projection from an under-type category built on C."""
    return Functor(sub, C, {a: C.tgt[a] for a in sub.objects},
                   {x: x[1] for x in sub.morphisms})


# ---------------------------------------------------------------------------
# degrees

def find_cycle(C: FinCategory):
    """A cycle of non-identity morphisms as a list of objects, or None."""
    for m in C.nonidentity:
        if C.src[m] == C.tgt[m]:
            return [C.src[m]]
    graph = {o: set() for o in C.objects}
    for m in C.nonidentity:
        graph[C.tgt[m]].add(C.src[m])
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        return list(exc.args[1])
    return None


def is_loop_free(C: FinCategory) -> bool:
    return find_cycle(C) is None


def topological_order(C: FinCategory) -> list:
    """Objects ordered so every non-identity morphism goes forward.

    Ties keep the category's own object order.
    """
    cyc = find_cycle(C)
    if cyc is not None:
        raise NotLeftFinite(
            f"non-identity cycle through {[label(o) for o in cyc]}")
    indeg = {o: 0 for o in C.objects}
    succ = {o: set() for o in C.objects}
    for m in C.nonidentity:
        a, b = C.src[m], C.tgt[m]
        if b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    order = []
    ready = [o for o in C.objects if indeg[o] == 0]
    pos = {o: n for n, o in enumerate(C.objects)}
    while ready:
        ready.sort(key=pos.__getitem__)
        o = ready.pop(0)
        order.append(o)
        for b in succ[o]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    return order


def degree_function(C: FinCategory) -> dict:
    """Length of the longest chain of non-identity morphisms out of each object."""
    order = topological_order(C)
    deg = {}
    for o in reversed(order):
        deg[o] = max((deg[C.tgt[m]] + 1 for m in C.out_of(o)
                      if not C.is_identity(m)), default=0)
    return {o: deg[o] for o in C.objects}


def filtration(C: FinCategory, n: int):
    """I_{≤n} with its inclusion functor."""
    deg = degree_function(C)
    sub = C.full_subcategory([o for o in C.objects if deg[o] <= n],
                             f"{C.name}≤{n}")
    return sub, inclusion_functor(sub, C)


def layer(C: FinCategory, n: int) -> list:
    """Objects of degree exactly n (a discrete subcategory)."""
    deg = degree_function(C)
    return [o for o in C.objects if deg[o] == n]


# ---------------------------------------------------------------------------
# commas

def comma_over(F: Functor, b):
    """F/b: objects ``(a, φ: F a → b)``, morphisms ``((a,φ), u, (a',φ'))``."""
    C, D = F.source, F.target
    D.require(b)
    obs = [(a, p) for a in C.objects for p in D.hom(F.obmap[a], b)]
    arrows = []
    for x in obs:
        for y in obs:
            for u in C.hom(x[0], y[0]):
                if D.table[(y[1], F.mormap[u])] == x[1]:
                    arrows.append(((x, u, y), x, y))
    cat = FinCategory.build(
        obs, arrows, {x: (x, C.identity[x[0]], x) for x in obs},
        lambda g, f: (f[0], C.table[(g[1], f[1])], g[2]),
        f"F/{label(b)}")
    proj = Functor(cat, C, {x: x[0] for x in obs},
                   {a[0]: a[0][1] for a in arrows})
    return cat, proj


def comma_transport(F: Functor, f, comma_src: FinCategory,
                    comma_tgt: FinCategory) -> Functor:
    """The functor F/b → F/b' induced by f: b → b' (postcomposition)."""
    D = F.target
    obmap = {x: (x[0], D.table[(f, x[1])]) for x in comma_src.objects}
    mormap = {m: (obmap[m[0]], m[1], obmap[m[2]])
              for m in comma_src.morphisms}
    return Functor(comma_src, comma_tgt, obmap, mormap)


# ---------------------------------------------------------------------------
# initial / terminal

def is_initial(C: FinCategory, x) -> bool:
    return all(len(C.hom(x, y)) == 1 for y in C.objects)


def is_terminal(C: FinCategory, x) -> bool:
    return all(len(C.hom(y, x)) == 1 for y in C.objects)


def initial_objects(C: FinCategory) -> list:
    return [x for x in C.objects if is_initial(C, x)]


def terminal_objects(C: FinCategory) -> list:
    return [x for x in C.objects if is_terminal(C, x)]


# ---------------------------------------------------------------------------
# diagrams

@dataclass(frozen=True, eq=False)
class Diagram:
    """A functor from ``base`` into finite categories."""
    base: FinCategory
    vertex: Mapping
    transition: Mapping

    def __repr__(self):
        return f"<Diagram over {self.base!r}>"


def validate_diagram(X: Diagram) -> ValidationReport:
    rep = ValidationReport("diagram")
    I = X.base
    rep.extend(validate_category(I))
    for i in I.objects:
        if i not in X.vertex:
            rep.add("missing", "no vertex category", i)
        else:
            r = validate_category(X.vertex[i])
            for v in r.violations:
                rep.add(v.kind, f"vertex {label(i)}: {v.detail}", *v.witness)
    for m in I.morphisms:
        F = X.transition.get(m)
        if F is None:
            rep.add("missing", "no transition functor", m)
            continue
        if F.source != X.vertex.get(I.src[m]) or \
                F.target != X.vertex.get(I.tgt[m]):
            rep.add("typing", "transition has wrong source or target", m)
            continue
        for v in check_functor(F).violations:
            rep.add(v.kind, f"transition {label(m)}: {v.detail}", *v.witness)
    if not rep.ok:
        return rep
    for o in I.objects:
        if not X.transition[I.identity[o]].same_maps(
                identity_functor(X.vertex[o])):
            rep.add("identity", "identity morphism not sent to identity", o)
    for (g, f), gf in I.table.items():
        if not X.transition[f].then(X.transition[g]).same_maps(
                X.transition[gf]):
            rep.add("composition", "transitions do not compose", g, f)
    return rep


def constant_diagram(base: FinCategory, C: FinCategory) -> Diagram:
    idf = identity_functor(C)
    return Diagram(base, {i: C for i in base.objects},
                   {m: idf for m in base.morphisms})


def restrict_diagram(X: Diagram, P: Functor) -> Diagram:
    """X∘P for a functor P into ``X.base``."""
    return Diagram(P.source, {i: X.vertex[P.obmap[i]] for i in P.source.objects},
                   {m: X.transition[P.mormap[m]] for m in P.source.morphisms})


def restrict_to_subcategory(X: Diagram, sub: FinCategory) -> Diagram:
    return restrict_diagram(X, inclusion_functor(sub, X.base))
