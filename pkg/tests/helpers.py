"""Small fixture builders shared by the test modules."""

from pathlib import Path

from holimcat.equivariant import (CategoryGAction, GDiagram, cyclic_group,
                                  trivial_g_diagram)
from holimcat.fincat import (Diagram, Functor, constant_diagram,
                             discrete_category, identity_functor, interval,
                             poset_category, product_category, subset_poset,
                             terminal_category)
from holimcat.holim import cospan_diagram

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fs(*xs):
    return frozenset(xs)


def const_functor(S, T, x):
    return Functor(S, T, {o: x for o in S.objects},
                   {m: T.identity[x] for m in S.morphisms})


def inclusion(S, T, obmap):
    """Functor between posets given on objects."""
    return Functor(S, T, dict(obmap),
                   {m: (obmap[S.src[m]], obmap[S.tgt[m]])
                    for m in S.morphisms})


def punctured(ground):
    return subset_poset(ground, nonempty=True)


def const_square(C, ground=(1, 2)):
    return constant_diagram(punctured(list(ground)), C)


def product_square():
    """A × B over the full square, feet A and B, apex a point."""
    A, B, pt = interval(1), interval(1), terminal_category()
    AB = product_category(A, B)
    I = subset_poset([1, 2])
    e, a, b, ab = fs(), fs(1), fs(2), fs(1, 2)
    vertex = {e: AB, a: A, b: B, ab: pt}
    tr = {(e, a): Functor(AB, A, {o: o[0] for o in AB.objects},
                          {m: m[0] for m in AB.morphisms}),
          (e, b): Functor(AB, B, {o: o[1] for o in AB.objects},
                          {m: m[1] for m in AB.morphisms}),
          (a, ab): const_functor(A, pt, "*"),
          (b, ab): const_functor(B, pt, "*")}
    return _fill(I, vertex, tr)


def empty_square():
    """Same shape with X_∅ empty: its total fiber is empty."""
    from holimcat.fincat import empty_category
    A, B, pt = interval(1), interval(1), terminal_category()
    E = empty_category()
    I = subset_poset([1, 2])
    e, a, b, ab = fs(), fs(1), fs(2), fs(1, 2)
    vertex = {e: E, a: A, b: B, ab: pt}
    tr = {(e, a): Functor(E, A, {}, {}), (e, b): Functor(E, B, {}, {}),
          (a, ab): const_functor(A, pt, "*"),
          (b, ab): const_functor(B, pt, "*")}
    return _fill(I, vertex, tr)


def _fill(I, vertex, tr):
    tr = dict(tr)
    for o in I.objects:
        tr[I.identity[o]] = identity_functor(vertex[o])
    changed = True
    while changed:
        changed = False
        for (g, f), gf in I.table.items():
            if gf not in tr and g in tr and f in tr:
                tr[gf] = tr[f].then(tr[g])
                changed = True
    return Diagram(I, vertex, tr)


def point_cube(n):
    """Constant point over P_0({1..n, +})."""
    return constant_diagram(punctured(list(range(1, n + 1)) + ["+"]),
                            terminal_category())


def swap_action(I):
    """C2 acting on a subset poset of {1, 2, ...} by swapping 1 and 2."""
    G = cyclic_group(2)
    sw = {1: 2, 2: 1}

    def move(S):
        return frozenset(sw.get(x, x) for x in S)

    ob = {S: move(S) for S in I.objects}
    flip = inclusion(I, I, ob)
    return CategoryGAction(G, I, {0: identity_functor(I), 1: flip})


def c2_square(C=None):
    """Trivial G-diagram: constant C on P_0({1,2}) with the swap action."""
    X = const_square(C if C is not None else interval(1))
    return trivial_g_diagram(swap_action(X.base), X)


def c2_twisted():
    """Constant discrete {a,b} on P_0({1,2}); g acts by a ↔ b at every vertex.

    The structure maps are not identities, so conjugation is exercised.
    """
    D = discrete_category(["a", "b"])
    X = const_square(D)
    A = swap_action(X.base)
    idf = identity_functor(D)
    flip = Functor(D, D, {"a": "b", "b": "a"},
                   {("a", "a"): ("b", "b"), ("b", "b"): ("a", "a")})
    structure = {0: {i: idf for i in X.base.objects},
                 1: {i: flip for i in X.base.objects}}
    return GDiagram(A, X, structure)


def cospan_base_poset():
    return poset_category(["c", "d", "e"], [("c", "c"), ("d", "d"),
                                            ("e", "e"), ("c", "d"),
                                            ("e", "d")])


def cospans():
    """(name, f, g) for the cospan fixtures used across the suite."""
    one = interval(1)
    p0, p1 = discrete_category([0]), discrete_category([1])
    pt = terminal_category()
    return [
        ("points", inclusion(p0, one, {0: 0}), inclusion(p1, one, {1: 1})),
        ("identities", identity_functor(one), identity_functor(one)),
        ("to-point", const_functor(one, pt, "*"),
         const_functor(p0, pt, "*")),
    ]


def cospan_fixture(name):
    for n, f, g in cospans():
        if n == name:
            return cospan_diagram(f, g)
    raise KeyError(name)
