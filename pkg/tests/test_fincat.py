from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holimcat.fincat import (CategoryError, Diagram, FinCategory, Functor,
                             NotLeftFinite, check_functor, comma_over,
                             constant_diagram, degree_function,
                             discrete_category, identity_functor,
                             initial_objects, interval, is_initial, layer,
                             over_category, poset_category, product_category,
                             strict_under, subset_poset, terminal_category,
                             terminal_objects, topological_order,
                             under_category, union_under, validate_category,
                             validate_diagram)
from holimcat.io import InputError, category_from_json, load_document

from helpers import FIXTURES, const_functor, fs, product_square


@st.composite
def posets(draw, max_size=6):
    """A random finite poset on range(n), by transitive closure of a DAG."""
    n = draw(st.integers(1, max_size))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1),
                                   st.integers(0, n - 1))))
    leq = {(a, a) for a in range(n)} | {(a, b) for a, b in edges if a < b}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(leq), list(leq)):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return list(range(n)), leq


@settings(max_examples=60, deadline=None)
@given(posets())
def test_random_posets_are_categories(p):
    els, leq = p
    C = poset_category(els, leq)
    assert validate_category(C).ok
    assert len(C.morphisms) == len(leq)
    for f, g, h in product(C.morphisms, repeat=3):
        if C.tgt[f] == C.src[g] and C.tgt[g] == C.src[h]:
            assert C.compose(h, C.compose(g, f)) == \
                C.compose(C.compose(h, g), f)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_degree_is_longest_strict_chain_up(p):
    els, leq = p
    C = poset_category(els, leq)

    def longest(x):
        above = [y for y in els if y != x and (x, y) in leq]
        return max((1 + longest(y) for y in above), default=0)

    deg = degree_function(C)
    assert deg == {x: longest(x) for x in els}
    order = topological_order(C)
    pos = {x: k for k, x in enumerate(order)}
    assert all(pos[a] <= pos[b] for a, b in leq)


@settings(max_examples=40, deadline=None)
@given(posets(max_size=5))
def test_slices_match_down_and_up_sets(p):
    els, leq = p
    C = poset_category(els, leq)
    for x in els:
        assert len(over_category(C, x)[0].objects) == \
            sum((y, x) in leq for y in els)
        assert len(under_category(C, x)[0].objects) == \
            sum((x, y) in leq for y in els)
        assert len(strict_under(C, x)[0].objects) == \
            sum((x, y) in leq for y in els if y != x)
        ident = identity_functor(C)
        assert len(comma_over(ident, x)[0].objects) == \
            len(over_category(C, x)[0].objects)


def test_subset_poset_shapes():
    P = subset_poset([1, 2, 3])
    assert len(P.objects) == 8 and len(P.morphisms) == 27
    P0 = subset_poset([1, 2, 3], nonempty=True)
    assert len(P0.objects) == 7
    assert initial_objects(P) == [fs()]
    assert terminal_objects(P0) == [fs(1, 2, 3)]
    assert initial_objects(P0) == []
    assert sorted(map(sorted, layer(P0, 1))) == [[1, 2], [1, 3], [2, 3]]
    assert layer(P0, 2) == [fs(1), fs(2), fs(3)]


def test_product_counts_and_initial():
    C = product_category(interval(1), interval(2))
    assert len(C.objects) == 6
    assert len(C.morphisms) == 3 * 6
    assert validate_category(C).ok
    assert is_initial(C, (0, 0))


def test_union_under_is_union_of_unders():
    P0 = subset_poset([1, 2, 3], nonempty=True)
    U = layer(P0, 1)
    leq, lt = union_under(P0, U)
    assert validate_category(leq).ok and validate_category(lt).ok
    assert len(leq.objects) == sum(len(under_category(P0, u)[0].objects)
                                   for u in U)
    assert len(lt.objects) == sum(len(strict_under(P0, u)[0].objects)
                                  for u in U)


def test_poset_errors():
    with pytest.raises(CategoryError):
        poset_category([1, 2], [(1, 1), (2, 2), (1, 2), (2, 1)])
    with pytest.raises(CategoryError):
        poset_category([1, 2], [(1, 2)])
    with pytest.raises(CategoryError):
        poset_category([1, 2, 3], [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)])


def test_broken_table_is_reported():
    kind, C, _ = load_document(FIXTURES / "broken_table.json")
    rep = validate_category(C)
    assert not rep.ok
    assert {v.kind for v in rep.violations} >= {"typing"}
    kind, C, _ = load_document(FIXTURES / "triangle.json")
    assert validate_category(C).ok and len(C.morphisms) == 6


def test_idempotent_is_not_left_finite():
    C = category_from_json({"objects": ["a"], "morphisms": [["e", "a", "a"]],
                            "compose": [["e", "e", "e"]]})
    assert validate_category(C).ok
    with pytest.raises(NotLeftFinite):
        topological_order(C)


def test_table_associativity_violation_detected():
    base = category_from_json({"objects": ["a"],
                               "morphisms": [["e", "a", "a"],
                                             ["f", "a", "a"]],
                               "compose": [["e", "e", "f"], ["f", "f", "e"],
                                           ["e", "f", "e"], ["f", "e", "e"]]})
    rep = validate_category(base)
    assert not rep.ok


def test_bad_functor_detected():
    one, pt = interval(1), terminal_category()
    F = const_functor(one, pt, "*")
    assert check_functor(F).ok
    back = Functor(one, one, {0: 1, 1: 0}, {(0, 0): (1, 1), (1, 1): (0, 0),
                                            (0, 1): (1, 0)})
    assert not check_functor(back).ok


def test_diagram_validation():
    assert validate_diagram(product_square()).ok
    X = constant_diagram(interval(1), discrete_category(["a", "b"]))
    assert validate_diagram(X).ok
    one = interval(1)
    flip = Functor(one, one, {0: 0, 1: 0}, {(0, 0): (0, 0), (1, 1): (0, 0),
                                            (0, 1): (0, 0)})
    tr = dict(constant_diagram(one, one).transition)
    tr[(0, 0)] = flip
    assert not validate_diagram(Diagram(one, {0: one, 1: one}, tr)).ok


def test_unknown_json_shape():
    with pytest.raises(InputError):
        category_from_json({"nonsense": 1})


def test_category_equality_is_structural():
    assert subset_poset([1, 2]) == subset_poset([1, 2])
    assert isinstance(interval(2), FinCategory)
    assert interval(1) != interval(2)
