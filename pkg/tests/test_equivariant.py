import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holimcat.equivariant import (EquivariantMatching, GDiagram,
                                  conjugation_action_on_hom, cyclic_group,
                                  degree_is_invariant,
                                  equivariant_reedy_check, fixed_category,
                                  fixed_hom_category, group_from_table,
                                  lemma_equivariance_check,
                                  nerve_conjugation_check, overcat_g_diagram,
                                  stabilizer, subgroups, symmetric_group,
                                  trivial_g_diagram, validate_g_action,
                                  validate_g_diagram, validate_group)
from holimcat.fincat import (CategoryError, Diagram, Functor,
                             discrete_category, identity_functor, interval,
                             layer, validate_diagram)
from holimcat.holim import hom_category, reedy_qf_check

from helpers import (c2_square, c2_twisted, const_functor, const_square,
                     fs, swap_action)


@pytest.mark.parametrize("G,count", [
    (cyclic_group(1), 1), (cyclic_group(6), 4), (cyclic_group(4), 3),
    (symmetric_group(3), 6), (symmetric_group(4), 30),
])
def test_subgroup_counts(G, count):
    assert validate_group(G).ok
    subs = subgroups(G)
    assert len(subs) == count
    assert all(validate_group(H).ok for H in subs)
    assert all(G.order % H.order == 0 for H in subs)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 9), st.data())
def test_cyclic_inverses(n, data):
    G = cyclic_group(n)
    g = data.draw(st.sampled_from(G.elements))
    assert G.mul(g, G.inverse(g)) == G.identity
    assert G.inverse(G.inverse(g)) == g


def test_bad_table_is_not_a_group():
    G = group_from_table(["e", "a"], [["e", "a"], ["a", "a"]])
    assert not validate_group(G).ok


def test_swap_action_and_fixed_category():
    X = const_square(interval(1))
    A = swap_action(X.base)
    assert validate_g_action(A).ok
    assert degree_is_invariant(A)
    F = fixed_category(A)
    assert F.objects == (fs(1, 2),)
    assert stabilizer(A, [fs(1), fs(2)]).order == 2
    assert stabilizer(A, [fs(1)]).order == 1
    B = swap_action(const_square(interval(1), (1, 2, 3)).base)
    assert set(fixed_category(B).objects) == {fs(3), fs(1, 2), fs(1, 2, 3)}
    assert len(fixed_category(B).morphisms) == 5


def test_g_diagram_validators():
    assert validate_g_diagram(c2_square()).ok
    assert validate_g_diagram(c2_twisted()).ok


def test_broken_structure_maps_are_caught():
    Xg = c2_twisted()
    D = discrete_category(["a", "b"])
    structure = {0: dict(Xg.structure[0]), 1: dict(Xg.structure[1])}
    # flip at one vertex only: naturality against transitions fails
    structure[1][fs(1)] = identity_functor(D)
    bad = GDiagram(Xg.action, Xg.diagram, structure)
    assert not validate_g_diagram(bad).ok


def test_non_invariant_diagram_rejected():
    """X_{1} = [2] but X_{2} = [1]: identities cannot be structure maps."""
    X = const_square(interval(1))
    one, two = interval(1), interval(2)
    verts = dict(X.vertex)
    verts[fs(1)] = two
    trans = dict(X.transition)
    trans[(fs(1), fs(1))] = identity_functor(two)
    trans[(fs(1), fs(1, 2))] = const_functor(two, one, 0)
    Y = Diagram(X.base, verts, trans)
    assert validate_diagram(Y).ok
    rep = validate_g_diagram(trivial_g_diagram(swap_action(X.base), Y))
    assert not rep.ok
    assert {v.kind for v in rep.violations} == {"typing"}


@pytest.mark.parametrize("make", [c2_square, c2_twisted])
def test_conjugation_is_an_action(make):
    Xg = make()
    Yg = overcat_g_diagram(Xg.action)
    assert validate_g_diagram(Yg).ok
    hom = hom_category(Yg.diagram, Xg.diagram)
    conj = conjugation_action_on_hom(Yg, Xg, hom)
    assert validate_g_action(conj).ok
    assert nerve_conjugation_check(Yg, Xg, hom).passed
    fixed = fixed_hom_category(Yg, Xg, hom)
    assert set(fixed.objects) <= set(hom.category.objects)


def test_twisted_conjugation_moves_objects():
    Xg = c2_twisted()
    Yg = overcat_g_diagram(Xg.action)
    hom = hom_category(Yg.diagram, Xg.diagram)
    conj = conjugation_action_on_hom(Yg, Xg, hom)
    moved = [p for p in hom.category.objects if conj.ob(1, p) != p]
    assert moved
    # the twisted action on the constant {a,b} square has no fixed points
    assert fixed_hom_category(Yg, Xg, hom).objects == ()


@pytest.mark.parametrize("make", [c2_square, c2_twisted])
def test_equivariant_matching(make):
    Xg = make()
    rep = equivariant_reedy_check(Xg)
    assert rep.passed
    for i in fixed_category(Xg.action).objects:
        E = EquivariantMatching(Xg, i)
        assert E.equivariant and E.lands_in_fixed


def test_trivial_subgroup_rows_match_plain_check():
    Xg = c2_twisted()
    eq = equivariant_reedy_check(Xg)
    block = next(b for b in eq.rows if b["order"] == 1)
    assert block["rows"] == reedy_qf_check(Xg.diagram).rows


@pytest.mark.parametrize("make", [c2_square, c2_twisted])
def test_layer_induction_commutes_with_action(make):
    Xg = make()
    rep = lemma_equivariance_check(Xg, layer(Xg.diagram.base, 1))
    assert rep.passed
    assert rep.summary["stabilizer_order"] == 2


def test_conjugation_needs_same_base():
    Xg = c2_square()
    other = trivial_g_diagram(
        swap_action(const_square(interval(1), (1, 2, 3)).base),
        const_square(interval(1), (1, 2, 3)))
    hom = hom_category(overcat_g_diagram(Xg.action).diagram, Xg.diagram)
    with pytest.raises(CategoryError):
        conjugation_action_on_hom(other, Xg, hom)


def test_identity_structure_is_unit():
    Xg = c2_twisted()
    for i, F in Xg.structure[0].items():
        assert isinstance(F, Functor)
        assert F.same_maps(identity_functor(Xg.diagram.vertex[i]))
