from itertools import product

import pytest

from holimcat.fincat import (Diagram, check_functor, comma_over,
                             constant_diagram, discrete_category,
                             identity_functor, interval, layer,
                             product_category, subset_poset,
                             terminal_category, validate_category)
from holimcat.holim import (LayerInduction, Matching, barwick_kan,
                            cube_cartesian_check, cube_initial,
                            expected_conditions, grothendieck, hom_category,
                            holim_model, lambda_cofinality_check,
                            lambda_functor, lambda_initial_check,
                            lemma_indgrot_iso, lydakis_check,
                            overcat_diagram, reedy_qf_check,
                            theorem_bn_conditions)
from holimcat.search import Budget, SearchBudgetExceeded

from helpers import (const_square, cospans, empty_square, fs,
                     inclusion, point_cube, product_square)


def functor_count(P, Q):
    """Brute-force functors between posets, and the ≤ pairs among them."""
    maps = []
    for img in product(Q.objects, repeat=len(P.objects)):
        f = dict(zip(P.objects, img))
        if all(Q.hom(f[P.src[m]], f[P.tgt[m]]) for m in P.morphisms):
            maps.append(f)
    pairs = sum(all(Q.hom(f[o], g[o]) for o in P.objects)
                for f in maps for g in maps)
    return len(maps), pairs


@pytest.mark.parametrize("I,C", [
    (interval(1), interval(1)),
    (subset_poset([1, 2], nonempty=True), interval(1)),
    (interval(2), subset_poset([1, 2])),
    (subset_poset([1, 2], nonempty=True), terminal_category()),
])
def test_holim_of_constant_poset_diagram_is_functor_category(I, C):
    H = holim_model(constant_diagram(I, C)).category
    assert validate_category(H).ok
    assert (len(H.objects), len(H.morphisms)) == functor_count(I, C)


def test_hom_from_constant_point_is_limit():
    X = product_square()
    pt = constant_diagram(X.base, terminal_category())
    H = hom_category(pt, X).category
    I = X.base
    tuples = 0
    for xs in product(*(X.vertex[o].objects for o in I.objects)):
        x = dict(zip(I.objects, xs))
        if all(X.transition[a].obmap[x[I.src[a]]] == x[I.tgt[a]]
               for a in I.morphisms):
            tuples += 1
    assert len(H.objects) == tuples == 4


def test_hom_into_constant_point_is_terminal():
    X = const_square(interval(1))
    H = hom_category(X, constant_diagram(X.base, terminal_category()))
    assert len(H.category.objects) == 1
    assert len(H.category.morphisms) == 1


def test_hom_lookup_round_trip():
    X = const_square(interval(1))
    hom = hom_category(overcat_diagram(X.base), X)
    H = hom.category
    for o in H.objects:
        assert hom.find_object(hom.family(o)) == o
    for m in H.morphisms:
        assert hom.find_morphism(H.src[m], H.tgt[m],
                                 hom.components(m)) == m
    with pytest.raises(KeyError):
        hom.find_object({})


def test_matching_functor_is_a_functor():
    X = const_square(interval(1), (1, 2, 3))
    for i in X.base.objects:
        M = Matching(X, i)
        assert check_functor(M.functor).ok
    M = Matching(X, fs(1, 2, 3))
    assert len(M.hom.category.objects) == 1


def test_reedy_passes_on_constant_square():
    rep = reedy_qf_check(const_square(interval(1)))
    assert rep.passed and rep.summary["failures"] == 0
    assert rep.to_dict()["weak_equivalence_test"] == "homology proxy"


def test_reedy_fails_with_empty_comma():
    """{1} → [1]: the fiber over 0 is empty, over 1 a point."""
    I = interval(1)
    p1 = discrete_category([1])
    X = Diagram(I, {0: p1, 1: interval(1)},
                {(0, 0): identity_functor(p1),
                 (1, 1): identity_functor(interval(1)),
                 (0, 1): inclusion(p1, interval(1), {1: 1})})
    rep = reedy_qf_check(X)
    assert not rep.passed
    bad = [r for r in rep.rows if not r["verdict"]]
    assert bad and all(r["object"] == "0" for r in bad)
    assert rep.notes


def test_budget_is_enforced():
    with pytest.raises(SearchBudgetExceeded):
        reedy_qf_check(const_square(interval(1)), Budget(5))


def test_lydakis_dim_counts():
    one = interval(1)
    rep = lydakis_check(overcat_diagram(one), constant_diagram(one, one))
    assert [r["nerve_simplices"] for r in rep.rows] == [3, 6, 10]
    assert all(r["faces_compatible"] for r in rep.rows)
    assert "weak_equivalence_test" not in rep.to_dict()


def test_grothendieck_of_constant_is_product():
    for K, C in [(interval(1), interval(1)),
                 (subset_poset([1, 2], nonempty=True), interval(2))]:
        G, proj = grothendieck(constant_diagram(K, C))
        P = product_category(K, C)
        assert validate_category(G).ok and check_functor(proj).ok
        assert (len(G.objects), len(G.morphisms)) == \
            (len(P.objects), len(P.morphisms))
    G, _ = grothendieck(constant_diagram(interval(1), interval(1)))
    assert (len(G.objects), len(G.morphisms)) == (4, 9)


def test_pullback_model_counts():
    counts = {name: (len(barwick_kan(f, g).objects),
                     len(barwick_kan(f, g).morphisms))
              for name, f, g in cospans()}
    assert counts == {"points": (1, 1), "identities": (5, 14),
                      "to-point": (2, 3)}


@pytest.mark.parametrize("ground,n,C", [
    ((1, 2), 0, interval(1)),
    ((1, 2), 1, terminal_category()),
    ((1, 2, 3), 0, interval(1)),
    ((1, 2, 3), 1, terminal_category()),
])
def test_layer_induction_variants(ground, n, C):
    X = const_square(C, ground)
    U = layer(X.base, n)
    T, Ti, rep = lemma_indgrot_iso(X, U)
    assert rep.passed
    assert check_functor(T).ok and check_functor(Ti).ok


def test_F_U_vertices_are_products_of_commas():
    X = const_square(interval(1), (1, 2, 3))
    li = LayerInduction(X, layer(X.base, 1))
    for phi in li.HU.category.objects:
        size = 1
        for u in li.U:
            phi_u = li.restrict_object(phi, u)
            size *= len(comma_over(li.match[u].functor, phi_u)[0].objects)
        assert len(li.FU.vertex[phi].objects) == size


def test_cube_checks():
    X = product_square()
    assert cube_initial(X) == fs()
    assert cube_cartesian_check(X).passed
    rep = cube_cartesian_check(empty_square())
    assert not rep.passed and rep.summary["hypotheses"] == "verified"
    assert all(r["homology"]["betti"] == [0] for r in rep.rows)


def test_lambda_values():
    lam = lambda_functor(2).obmap
    one, two = fs(1), fs(2)
    assert lam[(fs(1, "+"), fs(2, "+"))] == fs(1, 2, "+")
    assert lam[(one, two)] == fs(1, 2)
    assert lam[(fs("+"), fs("+"))] == fs("+")
    assert lam[(one, fs("+"))] == fs(1)
    assert check_functor(lambda_functor(3)).ok


def test_lambda_slices_contractible_and_initial_failures_pinned():
    for n in (2, 3):
        assert lambda_cofinality_check(n).passed
    bad = {n: sorted(r["S"] for r in lambda_initial_check(n)
                     if not r["initial_verified"]) for n in (2, 3)}
    assert bad == {2: ["{+}"], 3: ["{+,1}", "{+,2}", "{+,3}", "{+}"]}
    rows = lambda_initial_check(2)
    assert all(r["initial_verified"] == r["terminal_in_lambda_over_T"]
               for r in rows)
    assert all(r["S_over_U_contractible"] for r in rows)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_condition_count_formula(n):
    rep = theorem_bn_conditions(point_cube(n))
    assert rep.summary["conditions"] == expected_conditions(n)
    assert rep.passed
    assert len({c["condition"] for c in rep.summary["per_condition"]}) == \
        expected_conditions(n)

