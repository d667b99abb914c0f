"""Acceptance criteria 1-9, one printed PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

import json
import os
import subprocess
import sys
import time

import pytest
import sympy

from holimcat.equivariant import (conjugation_action_on_hom,
                                  equivariant_reedy_check,
                                  lemma_equivariance_check, overcat_g_diagram,
                                  validate_g_action,
                                  validate_g_diagram, validate_group)
from holimcat.fincat import (constant_diagram, interval, layer,
                             product_category, subset_poset)
from holimcat.holim import (barwick_kan, barwick_kan_check,
                            cube_cartesian_check, hom_category,
                            lambda_cofinality_check, lambda_initial_check,
                            lemma_indgrot_iso, lydakis_check,
                            overcat_diagram, reedy_qf_check,
                            theorem_bn_conditions)
from holimcat.simpl import homology, nerve

from helpers import (FIXTURES, c2_square, const_square, cospan_fixture,
                     cospans, empty_square, fs, point_cube, product_square)

# pinned tolerances
LEMMA_SECONDS = 10.0
LYDAKIS_DIMS = (0, 1, 2)
BN_TABLE = {1: 1, 2: 4, 3: 11, 4: 26}


def verdict(n, ok, detail=""):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, detail


# 1 ---------------------------------------------------------------------

def lemma_fixtures():
    one = interval(1)
    X2 = const_square(one)
    X3 = const_square(one, (1, 2, 3))
    return [("P0(1,2) U=I_1", X2, layer(X2.base, 1)),
            ("P0(1,2,3) U=I_1", X3, layer(X3.base, 1)),
            ("singleton U", X2, [fs(1, 2)])]


def test_criterion_1_layer_induction_round_trip():
    start = time.perf_counter()
    bad = []
    for name, X, U in lemma_fixtures():
        T, Ti, rep = lemma_indgrot_iso(X, U)
        exact = (T.then(Ti).obmap == {o: o for o in T.source.objects}
                 and T.then(Ti).mormap == {m: m for m in T.source.morphisms}
                 and Ti.then(T).obmap == {o: o for o in Ti.source.objects}
                 and Ti.then(T).mormap == {m: m
                                           for m in Ti.source.morphisms})
        if not (rep.passed and exact):
            bad.append(name)
    elapsed = time.perf_counter() - start
    verdict(1, not bad and elapsed < LEMMA_SECONDS,
            f"fixtures=3 failed={bad} seconds={elapsed:.2f}"
            f"<{LEMMA_SECONDS}")


# 2 ---------------------------------------------------------------------

def lydakis_fixtures():
    one = interval(1)
    cosp = cospan_fixture("identities")
    over1 = overcat_diagram(one)
    return [("[1]: I/(-) into const [1]", over1, constant_diagram(one, one)),
            ("[1]: const [1] into const [1]", constant_diagram(one, one),
             constant_diagram(one, one)),
            ("cospan: I/(-) into id legs", overcat_diagram(cosp.base), cosp)]


def test_criterion_2_lydakis_counts():
    detail = []
    ok = True
    for name, Y, X in lydakis_fixtures():
        rep = lydakis_check(Y, X, up_to_dim=max(LYDAKIS_DIMS))
        counts = [(r["nerve_simplices"], r["natural_maps"])
                  for r in rep.rows]
        same = all(a == b for a, b in counts) and len(counts) == 3
        ok = ok and rep.passed and same
        detail.append(f"{name} {counts}")
    verdict(2, ok, "; ".join(detail))


# 3 ---------------------------------------------------------------------

def test_criterion_3_pullback_models_coincide():
    ok = True
    detail = []
    for name, f, g in cospans():
        rep = barwick_kan_check(f, g)
        ok = ok and rep.passed
        detail.append(f"{name}={rep.summary['objects']}/"
                      f"{rep.summary['morphisms']}")
    _, f, g = cospans()[0]
    BK = barwick_kan(f, g)
    single = len(BK.objects) == 1 and len(BK.morphisms) == 1
    verdict(3, ok and single, " ".join(detail))


# 4 ---------------------------------------------------------------------

def test_criterion_4_condition_counts():
    got = {n: theorem_bn_conditions(point_cube(n)).summary["conditions"]
           for n in BN_TABLE}
    verdict(4, got == BN_TABLE, f"counts={got}")


# 5 ---------------------------------------------------------------------

def test_criterion_5_lambda_slices_contractible():
    ok = True
    for n in (2, 3):
        rep = lambda_cofinality_check(n)
        ok = ok and rep.passed and rep.summary["S_over_U_contractible"]
    verdict("5a", ok, "every λ/S and S/U has point homology, n=2,3")


@pytest.mark.xfail(strict=True, reason="the componentwise object is not "
                   "initial in S/U when + ∈ S and two indices lie outside S")
def test_criterion_5_explicit_initial_object():
    bad = {n: [r["S"] for r in lambda_initial_check(n)
               if not r["initial_verified"]] for n in (2, 3)}
    verdict("5b", not any(bad.values()),
            f"explicit initial object fails for S in {bad}")


# 6 ---------------------------------------------------------------------

def order_complex_betti(elements, leq):
    """Rational Betti numbers of the order complex, by sympy ranks.

    Built from scratch: simplices are strictly increasing chains.
    """
    chains = [[(x,) for x in elements]]
    while True:
        nxt = [c + (y,) for c in chains[-1] for y in elements
               if y != c[-1] and leq(c[-1], y)]
        if not nxt:
            break
        chains.append(nxt)
    ranks = [0] * (len(chains) + 1)
    for n in range(1, len(chains)):
        index = {c: k for k, c in enumerate(chains[n - 1])}
        M = sympy.zeros(len(chains[n - 1]), len(chains[n]))
        for j, c in enumerate(chains[n]):
            for k in range(n + 1):
                M[index[c[:k] + c[k + 1:]], j] += (-1) ** k
        ranks[n] = M.rank()
    return [len(chains[n]) - ranks[n] - ranks[n + 1]
            for n in range(len(chains))]


def test_criterion_6_homology_engine():
    circle = subset_poset([1, 2, 3], nonempty=True, proper=True)
    K = nerve(circle)
    h = homology(K)
    circ = (list(h.betti) == [1, 1] + [0] * (len(h.betti) - 2)
            and not any(h.torsion)
            and order_complex_betti(circle.objects, lambda a, b: a <= b)
            == list(h.betti))
    cones = [subset_poset([1, 2, 3]), interval(3),
             product_category(interval(1), interval(2)),
             subset_poset([1, 2, 3], proper=True),
             subset_poset([1, 2, 3], nonempty=True)]
    points = all(homology(nerve(C)).is_point() for C in cones)
    chi = all(_chi_consistent(C) for C in _every_fixture_category())
    verdict(6, circ and points and chi,
            f"circle betti={list(h.betti)} cones={points} chi={chi}")


def _chi_consistent(C):
    K = nerve(C)
    alt = sum((-1) ** n * len(s) for n, s in enumerate(K.simplices))
    return homology(K).euler() == alt


def _every_fixture_category():
    cats = []
    for X in [const_square(interval(1)), product_square(), empty_square(),
              point_cube(2)]:
        cats.append(X.base)
        cats.extend(X.vertex.values())
        cats.append(hom_category(overcat_diagram(X.base), X).category)
    for _, f, g in cospans():
        cats.append(barwick_kan(f, g))
    return cats


# 7 ---------------------------------------------------------------------

def test_criterion_7_equivariant_axioms():
    Xg = c2_square()
    X = Xg.diagram
    valid = (validate_group(Xg.group).ok and validate_g_action(Xg.action).ok
             and validate_g_diagram(Xg).ok)
    eq = equivariant_reedy_check(Xg)
    plain = reedy_qf_check(X)
    trivial = next(b for b in eq.rows if b["order"] == 1)
    same = (json_bytes(trivial["rows"]) == json_bytes(plain.rows))
    Yg = overcat_g_diagram(Xg.action)
    hom = hom_category(Yg.diagram, X)
    conj_ok = validate_g_action(conjugation_action_on_hom(Yg, Xg, hom)).ok
    lemma = lemma_equivariance_check(Xg, layer(X.base, 1))
    verdict(7, valid and conj_ok and eq.passed and same and lemma.passed,
            f"validators={valid and conj_ok} trivial_rows_identical={same} "
            f"theta_equivariant={lemma.summary['theta_equivariant']}")


def json_bytes(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False).encode()


# 8 ---------------------------------------------------------------------

def test_criterion_8_cube_corollary():
    good = cube_cartesian_check(product_square())
    bad = cube_cartesian_check(empty_square())
    ok = (good.summary["reedy_passed"] and good.passed
          and all(r["contractible"] for r in good.rows)
          and not bad.passed)
    verdict(8, ok, f"product square cartesian={good.passed} "
            f"empty X_∅ cartesian={bad.passed}")


# 9 ---------------------------------------------------------------------

COMMANDS = [
    ["check", "reedy", "punctured_square.json"],
    ["check", "reedy-equivariant", "punctured_square_c2.json"],
    ["check", "cube-cartesian", "product_square.json"],
    ["check", "cube-cartesian", "empty_square.json"],
    ["check", "bn-conditions", "bn2_point.json"],
    ["check", "lydakis", "cospan_intervals.json"],
    ["check", "lemma-iso", "punctured_square_c2.json"],
    ["check", "cofinality", "lambda2.json"],
    ["model", "holim", "punctured_square.json"],
    ["model", "bk-pullback", "cospan_points.json"],
    ["model", "total-fiber", "product_square.json"],
    ["model", "grothendieck", "punctured_square.json"],
    ["validate", "broken_table.json"],
]


def _suite_run(seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    out = []
    for cmd in COMMANDS:
        args = cmd[:-1] + [str(FIXTURES / cmd[-1]), "--json"]
        res = subprocess.run([sys.executable, "-m", "holimcat.cli", *args],
                             capture_output=True, env=env, check=False)
        out.append(res.returncode.to_bytes(1, "big") + res.stdout)
    return out


def test_criterion_9_determinism():
    first, second = _suite_run(0), _suite_run(4242)
    diff = [" ".join(c[:2]) for c, a, b in zip(COMMANDS, first, second)
            if a != b]
    verdict(9, not diff and all(len(x) > 1 for x in first),
            f"reports={len(first)} differing={diff}")
