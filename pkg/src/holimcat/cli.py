"""Command-line front end.

Exit codes: 0 pass, 1 check failure, 2 parse or precondition error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .equivariant import equivariant_reedy_check, lemma_equivariance_check
from .fincat import CategoryError, Diagram, comma_over, layer
from .holim import (barwick_kan, barwick_kan_check, cospan_legs,
                    cube_cartesian_check, grothendieck, holim_model,
                    lambda_cofinality_check, cofinality_check,
                    lemma_indgrot_iso, lydakis_check, overcat_diagram,
                    reedy_qf_check, theorem_bn_conditions,
                    total_fiber_report)
from .holim.cubes import cube_initial
from .holim.hom import Matching
from .io import (InputError, category_to_json, load_document,
                 validate_payload)
from .labels import label, label_index
from .report import Report
from .search import DEFAULT_BUDGET, SearchBudgetExceeded, as_budget
from .simpl import PROXY

CHECKS = ("reedy", "reedy-equivariant", "cube-cartesian", "bn-conditions",
          "lydakis", "lemma-iso", "cofinality")
MODELS = ("holim", "bk-pullback", "total-fiber", "grothendieck")


class Precondition(Exception):
    pass


def _need(kind, payload, *allowed):
    if kind not in allowed:
        raise Precondition(f"this command needs a {' or '.join(allowed)} "
                           f"document, got {kind}")
    return payload


def _diagram(kind, payload) -> Diagram:
    if kind == "g-diagram":
        return payload.diagram
    return _need(kind, payload, "diagram")


def _layer_set(X: Diagram, raw: dict, args):
    if "U" in raw:
        idx = label_index(X.base.objects)
        try:
            return [idx[s] for s in raw["U"]]
        except KeyError as exc:
            raise Precondition(f"U mentions unknown object {exc}") from None
    return layer(X.base, args.layer if args.layer is not None
                 else raw.get("layer", 1))


def run_check(kind_name, path, args) -> Report:
    kind, payload, raw = load_document(path)
    budget = as_budget(args.budget)
    if kind_name == "reedy":
        return reedy_qf_check(_diagram(kind, payload), budget)
    if kind_name == "reedy-equivariant":
        return equivariant_reedy_check(_need(kind, payload, "g-diagram"),
                                       budget)
    if kind_name == "cube-cartesian":
        return cube_cartesian_check(_diagram(kind, payload), budget)
    if kind_name == "bn-conditions":
        return theorem_bn_conditions(_diagram(kind, payload), raw.get("n"),
                                     budget)
    if kind_name == "lydakis":
        if kind == "pair":
            Y, X = payload
        else:
            X = _diagram(kind, payload)
            Y = overcat_diagram(X.base)
        return lydakis_check(Y, X, args.max_dim, budget)
    if kind_name == "lemma-iso":
        X = _diagram(kind, payload)
        U = _layer_set(X, raw, args)
        _, _, rep = lemma_indgrot_iso(X, U, budget)
        if kind == "g-diagram":
            eq = lemma_equivariance_check(payload, U, budget)
            rep.summary["equivariance"] = eq.summary
            rep.passed = rep.passed and eq.passed
        return rep
    if kind_name == "cofinality":
        if kind == "lambda":
            return lambda_cofinality_check(payload)
        return cofinality_check(_need(kind, payload, "functor"))
    raise Precondition(f"unknown check {kind_name}")


def run_model(kind_name, path, args):
    """Return (report, artifact dict)."""
    kind, payload, raw = load_document(path)
    budget = as_budget(args.budget)
    if kind_name == "holim":
        H = holim_model(_diagram(kind, payload), budget).category
        art = category_to_json(H, with_homology=True)
        rep = Report("holim", True, {"objects": len(H.objects),
                                     "morphisms": len(H.morphisms),
                                     "homology": art["homology"]},
                     proxy=False)
        return rep, art
    if kind_name == "bk-pullback":
        if kind == "cospan":
            f, g = payload
        else:
            X = _diagram(kind, payload)
            _, _, _, a, b = cospan_legs(X)
            f, g = X.transition[a], X.transition[b]
        BK = barwick_kan(f, g)
        art = category_to_json(BK, with_homology=True)
        rep = barwick_kan_check(f, g, budget)
        rep.summary["homology"] = art["homology"]
        return rep, art
    if kind_name == "total-fiber":
        X = _diagram(kind, payload)
        rep = total_fiber_report(X, budget)
        M = Matching(X, cube_initial(X), budget=budget)
        fibers = []
        for n, phi in enumerate(M.hom.category.objects):
            C = comma_over(M.functor, phi)[0]
            fibers.append({"phi": n, "category": category_to_json(
                C, with_homology=True)})
        return rep, {"fibers": fibers}
    if kind_name == "grothendieck":
        C, _ = grothendieck(_diagram(kind, payload))
        art = category_to_json(C, with_homology=True)
        rep = Report("grothendieck", True, {"objects": len(C.objects),
                                            "morphisms": len(C.morphisms),
                                            "homology": art["homology"]},
                     proxy=False)
        return rep, art
    raise Precondition(f"unknown model {kind_name}")


def _emit(rep: Report, args, artifact=None):
    data = rep.to_dict()
    if artifact is not None:
        data["artifact"] = artifact
    text = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        sys.stdout.write(text)
    else:
        print(rep.headline())
        for note in rep.notes:
            print("  " + note)


def cmd_validate(args) -> int:
    clean = True
    out = []
    for path in args.paths:
        kind, payload, _ = load_document(path)
        reps = validate_payload(kind, payload)
        ok = all(r.ok for r in reps)
        clean = clean and ok
        out.append({"path": str(path), "kind": kind, "ok": ok,
                    "reports": [r.to_dict() for r in reps]})
        if not args.json:
            print(f"{path}: {kind} {'OK' if ok else 'INVALID'}")
            for r in reps:
                for v in r.violations:
                    print(f"  [{v.kind}] {r.subject}: {v.detail} "
                          f"{' '.join(label(w) for w in v.witness)}")
    text = json.dumps({"check": "validate", "passed": clean,
                       "inputs": out}, indent=2, ensure_ascii=False) + "\n"
    if args.json:
        sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0 if clean else 1


def cmd_check(args) -> int:
    rep = run_check(args.kind, args.path, args)
    _emit(rep, args)
    return 0 if rep.passed else 1


def cmd_model(args) -> int:
    rep, art = run_model(args.kind, args.path, args)
    _emit(rep, args, art)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="holimcat",
        description="Finite models for homotopy limits of diagrams of "
                    f"categories. Weak equivalences are decided by a "
                    f"{PROXY}.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-dim", type=int, default=2,
                        help="highest simplex dimension compared (default 2)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="search node budget")
    common.add_argument("--out", help="write the JSON report here")
    common.add_argument("--json", action="store_true",
                        help="print the JSON report instead of a summary")
    common.add_argument("--layer", type=int, default=None,
                        help="degree layer U for lemma-iso (default 1)")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", parents=[common],
                       help="run structural validators")
    v.add_argument("paths", nargs="+")
    v.set_defaults(func=cmd_validate)
    c = sub.add_parser("check", parents=[common], help="run a named check")
    c.add_argument("kind", choices=CHECKS)
    c.add_argument("path")
    c.set_defaults(func=cmd_check)
    m = sub.add_parser("model", parents=[common], help="build a model")
    m.add_argument("kind", choices=MODELS)
    m.add_argument("path")
    m.set_defaults(func=cmd_model)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget <= 0:
        parser.error("--budget must be positive")
    if args.max_dim < 0:
        parser.error("--max-dim must be non-negative")
    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputError, Precondition, CategoryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
