"""JSON ingestion and export.

Every id in a document is a string.  Categories built from shorthands
(posets, cubes, intervals, products) have structured ids inside; documents
refer to them by their labels, e.g. ``"{1,+}"`` or ``"(a,b)"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .equivariant import (CategoryGAction, FinGroup, GDiagram, cyclic_group,
                          group_from_table, symmetric_group, trivial_group)
from .fincat import (CategoryError, Diagram, FinCategory, Functor,
                     discrete_category, empty_category, identity_functor,
                     interval, poset_category, product_category,
                     subset_poset, terminal_category,
                     validate_category)
from .labels import label, label_index
from .simpl import homology, nerve


class InputError(ValueError):
    """A document that cannot be turned into the requested structure."""


def load_json(path) -> dict:
    p = Path(path)
    text = p.read_bytes()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{p}: invalid JSON at byte offset {exc.pos}: "
                         f"{exc.msg}") from None


# ---------------------------------------------------------------------------
# categories

def _transitive_closure(elements, pairs):
    le = {(x, x) for x in elements} | set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(le):
            for c, d in list(le):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
    return le


def category_from_json(doc, shared: dict | None = None) -> FinCategory:
    shared = shared or {}
    if isinstance(doc, str):
        if doc not in shared:
            raise InputError(f"unknown category reference {doc!r}")
        return shared[doc]
    if not isinstance(doc, dict):
        raise InputError("a category must be an object or a name")
    name = doc.get("name", "")
    if "poset" in doc:
        spec = doc["poset"]
        els = list(spec["elements"])
        pairs = [tuple(p) for p in spec.get("leq", [])]
        return poset_category(els, sorted(_transitive_closure(els, pairs),
                                          key=lambda p: (els.index(p[0]),
                                                         els.index(p[1]))),
                              name)
    if "cube" in doc:
        spec = doc["cube"]
        return subset_poset(list(spec["ground"]),
                            nonempty=bool(spec.get("punctured", False)),
                            name=name)
    if "interval" in doc:
        return interval(int(doc["interval"]))
    if "discrete" in doc:
        return discrete_category(doc["discrete"], name)
    if doc.get("terminal"):
        return terminal_category()
    if doc.get("empty"):
        return empty_category()
    if "product" in doc:
        parts = [category_from_json(d, shared) for d in doc["product"]]
        if len(parts) != 2:
            raise InputError("product takes exactly two factors")
        return product_category(*parts)
    if "objects" in doc:
        return _table_category(doc)
    raise InputError("unrecognised category document")


def _table_category(doc) -> FinCategory:
    objects = list(doc["objects"])
    arrows = []
    for m in doc.get("morphisms", []):
        if isinstance(m, dict):
            arrows.append((m["id"], m["src"], m["tgt"]))
        else:
            arrows.append(tuple(m))
    identity = dict(doc.get("identity", {}))
    ids = {a[0] for a in arrows}
    for o in objects:
        if o not in identity:
            identity[o] = f"id_{o}"
        if identity[o] not in ids:
            arrows.append((identity[o], o, o))
            ids.add(identity[o])
    src = {a[0]: a[1] for a in arrows}
    tgt = {a[0]: a[2] for a in arrows}
    table = {}
    for g, f, gf in doc.get("compose", []):
        table[(g, f)] = gf
    for m in ids:
        table.setdefault((identity.get(tgt[m]), m), m)
        table.setdefault((m, identity.get(src[m])), m)
    table = {k: v for k, v in table.items() if None not in k}
    return FinCategory.build(objects, arrows, identity, table,
                             doc.get("name", ""))


def category_to_json(C: FinCategory, with_homology: bool = False) -> dict:
    out = {"name": C.name,
           "objects": [label(o) for o in C.objects],
           "morphisms": [{"id": label(m), "src": label(C.src[m]),
                          "tgt": label(C.tgt[m])} for m in C.morphisms],
           "identity": {label(o): label(C.identity[o]) for o in C.objects},
           "compose": [[label(g), label(f), label(gf)]
                       for (g, f), gf in C.table.items()]}
    if with_homology:
        out["homology"] = homology(nerve(C)).to_dict()
    return out


# ---------------------------------------------------------------------------
# functors

def _lookup(C: FinCategory, kind: str):
    ids = C.objects if kind == "objects" else C.morphisms
    idx = label_index(ids)

    def get(s):
        if s not in idx:
            raise InputError(f"{C.name or 'category'} has no {kind[:-1]} "
                             f"labelled {s!r}")
        return idx[s]
    return get


def functor_from_json(doc, S: FinCategory, T: FinCategory) -> Functor:
    if doc == "identity" or (isinstance(doc, dict) and doc.get("identity")):
        if S != T:
            raise InputError("identity functor between different categories")
        return identity_functor(S)
    if isinstance(doc, dict) and "constant" in doc:
        x = _lookup(T, "objects")(doc["constant"])
        return Functor(S, T, {o: x for o in S.objects},
                       {m: T.identity[x] for m in S.morphisms})
    if isinstance(doc, dict) and "projection" in doc:
        k = int(doc["projection"])
        return Functor(S, T, {o: o[k] for o in S.objects},
                       {m: m[k] for m in S.morphisms})
    if not isinstance(doc, dict) or "objects" not in doc:
        raise InputError("unrecognised functor document")
    so, to = _lookup(S, "objects"), _lookup(T, "objects")
    sm, tm = _lookup(S, "morphisms"), _lookup(T, "morphisms")
    obmap = {so(a): to(b) for a, b in doc["objects"].items()}
    missing = [label(o) for o in S.objects if o not in obmap]
    if missing:
        raise InputError(f"functor does not map objects {missing}")
    mormap = {sm(a): tm(b) for a, b in doc.get("morphisms", {}).items()}
    for m in S.morphisms:
        if m in mormap:
            continue
        if S.is_identity(m):
            mormap[m] = T.identity[obmap[S.src[m]]]
            continue
        cands = T.hom(obmap[S.src[m]], obmap[S.tgt[m]])
        if len(cands) != 1:
            raise InputError(f"morphism {label(m)} needs an explicit image")
        mormap[m] = cands[0]
    return Functor(S, T, obmap, mormap)


# ---------------------------------------------------------------------------
# diagrams

def _shared(doc) -> dict:
    shared = {}
    for name, c in doc.get("categories", {}).items():
        shared[name] = category_from_json(c, shared)
    return shared


def diagram_from_json(doc, shared: dict | None = None) -> Diagram:
    shared = dict(shared or {})
    shared.update(_shared(doc))
    base = category_from_json(doc["base"], shared)
    bo, bm = _lookup(base, "objects"), _lookup(base, "morphisms")
    vertex = {}
    for s, c in doc["vertex"].items():
        vertex[bo(s)] = category_from_json(c, shared)
    for o in base.objects:
        if o not in vertex:
            raise InputError(f"no vertex category for {label(o)}")
    transition = {}
    for s, f in doc.get("transition", {}).items():
        m = bm(s)
        transition[m] = functor_from_json(f, vertex[base.src[m]],
                                          vertex[base.tgt[m]])
    for o in base.objects:
        transition.setdefault(base.identity[o], identity_functor(vertex[o]))
    _fill_composites(base, transition)
    for m in base.morphisms:
        T = vertex[base.tgt[m]]
        if m not in transition and len(T.objects) == 1 \
                and len(T.morphisms) == 1:
            # the functor into a terminal category is unique
            x = T.objects[0]
            transition[m] = Functor(vertex[base.src[m]], T,
                                    {o: x for o in vertex[base.src[m]].objects},
                                    {f: T.identity[x]
                                     for f in vertex[base.src[m]].morphisms})
    missing = [label(m) for m in base.morphisms if m not in transition]
    if missing:
        raise InputError(f"no transition functor for {missing}")
    return Diagram(base, vertex, transition)


def _fill_composites(base: FinCategory, transition: dict):
    changed = True
    while changed:
        changed = False
        for (g, f), gf in base.table.items():
            if gf not in transition and g in transition and f in transition:
                transition[gf] = transition[f].then(transition[g])
                changed = True


# ---------------------------------------------------------------------------
# groups and actions

def group_from_json(doc) -> FinGroup:
    if "cyclic" in doc:
        return cyclic_group(int(doc["cyclic"]))
    if "symmetric" in doc:
        return symmetric_group(int(doc["symmetric"]))
    if doc.get("trivial"):
        return trivial_group()
    els = list(doc["elements"])
    rows = []
    for row in doc["mul"]:
        rows.append([els[c] if isinstance(c, int) else c for c in row])
    return group_from_table(els, rows, doc.get("name", ""))


def _group_lookup(G: FinGroup):
    idx = label_index(G.elements)

    def get(s):
        if s not in idx:
            raise InputError(f"group has no element {s!r}")
        return idx[s]
    return get


def action_from_json(doc, G: FinGroup, C: FinCategory) -> CategoryGAction:
    ge = _group_lookup(G)
    action = {}
    for s, f in doc.items():
        action[ge(s)] = functor_from_json(f, C, C)
    action.setdefault(G.identity, identity_functor(C))
    missing = [label(g) for g in G.elements if g not in action]
    if missing:
        raise InputError(f"no action functor for {missing}")
    return CategoryGAction(G, C, action)


def g_diagram_from_json(doc) -> GDiagram:
    X = diagram_from_json(doc)
    G = group_from_json(doc["group"])
    A = action_from_json(doc.get("action", {}), G, X.base)
    ge = _group_lookup(G)
    bo = _lookup(X.base, "objects")
    structure = {g: {} for g in G.elements}
    for s, per in doc.get("structure", {}).items():
        g = ge(s)
        for t, f in per.items():
            i = bo(t)
            structure[g][i] = functor_from_json(
                f, X.vertex[i], X.vertex[A.ob(g, i)])
    for g in G.elements:
        for i in X.base.objects:
            if i not in structure[g]:
                S, T = X.vertex[i], X.vertex[A.ob(g, i)]
                if S != T:
                    raise InputError(
                        f"structure map {label(g)} at {label(i)} is "
                        "required since the vertex categories differ")
                structure[g][i] = identity_functor(S)
    return GDiagram(A, X, structure)


# ---------------------------------------------------------------------------
# whole documents

def load_document(path):
    """Return ``(kind, payload, raw)`` for a fixture file."""
    doc = load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be an object")
    kind = doc.get("kind")
    if kind is None:
        kind = ("g-diagram" if "group" in doc else
                "diagram" if "base" in doc else
                "cospan" if "f" in doc and "g" in doc else "category")
    try:
        payload = _build(kind, doc)
    except KeyError as exc:
        raise InputError(f"{path}: missing field {exc}") from None
    except CategoryError as exc:
        raise InputError(f"{path}: {exc}") from None
    return kind, payload, doc


def _build(kind, doc):
    shared = _shared(doc)
    if kind == "category":
        return category_from_json(doc.get("category", doc), shared)
    if kind == "diagram":
        return diagram_from_json(doc, shared)
    if kind == "g-diagram":
        return g_diagram_from_json(doc)
    if kind == "cospan":
        C = category_from_json(doc["C"], shared)
        D = category_from_json(doc["D"], shared)
        E = category_from_json(doc["E"], shared)
        return (functor_from_json(doc["f"], C, D),
                functor_from_json(doc["g"], E, D))
    if kind == "functor":
        S = category_from_json(doc["source"], shared)
        T = category_from_json(doc["target"], shared)
        return functor_from_json(doc["functor"], S, T)
    if kind == "lambda":
        return int(doc["n"])
    if kind == "pair":
        return (diagram_from_json(doc["Y"], shared),
                diagram_from_json(doc["X"], shared))
    raise InputError(f"unknown document kind {kind!r}")


def validate_payload(kind, payload):
    """All structural validators that apply to a loaded document."""
    from .equivariant import validate_g_diagram
    from .fincat import ValidationReport, check_functor, validate_diagram
    if kind == "category":
        return [validate_category(payload)]
    if kind == "diagram":
        return [validate_diagram(payload)]
    if kind == "g-diagram":
        return [validate_g_diagram(payload)]
    if kind in ("cospan",):
        return [validate_category(payload[0].source),
                validate_category(payload[0].target),
                validate_category(payload[1].source),
                check_functor(payload[0]), check_functor(payload[1])]
    if kind == "functor":
        return [validate_category(payload.source),
                validate_category(payload.target), check_functor(payload)]
    if kind == "pair":
        return [validate_diagram(payload[0]), validate_diagram(payload[1])]
    return [ValidationReport(kind)]
