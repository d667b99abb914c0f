"""Canonical string labels for the hashable ids used throughout."""

from __future__ import annotations


def label(x) -> str:
    """Deterministic, hash-seed independent rendering of an id.

    Tuples render as ``(a,b)``, frozensets as ``{a,b}`` with members sorted by
    their own labels, everything else via ``str``.
    """
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "(" + ",".join(label(y) for y in x) + ")"
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(label(y) for y in x)) + "}"
    return str(x)


def label_index(ids) -> dict:
    """Map labels back to ids; labels must be unambiguous."""
    out = {}
    for x in ids:
        s = label(x)
        if s in out and out[s] != x:
            raise ValueError(f"ambiguous label {s!r}")
        out[s] = x
    return out
