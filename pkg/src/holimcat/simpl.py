"""Finite simplicial sets, nerves and integral homology.

A simplicial set is stored through its nondegenerate simplices.  An
arbitrary simplex is a pair ``(z, sigma)``: a nondegenerate simplex ``z`` of
dimension m and a monotone surjection ``sigma: [n] -> [m]`` given as a tuple
of length n+1 (Eilenberg–Zilber normal form; ``sigma`` encodes the
degeneracy word).  Every simplicial operator is applied through
:meth:`SimplicialSet.act`, which only needs the stored faces of
nondegenerate simplices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Mapping

from .fincat import CategoryError, FinCategory, Functor, ValidationReport, \
    find_cycle, interval
from .labels import label
from .search import as_budget, solve

PROXY = "homology proxy"


class LoopyCategory(CategoryError):
    """The nerve would have infinitely many nondegenerate simplices."""


def delta(n: int, k: int) -> tuple:
    """Coface [n-1] -> [n] skipping k."""
    return tuple(t for t in range(n + 1) if t != k)


def sigma_op(n: int, j: int) -> tuple:
    """Codegeneracy [n+1] -> [n] hitting j twice."""
    return tuple(range(j + 1)) + tuple(range(j, n + 1))


def surjections(n: int, m: int):
    """Monotone surjections [n] -> [m]."""
    if m > n or m < 0:
        return
    for jumps in combinations(range(1, n + 1), m):
        js = set(jumps)
        out, v = [], 0
        for t in range(n + 1):
            if t in js:
                v += 1
            out.append(v)
        yield tuple(out)


def degeneracy_word(sig: tuple) -> tuple:
    """Normal form s_{j1}...s_{jk} (j1 > ... > jk) of a monotone surjection."""
    word = [t for t in range(len(sig) - 1) if sig[t] == sig[t + 1]]
    return tuple(reversed(word))


def _ident(n):
    return tuple(range(n + 1))


# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SimplicialSet:
    simplices: tuple
    faces: Mapping
    name: str = ""

    @cached_property
    def dim_of(self) -> dict:
        out = {}
        for n, layer in enumerate(self.simplices):
            for z in layer:
                if z in out:
                    raise ValueError(f"simplex id {label(z)} used twice")
                out[z] = n
        return out

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def f_vector(self) -> tuple:
        return tuple(len(s) for s in self.simplices)

    def general(self, z):
        return (z, _ident(self.dim_of[z]))

    def act(self, x, theta):
        """x∘theta for a monotone map theta: [p] -> [n] (n = dim x)."""
        z, sig = x
        comp = tuple(sig[t] for t in theta)
        while True:
            m = self.dim_of[z]
            present = set(comp)
            if len(present) == m + 1:
                return (z, comp)
            j = next(t for t in range(m + 1) if t not in present)
            z, rho = self.faces[(z, j)]
            comp = tuple(rho[c if c < j else c - 1] for c in comp)

    def face(self, x, k):
        return self.act(x, delta(len(x[1]) - 1, k))

    def degeneracy(self, x, j):
        return self.act(x, sigma_op(len(x[1]) - 1, j))

    def vertices(self, x) -> tuple:
        return tuple(self.act(x, (t,))[0] for t in range(len(x[1])))

    def all_simplices(self, n: int) -> list:
        """Every n-simplex, degenerate ones included."""
        out = []
        for m in range(min(n, self.dim) + 1):
            sur = list(surjections(n, m))
            for z in self.simplices[m]:
                out.extend((z, s) for s in sur)
        return out

    def count_simplices(self, n: int) -> int:
        from math import comb
        return sum(len(self.simplices[m]) * comb(n, m)
                   for m in range(min(n, self.dim) + 1))

    def __repr__(self):
        return f"<SimplicialSet {self.name} f={self.f_vector()}>"


def validate_simplicial_set(K: SimplicialSet) -> ValidationReport:
    rep = ValidationReport(f"simplicial set {K.name}".strip())
    try:
        K.dim_of
    except ValueError as exc:
        rep.add("typing", str(exc))
        return rep
    for n in range(1, K.dim + 1):
        for z in K.simplices[n]:
            for k in range(n + 1):
                fz = K.faces.get((z, k))
                if fz is None:
                    rep.add("missing", f"face d{k} missing", z)
                    continue
                w, s = fz
                if w not in K.dim_of or len(s) != n or \
                        sorted(set(s)) != list(range(K.dim_of[w] + 1)) or \
                        list(s) != sorted(s):
                    rep.add("typing", f"face d{k} malformed", z)
    if not rep.ok:
        return rep
    for n in range(2, K.dim + 1):
        for z in K.simplices[n]:
            x = K.general(z)
            for j in range(n + 1):
                for i in range(j):
                    a = K.face(K.face(x, j), i)
                    b = K.face(K.face(x, i), j - 1)
                    if a != b:
                        rep.add("simplicial identity",
                                f"d{i}d{j} != d{j-1}d{i}", z)
    return rep


# ---------------------------------------------------------------------------
# nerves

def _require_loop_free(C: FinCategory):
    cyc = find_cycle(C)
    if cyc is not None:
        raise LoopyCategory(
            f"category {C.name} has a non-identity cycle through "
            f"{[label(o) for o in cyc]}")


def nerve(C: FinCategory) -> SimplicialSet:
    """Nondegenerate n-simplices are chains of n composable non-identity maps.

    Vertex ids are object ids, higher simplex ids are tuples of morphism ids
    in composition order ``(f1, ..., fn)`` with ``f1`` first.
    """
    _require_loop_free(C)
    layers = [tuple(C.objects)]
    faces = {}
    nonid_out = {o: [m for m in C.out_of(o) if not C.is_identity(m)]
                 for o in C.objects}
    chains = [(m,) for m in C.nonidentity]
    while chains:
        n = len(chains[0])
        layers.append(tuple(chains))
        for c in chains:
            if n == 1:
                faces[(c, 0)] = (C.tgt[c[0]], (0,))
                faces[(c, 1)] = (C.src[c[0]], (0,))
                continue
            ident = _ident(n - 1)
            faces[(c, 0)] = (c[1:], ident)
            faces[(c, n)] = (c[:-1], ident)
            for k in range(1, n):
                faces[(c, k)] = (c[:k - 1] + (C.table[(c[k], c[k - 1])],)
                                 + c[k + 1:], ident)
        chains = [c + (g,) for c in chains for g in nonid_out[C.tgt[c[-1]]]]
    K = SimplicialSet(tuple(layers), faces, f"N{C.name}")
    K.dim_of
    return K


def nerve_simplex(C: FinCategory, start, mors) -> tuple:
    """The simplex of NC given by a chain of (possibly identity) morphisms."""
    kept, sig, v = [], [0], 0
    for m in mors:
        if not C.is_identity(m):
            kept.append(m)
            v += 1
        sig.append(v)
    z = tuple(kept) if kept else start
    return (z, tuple(sig))


def nerve_chain(C: FinCategory, x):
    """Inverse of :func:`nerve_simplex`: (objects, morphisms) of a simplex."""
    z, sig = x
    if sig[-1] == 0:
        obj = z
        return [obj] * len(sig), [C.identity[obj]] * (len(sig) - 1)
    verts = [C.src[z[0]]] + [C.tgt[m] for m in z]
    objs = [verts[s] for s in sig]
    mors = []
    for t in range(len(sig) - 1):
        if sig[t + 1] == sig[t]:
            mors.append(C.identity[objs[t]])
        else:
            mors.append(z[sig[t]])
    return objs, mors


def delta_n(n: int) -> SimplicialSet:
    """The standard simplex, as the nerve of [n]."""
    K = nerve(interval(n))
    return SimplicialSet(K.simplices, K.faces, f"Δ^{n}")


# ---------------------------------------------------------------------------
# maps

@dataclass(frozen=True, eq=False)
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    images: Mapping

    def apply(self, x):
        z, sig = x
        return self.target.act(self.images[z], sig)

    def then(self, other: "SimplicialMap") -> "SimplicialMap":
        """other∘self."""
        return SimplicialMap(self.source, other.target,
                             {z: other.apply(y) for z, y in self.images.items()})

    def key(self):
        return frozenset(self.images.items())


def identity_map(K: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(K, K, {z: K.general(z) for z in K.dim_of})


def check_simplicial_map(f: SimplicialMap) -> ValidationReport:
    rep = ValidationReport("simplicial map")
    K, L = f.source, f.target
    for z, n in K.dim_of.items():
        y = f.images.get(z)
        if y is None:
            rep.add("missing", "simplex not mapped", z)
        elif len(y[1]) != n + 1 or y[0] not in L.dim_of:
            rep.add("typing", "image has wrong dimension", z)
    if not rep.ok:
        return rep
    for z, n in K.dim_of.items():
        if n == 0:
            continue
        x = K.general(z)
        for k in range(n + 1):
            if f.apply(K.face(x, k)) != L.face(f.images[z], k):
                rep.add("face", f"map does not commute with d{k}", z)
    return rep


def is_simplicial_isomorphism(f: SimplicialMap) -> bool:
    if not check_simplicial_map(f).ok:
        return False
    K, L = f.source, f.target
    if K.f_vector() != L.f_vector():
        return False
    seen = set()
    for z, n in K.dim_of.items():
        w, s = f.images[z]
        if s != _ident(n):
            return False
        seen.add(w)
    return len(seen) == len(L.dim_of)


def nerve_map(F: Functor, NC: SimplicialSet | None = None,
              ND: SimplicialSet | None = None) -> SimplicialMap:
    C, D = F.source, F.target
    NC = NC or nerve(C)
    ND = ND or nerve(D)
    images = {}
    for z, n in NC.dim_of.items():
        if n == 0:
            images[z] = (F.obmap[z], (0,))
        else:
            images[z] = nerve_simplex(D, F.obmap[C.src[z[0]]],
                                      [F.mormap[m] for m in z])
    return SimplicialMap(NC, ND, images)


# ---------------------------------------------------------------------------
# products

def _paths(n, p, q):
    """Jointly injective pairs of monotone surjections [n]->[p], [n]->[q]."""
    only_s, only_t, both = n - q, n - p, p + q - n
    if min(only_s, only_t, both) < 0:
        return

    def rec(s, t, a, b, c, sig, tau):
        if a == b == c == 0:
            yield tuple(sig), tuple(tau)
            return
        if a:
            yield from rec(s + 1, t, a - 1, b, c, sig + [s + 1], tau + [t])
        if b:
            yield from rec(s, t + 1, a, b - 1, c, sig + [s], tau + [t + 1])
        if c:
            yield from rec(s + 1, t + 1, a, b, c - 1, sig + [s + 1],
                           tau + [t + 1])

    yield from rec(0, 0, only_s, only_t, both, [0], [0])


def normalize_pair(x, y):
    """Write a pair of n-simplices as (nondegenerate pair, surjection)."""
    (a, sig), (b, tau) = x, y
    keep, rho = [], []
    prev = None
    for t, pr in enumerate(zip(sig, tau)):
        if pr != prev:
            keep.append(t)
            prev = pr
        rho.append(len(keep) - 1)
    return (((a, tuple(sig[t] for t in keep)),
             (b, tuple(tau[t] for t in keep))), tuple(rho))


def simplicial_product(K: SimplicialSet, L: SimplicialSet) -> SimplicialSet:
    """K × L with nondegenerate simplices ``((a, σ), (b, τ))``."""
    if K.dim < 0 or L.dim < 0:
        return SimplicialSet((), {}, f"{K.name}×{L.name}")
    top = K.dim + L.dim
    layers = [[] for _ in range(top + 1)]
    for p in range(K.dim + 1):
        for q in range(L.dim + 1):
            for n in range(max(p, q), p + q + 1):
                for sig, tau in _paths(n, p, q):
                    for a in K.simplices[p]:
                        for b in L.simplices[q]:
                            layers[n].append(((a, sig), (b, tau)))
    faces = {}
    for n in range(1, top + 1):
        for s in layers[n]:
            x, y = s
            for k in range(n + 1):
                d = delta(n, k)
                faces[(s, k)] = normalize_pair(K.act(x, d), L.act(y, d))
    P = SimplicialSet(tuple(tuple(l) for l in layers), faces,
                      f"{K.name}×{L.name}")
    P.dim_of
    return P


def map_product(f: SimplicialMap, g: SimplicialMap,
                source: SimplicialSet | None = None,
                target: SimplicialSet | None = None) -> SimplicialMap:
    source = source or simplicial_product(f.source, g.source)
    target = target or simplicial_product(f.target, g.target)
    images = {}
    for s in source.dim_of:
        x, y = s
        images[s] = normalize_pair(f.apply(x), g.apply(y))
    return SimplicialMap(source, target, images)


def nerve_product_iso(C: FinCategory, D: FinCategory, CD: FinCategory,
                      NCD: SimplicialSet | None = None,
                      P: SimplicialSet | None = None) -> SimplicialMap:
    """The canonical map N(C×D) -> NC × ND for ``CD = product_category(C, D)``."""
    NCD = NCD or nerve(CD)
    P = P or simplicial_product(nerve(C), nerve(D))
    images = {}
    for z, n in NCD.dim_of.items():
        if n == 0:
            c, d = z
            images[z] = normalize_pair((c, (0,)), (d, (0,)))
        else:
            c0, d0 = CD.src[z[0]]
            x = nerve_simplex(C, c0, [m[0] for m in z])
            y = nerve_simplex(D, d0, [m[1] for m in z])
            images[z] = normalize_pair(x, y)
    return SimplicialMap(NCD, P, images)


# ---------------------------------------------------------------------------
# integer linear algebra

def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(A, B):
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row) if a)
             for j in range(cols)] for row in A]


def _matvec(A, v):
    return [sum(a * x for a, x in zip(row, v) if a) for row in A]


@dataclass
class SmithForm:
    """D = U·M·V with U, V unimodular; inverses carried along."""
    D: list
    U: list
    V: list
    Uinv: list
    Vinv: list

    @property
    def diagonal(self) -> list:
        return [self.D[i][i] for i in range(min(len(self.D),
                                                len(self.D[0]) if self.D else 0))]

    @property
    def invariants(self) -> list:
        return [d for d in self.diagonal if d]

    @property
    def rank(self) -> int:
        return len(self.invariants)


def smith_normal_form(M) -> SmithForm:
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, Uinv, V, Vinv = _eye(m), _eye(m), _eye(n), _eye(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):  # row_i += c·row_j
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for row in Uinv:
            row[j] -= c * row[i]

    def neg_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_col(j, i, c):  # col_j += c·col_i
        for row in A:
            row[j] += c * row[i]
        for row in V:
            row[j] += c * row[i]
        Vinv[i] = [a - c * b for a, b in zip(Vinv[i], Vinv[j])]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < best[0]):
                    best = (abs(A[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            again = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(i, t)
                        again = True
                        break
            if again:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(j, t)
                        again = True
                        break
            if again:
                continue
            p = A[t][t]
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if A[t][t] < 0:
            neg_row(t)
    return SmithForm(A, U, V, Uinv, Vinv)


# ---------------------------------------------------------------------------
# chain complexes and homology

@dataclass(frozen=True)
class ChainComplex:
    """Free chain complex; ``boundary[n]`` is the matrix of C_n -> C_{n-1}."""
    sizes: tuple
    boundary: Mapping

    @property
    def top(self):
        return len(self.sizes) - 1

    def d(self, n):
        if n <= 0 or n > self.top:
            rows = self.sizes[n - 1] if 0 < n <= self.top + 1 else 0
            cols = self.sizes[n] if 0 <= n <= self.top else 0
            return [[0] * cols for _ in range(rows)]
        return self.boundary[n]

    def check_d_squared(self) -> bool:
        for n in range(2, self.top + 1):
            P = _matmul(self.d(n - 1), self.d(n))
            if any(any(row) for row in P):
                return False
        return True


def chain_complex(K: SimplicialSet) -> ChainComplex:
    """Normalized chains on nondegenerate simplices."""
    sizes = K.f_vector()
    bd = {}
    for n in range(1, K.dim + 1):
        rows = {z: r for r, z in enumerate(K.simplices[n - 1])}
        M = [[0] * len(K.simplices[n]) for _ in rows]
        ident = _ident(n - 1)
        for c, z in enumerate(K.simplices[n]):
            for k in range(n + 1):
                w, s = K.faces[(z, k)]
                if s == ident:
                    M[rows[w]][c] += (-1) ** k
        bd[n] = M
    return ChainComplex(sizes, bd)


@dataclass(frozen=True)
class HomologyResult:
    betti: tuple
    torsion: tuple

    def euler(self) -> int:
        return sum((-1) ** n * b for n, b in enumerate(self.betti))

    def is_point(self) -> bool:
        return (bool(self.betti) and self.betti[0] == 1
                and not any(self.betti[1:]) and not any(self.torsion))

    def is_acyclic(self) -> bool:
        return not any(self.betti) and not any(self.torsion)

    def to_dict(self):
        return {"betti": list(self.betti),
                "torsion": [list(t) for t in self.torsion]}


def complex_homology(cc: ChainComplex) -> HomologyResult:
    top = cc.top
    if top < 0:
        return HomologyResult((0,), ((),))
    ranks = [0] * (top + 2)
    invs = [[] for _ in range(top + 2)]
    for n in range(1, top + 1):
        M = cc.d(n)
        if M and M[0]:
            S = smith_normal_form(M)
            ranks[n] = S.rank
            invs[n] = S.invariants
    betti = tuple(cc.sizes[n] - ranks[n] - ranks[n + 1]
                  for n in range(top + 1))
    torsion = tuple(tuple(sorted(d for d in invs[n + 1] if d > 1))
                    for n in range(top + 1))
    return HomologyResult(betti, torsion)


def homology(K: SimplicialSet) -> HomologyResult:
    return complex_homology(chain_complex(K))


def euler_characteristic(K: SimplicialSet) -> int:
    return sum((-1) ** n * c for n, c in enumerate(K.f_vector()))


@dataclass
class HomologyBasis:
    """Generators of H_n and a coordinate map on cycles.

    ``orders[i]`` is 0 for a free generator, d > 1 for a Z/d summand.
    """
    degree: int
    generators: list
    orders: list
    _vinv: list
    _rank: int
    _P: list
    _keep: list

    def coordinates(self, z) -> list:
        y = _matvec(self._vinv, z)[self._rank:]
        c = _matvec(self._P, y) if self._P else []
        out = []
        for idx, order in zip(self._keep, self.orders):
            out.append(c[idx] % order if order else c[idx])
        return out


def homology_basis(cc: ChainComplex, n: int) -> HomologyBasis:
    size = cc.sizes[n] if 0 <= n <= cc.top else 0
    Dn = cc.d(n)
    if n == 0 or not Dn or not Dn[0]:
        V, Vinv, r = _eye(size), _eye(size), 0
    else:
        S = smith_normal_form(Dn)
        V, Vinv, r = S.V, S.Vinv, S.rank
    kernel = [[row[j] for j in range(r, size)] for row in V]
    k = size - r
    Bn = cc.d(n + 1)
    if Bn and Bn[0] and k:
        Bk = _matmul(Vinv, Bn)[r:]
        S2 = smith_normal_form(Bk)
        P, Pinv, es = S2.U, S2.Uinv, S2.diagonal
    else:
        P, Pinv, es = _eye(k), _eye(k), []
    gens, orders, keep = [], [], []
    for idx in range(k):
        e = es[idx] if idx < len(es) else 0
        if e == 1:
            continue
        col = [Pinv[row][idx] for row in range(k)]
        gens.append(_matvec(kernel, col))
        orders.append(e)
        keep.append(idx)
    return HomologyBasis(n, gens, orders, Vinv, r, P, keep)


def chain_map_matrices(f: SimplicialMap) -> dict:
    """Matrices of f on normalized chains (degenerate images vanish)."""
    K, L = f.source, f.target
    out = {}
    for n in range(K.dim + 1):
        rows = {z: r for r, z in enumerate(L.simplices[n])} \
            if n <= L.dim else {}
        M = [[0] * len(K.simplices[n]) for _ in rows]
        for c, z in enumerate(K.simplices[n]):
            w, s = f.images[z]
            if s == _ident(n):
                M[rows[w]][c] += 1
        out[n] = M
    return out


def mapping_cone(f: SimplicialMap) -> ChainComplex:
    cK, cL = chain_complex(f.source), chain_complex(f.target)
    F = chain_map_matrices(f)
    top = max(cK.top + 1, cL.top)

    def size(cc, n):
        return cc.sizes[n] if 0 <= n <= cc.top else 0

    sizes = tuple(size(cK, n - 1) + size(cL, n) for n in range(top + 1))
    bd = {}
    for n in range(1, top + 1):
        a_rows, b_rows = size(cK, n - 2), size(cL, n - 1)
        a_cols, b_cols = size(cK, n - 1), size(cL, n)
        M = [[0] * (a_cols + b_cols) for _ in range(a_rows + b_rows)]
        if a_rows and a_cols:
            dK = cK.d(n - 1)
            for r in range(a_rows):
                for c in range(a_cols):
                    M[r][c] = -dK[r][c]
        if b_rows and a_cols:
            Fm = F.get(n - 1)
            for r in range(b_rows):
                for c in range(a_cols):
                    M[a_rows + r][c] = Fm[r][c]
        if b_rows and b_cols:
            dL = cL.d(n)
            for r in range(b_rows):
                for c in range(b_cols):
                    M[a_rows + r][a_cols + c] = dL[r][c]
        bd[n] = M
    return ChainComplex(sizes, bd)


def _components(K: SimplicialSet):
    parent = {v: v for v in (K.simplices[0] if K.dim >= 0 else ())}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    if K.dim >= 1:
        for e in K.simplices[1]:
            a, b = find(K.faces[(e, 0)][0]), find(K.faces[(e, 1)][0])
            if a != b:
                parent[a] = b
    return {v: find(v) for v in parent}


def pi0_bijection(f: SimplicialMap) -> bool:
    cK, cL = _components(f.source), _components(f.target)
    image = {}
    for v, r in cK.items():
        w = cL[f.images[v][0]]
        if image.setdefault(r, w) != w:
            return False
    hit = set(image.values())
    return len(hit) == len(image) and hit == set(cL.values())


@dataclass
class HomologyEquivalence:
    verdict: bool
    pi0_bijection: bool
    cone: HomologyResult
    matrices: dict = field(default_factory=dict)
    test: str = PROXY

    def to_dict(self):
        return {"test": self.test, "verdict": self.verdict,
                "pi0_bijection": self.pi0_bijection,
                "cone": self.cone.to_dict()}


def induced_homology_map(f: SimplicialMap,
                         matrices: bool = True) -> HomologyEquivalence:
    """Induced maps on H_n plus the homology-proxy verdict.

    ``matrices[n]`` has one row per generator of H_n(target) and one column
    per generator of H_n(source); rows of torsion generators are reduced
    modulo their order.  The verdict asks for a π0 bijection and an acyclic
    mapping cone, i.e. an isomorphism on every H_n(−; Z).
    """
    K, L = f.source, f.target
    mats = {}
    if matrices:
        cK, cL = chain_complex(K), chain_complex(L)
        F = chain_map_matrices(f)
    for n in range(K.dim + 1 if matrices else 0):
        bK, bL = homology_basis(cK, n), homology_basis(cL, n)
        cols = []
        for g in bK.generators:
            img = _matvec(F[n], g) if F[n] else []
            cols.append(bL.coordinates(img) if bL.generators else [])
        mats[n] = [[cols[c][r] for c in range(len(cols))]
                   for r in range(len(bL.generators))]
    cone = complex_homology(mapping_cone(f))
    p0 = pi0_bijection(f)
    return HomologyEquivalence(p0 and cone.is_acyclic(), p0, cone, mats)


def is_homology_equivalence(f: SimplicialMap) -> bool:
    return induced_homology_map(f, matrices=False).verdict


# ---------------------------------------------------------------------------
# enumeration of simplicial maps

class _MapCandidates:
    """Candidate images for the nondegenerate simplices of K in Z."""

    def __init__(self, K: SimplicialSet, Z: SimplicialSet):
        self.K, self.Z = K, Z
        self._index = {}

    def _by_vertices(self, n):
        if n not in self._index:
            idx = {}
            for x in self.Z.all_simplices(n):
                idx.setdefault(self.Z.vertices(x), []).append(x)
            self._index[n] = idx
        return self._index[n]

    def __call__(self, z, lookup):
        K, Z = self.K, self.Z
        n = K.dim_of[z]
        if n == 0:
            return [(w, (0,)) for w in Z.simplices[0]] if Z.dim >= 0 else []
        x = K.general(z)
        verts = tuple(lookup(v)[0] for v in K.vertices(x))
        cands = self._by_vertices(n).get(verts, [])
        want = []
        for k in range(n + 1):
            w, rho = K.faces[(z, k)]
            want.append(Z.act(lookup(w), rho))
        return [c for c in cands
                if all(Z.face(c, k) == want[k] for k in range(n + 1))]


def enumerate_simplicial_maps(K: SimplicialSet, Z: SimplicialSet,
                              max_dim: int | None = None,
                              budget=None) -> list:
    """All simplicial maps K -> Z by backtracking up the skeleta."""
    if max_dim is not None and K.dim > max_dim:
        raise ValueError(f"source has dimension {K.dim} > max_dim {max_dim}")
    cand = _MapCandidates(K, Z)
    variables = [z for layer in K.simplices for z in layer]
    maps = []
    for sol in solve(variables, lambda z, a: cand(z, a.__getitem__),
                     budget=as_budget(budget)):
        maps.append(SimplicialMap(K, Z, sol))
    return maps
