"""Deterministic worked examples and counterexamples.

Each builder returns a :class:`CatalogEntry` whose ``expected`` block records
the verdict and, for Hopf entries, the counit and antipode computed in closed
form from the group law or the presentation (not by the engine).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import FinDimAlgebra, validate_algebra
from .comult import Comultiplication, validate_comultiplication
from .errors import InvalidGroup
from .exactlin import Matrix, vector


@dataclass(frozen=True)
class Expected:
    verdict: str                      # "hopf" | "not_hopf"
    epsilon: tuple | None = None
    antipode: Matrix | None = None
    reason: str | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: FinDimAlgebra
    comult: Comultiplication
    expected: Expected
    notes: dict = field(default_factory=dict)


# --- finite groups ----------------------------------------------------------


def check_cayley_table(table: Sequence[Sequence[int]]) -> int:
    """Validate a Cayley table; return the index of the identity."""
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise InvalidGroup("Cayley table must be a non-empty square")
    if any(not (isinstance(x, int) and 0 <= x < n) for r in table for x in r):
        raise InvalidGroup("Cayley table entries must be element indices")
    ident = [e for e in range(n) if all(table[e][g] == g == table[g][e] for g in range(n))]
    if not ident:
        raise InvalidGroup("no identity element")
    e = ident[0]
    for g in range(n):
        if not any(table[g][h] == e == table[h][g] for h in range(n)):
            raise InvalidGroup(f"element {g} has no inverse")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InvalidGroup(f"not associative at ({a}, {b}, {c})")
    return e


def group_inverses(table: Sequence[Sequence[int]]) -> list:
    e = check_cayley_table(table)
    n = len(table)
    return [next(h for h in range(n) if table[g][h] == e) for g in range(n)]


def cyclic_table(n: int) -> list:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def cyclic_labels(n: int, gen: str = "c") -> list:
    if n == 2:
        return ["e", "s"]
    return ["e"] + [gen if k == 1 else f"{gen}{k}" for k in range(1, n)]


def s3_group() -> tuple:
    """Permutations of {0,1,2} in lexicographic order; product is composition
    ``(p*q)(x) = p(q(x))``."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    labels = ["e" if p == (0, 1, 2) else "p" + "".join(map(str, p)) for p in perms]
    return table, labels


def _permutation_matrix(images: Sequence[int]) -> Matrix:
    n = len(images)
    return Matrix([[1 if images[c] == r else 0 for c in range(n)] for r in range(n)], n)


def build_group_algebra(table, labels=None, name: str | None = None) -> CatalogEntry:
    """Q[G] with Delta(g) = g (x) g; antipode g -> g^-1, counit 1 on each g."""
    e = check_cayley_table(table)
    n = len(table)
    labels = list(labels) if labels is not None else [f"g{i}" for i in range(n)]
    consts = {(i, j, table[i][j]): 1 for i in range(n) for j in range(n)}
    alg = validate_algebra(labels, consts)
    cm = validate_comultiplication(alg, {(i, i, i): 1 for i in range(n)})
    inv = group_inverses(table)
    expected = Expected("hopf", epsilon=vector([1] * n), antipode=_permutation_matrix(inv))
    return CatalogEntry(name or f"Q[G{n}]", alg, cm, expected, {"identity": e})


def build_function_algebra(table, labels=None, name: str | None = None) -> CatalogEntry:
    """F(G): pointwise product, Delta(delta_g) = sum over hk = g of delta_h (x) delta_k."""
    e = check_cayley_table(table)
    n = len(table)
    base = list(labels) if labels is not None else [f"g{i}" for i in range(n)]
    labels = [f"d_{x}" for x in base]
    alg = validate_algebra(labels, {(i, i, i): 1 for i in range(n)})
    delta = {(table[h][k], h, k): 1 for h in range(n) for k in range(n)}
    cm = validate_comultiplication(alg, delta)
    inv = group_inverses(table)
    eps = vector([1 if g == e else 0 for g in range(n)])
    expected = Expected("hopf", epsilon=eps, antipode=_permutation_matrix(inv))
    return CatalogEntry(name or f"F(G{n})", alg, cm, expected, {"identity": e})


def build_sweedler_h4() -> CatalogEntry:
    """The 4-dimensional Hopf algebra H4: basis (1, g, x, gx), g^2 = 1, x^2 = 0, xg = -gx,
    Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x."""
    one, g, x, gx = range(4)
    consts = {
        (one, one, one): 1, (one, g, g): 1, (one, x, x): 1, (one, gx, gx): 1,
        (g, one, g): 1, (g, g, one): 1, (g, x, gx): 1, (g, gx, x): 1,
        (x, one, x): 1, (x, g, gx): -1,
        (gx, one, gx): 1, (gx, g, x): -1,
    }
    alg = validate_algebra(["1", "g", "x", "gx"], consts)
    delta = {
        (one, one, one): 1,
        (g, g, g): 1,
        (x, x, one): 1, (x, g, x): 1,
        (gx, gx, g): 1, (gx, one, gx): 1,
    }
    cm = validate_comultiplication(alg, delta)
    # S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    s = Matrix.from_columns([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0)], 4)
    expected = Expected("hopf", epsilon=vector([1, 1, 0, 0]), antipode=s)
    notes = {
        "left_integral": vector([0, 0, 0, 1]),
        "right_integral": vector([0, 0, 1, 0]),
        "left_cointegral": vector([0, 0, 1, 1]),
        "right_cointegral": vector([0, 0, 1, -1]),
    }
    return CatalogEntry("H4", alg, cm, expected, notes)


def build_monoid_bialgebra() -> CatalogEntry:
    """Q[{1, s}] with s^2 = s and Delta(1) = 1(x)1, Delta(s) = s(x)s.

    A full, unital, counital bialgebra that is not Hopf: its left integral
    is not faithful.
    """
    alg = validate_algebra(["1", "s"], {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 1): 1})
    cm = validate_comultiplication(alg, {(0, 0, 0): 1, (1, 1, 1): 1})
    expected = Expected("not_hopf", reason="no faithful left integral")
    return CatalogEntry("monoid", alg, cm, expected, {"left_cointegral": vector([0, 1])})


def group_algebra_cyclic(n: int) -> CatalogEntry:
    return build_group_algebra(cyclic_table(n), cyclic_labels(n), f"Q[C{n}]")


def function_algebra_cyclic(n: int) -> CatalogEntry:
    return build_function_algebra(cyclic_table(n), cyclic_labels(n), f"F(C{n})")


def group_algebra_s3() -> CatalogEntry:
    table, labels = s3_group()
    return build_group_algebra(table, labels, "Q[S3]")


def function_algebra_s3() -> CatalogEntry:
    table, labels = s3_group()
    return build_function_algebra(table, labels, "F(S3)")


def trivial_entry() -> CatalogEntry:
    return build_group_algebra([[0]], ["1"], "Q[1]")


def standard_catalog() -> list:
    """The entries every suite runs against, in a fixed order."""
    return [
        group_algebra_cyclic(2),
        group_algebra_cyclic(3),
        group_algebra_s3(),
        function_algebra_cyclic(2),
        function_algebra_s3(),
        build_sweedler_h4(),
        build_monoid_bialgebra(),
    ]


def hopf_entries() -> list:
    return [e for e in standard_catalog() if e.expected.verdict == "hopf"]


def by_name(name: str) -> CatalogEntry:
    for entry in standard_catalog() + [trivial_entry(), function_algebra_cyclic(3)]:
        if entry.name == name:
            return entry
    raise KeyError(name)
