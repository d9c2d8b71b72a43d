"""K(G): finitely supported functions on a group, with pointwise product.

For infinite G this algebra has no unit and Delta(f)(x, y) = f(xy) is not in
K(G)(x)K(G); it is only a multiplier. Everything here goes through the four
slices Delta(a)(1(x)b), (a(x)1)Delta(b), Delta(a)(b(x)1), (1(x)a)Delta(b),
which do have finite support, so every identity is checked on actual finite
tensors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .catalog import check_cayley_table, group_inverses
from .comult import GaloisKind
from .errors import InvalidGroup
from .exactlin import ZERO, as_scalar, format_rational


# --- groups -----------------------------------------------------------------


class Group:
    """Stateless group interface. Elements must be hashable and orderable."""

    name = "group"
    identity: Hashable = None

    def op(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def encode(self, x) -> str:
        return str(x)

    def sample(self, rng: random.Random, radius: int):
        raise NotImplementedError


class IntegerGroup(Group):
    name = "z"
    identity = 0

    def op(self, x, y):
        return x + y

    def inv(self, x):
        return -x

    def sample(self, rng, radius):
        return rng.randint(-radius, radius)


class LatticeGroup(Group):
    """Z^2 under addition."""

    name = "z2"
    identity = (0, 0)

    def op(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def inv(self, x):
        return (-x[0], -x[1])

    def encode(self, x):
        return f"({x[0]},{x[1]})"

    def sample(self, rng, radius):
        return (rng.randint(-radius, radius), rng.randint(-radius, radius))


class InfiniteDihedralGroup(Group):
    """Pairs (n, e) for r^n s^e with s r s = r^-1."""

    name = "dihedral"
    identity = (0, 0)

    def op(self, x, y):
        n1, e1 = x
        n2, e2 = y
        return (n1 - n2 if e1 else n1 + n2, e1 ^ e2)

    def inv(self, x):
        n, e = x
        return (n, 1) if e else (-n, 0)

    def encode(self, x):
        n, e = x
        return f"r^{n}" + ("s" if e else "")

    def sample(self, rng, radius):
        return (rng.randint(-radius, radius), rng.randint(0, 1))


class FiniteGroup(Group):
    """A finite group from its Cayley table; elements are indices."""

    name = "finite"

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        self.identity = check_cayley_table(table)
        self.table = tuple(tuple(r) for r in table)
        self._inv = group_inverses(table)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(len(table)))

    def op(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self._inv[x]

    def encode(self, x):
        return self.labels[x]

    def sample(self, rng, radius):
        return rng.randrange(len(self.table))

    def elements(self) -> range:
        return range(len(self.table))


GROUPS = {"z": IntegerGroup, "z2": LatticeGroup, "dihedral": InfiniteDihedralGroup}


def make_group(name: str) -> Group:
    try:
        return GROUPS[name]()
    except KeyError:
        raise InvalidGroup(f"unknown group {name!r}; choose from {sorted(GROUPS)}") from None


def group_axiom_witness(group: Group, elements: Iterable):
    """First sampled triple violating associativity, identity or inverses."""
    els = list(elements)
    e = group.identity
    for x in els:
        if group.op(e, x) != x or group.op(x, e) != x:
            return ("identity", x)
        if group.op(x, group.inv(x)) != e or group.op(group.inv(x), x) != e:
            return ("inverse", x)
        for y in els:
            for z in els:
                if group.op(group.op(x, y), z) != group.op(x, group.op(y, z)):
                    return ("associativity", x, y, z)
    return None


# --- functions --------------------------------------------------------------


@dataclass(frozen=True)
class SparseFunction:
    """A finitely supported Q-valued function; zero values are never stored."""

    items: tuple  # sorted ((element, Fraction), ...)

    @classmethod
    def from_mapping(cls, values: Mapping) -> "SparseFunction":
        clean = {g: as_scalar(c) for g, c in values.items()}
        return cls(tuple(sorted((g, c) for g, c in clean.items() if c)))

    @classmethod
    def delta(cls, g, coeff=1) -> "SparseFunction":
        return cls.from_mapping({g: coeff})

    @classmethod
    def zero(cls) -> "SparseFunction":
        return cls(())

    def as_dict(self) -> dict:
        return dict(self.items)

    @property
    def support(self) -> tuple:
        return tuple(g for g, _ in self.items)

    def __call__(self, g) -> Fraction:
        return self.as_dict().get(g, ZERO)

    def __add__(self, other: "SparseFunction") -> "SparseFunction":
        out = self.as_dict()
        for g, c in other.items:
            out[g] = out.get(g, ZERO) + c
        return SparseFunction.from_mapping(out)

    def __sub__(self, other: "SparseFunction") -> "SparseFunction":
        return self + other.scale(-1)

    def scale(self, c) -> "SparseFunction":
        c = as_scalar(c)
        return SparseFunction.from_mapping({g: c * v for g, v in self.items})

    def __mul__(self, other: "SparseFunction") -> "SparseFunction":
        od = other.as_dict()
        return SparseFunction.from_mapping({g: c * od[g] for g, c in self.items if g in od})

    def __bool__(self) -> bool:
        return bool(self.items)

    def max_abs(self) -> Fraction:
        return max((abs(c) for _, c in self.items), default=ZERO)

    def describe(self, group: Group) -> str:
        if not self.items:
            return "0"
        return " + ".join(f"{format_rational(c)}*d[{group.encode(g)}]" for g, c in self.items)


def _tensor(values: dict) -> tuple:
    return tuple(sorted((g, h, c) for (g, h), c in values.items() if c))


def slice_tensor(group: Group, kind: GaloisKind, a: SparseFunction, b: SparseFunction) -> tuple:
    """The finite tensor ``kind`` applied to a (x) b, as sorted ``(g, h, c)``.

    T1:  Delta(a)(1(x)b)  at (g, h) is a(gh) b(h)
    T2:  (a(x)1)Delta(b)  at (g, h) is a(g) b(gh)
    T1': Delta(a)(b(x)1)  at (g, h) is a(gh) b(g)
    T2': (1(x)a)Delta(b)  at (g, h) is a(h) b(gh)
    """
    kind = GaloisKind(kind)
    op, inv = group.op, group.inv
    out: dict = {}
    if kind is GaloisKind.T1:
        for h, bh in b.items:
            for k, ak in a.items:
                out[(op(k, inv(h)), h)] = ak * bh
    elif kind is GaloisKind.T2:
        for g, ag in a.items:
            for k, bk in b.items:
                out[(g, op(inv(g), k))] = ag * bk
    elif kind is GaloisKind.T1P:
        for g, bg in b.items:
            for k, ak in a.items:
                out[(g, op(inv(g), k))] = ak * bg
    else:
        for h, ah in a.items:
            for k, bk in b.items:
                out[(op(k, inv(h)), h)] = ah * bk
    return _tensor(out)


def slice_by_formula(group: Group, kind: GaloisKind, a: SparseFunction, b: SparseFunction, box: Iterable) -> tuple:
    """Brute-force evaluation of the slice formula on every (g, h) in ``box``."""
    kind = GaloisKind(kind)
    op = group.op
    out = {}
    for g, h in box:
        if kind is GaloisKind.T1:
            v = a(op(g, h)) * b(h)
        elif kind is GaloisKind.T2:
            v = a(g) * b(op(g, h))
        elif kind is GaloisKind.T1P:
            v = a(op(g, h)) * b(g)
        else:
            v = a(h) * b(op(g, h))
        if v:
            out[(g, h)] = v
    return _tensor(out)


def integral(f: SparseFunction) -> Fraction:
    """The counting functional: sum of all values. Left and right invariant."""
    return sum((c for _, c in f.items), ZERO)


def counit(group: Group, f: SparseFunction) -> Fraction:
    return f(group.identity)


def antipode(group: Group, f: SparseFunction) -> SparseFunction:
    return SparseFunction.from_mapping({group.inv(g): c for g, c in f.items})


def slice_left_leg(tensor: Sequence, functional=integral) -> SparseFunction:
    """(id(x)phi) of a finite tensor, for phi the counting functional."""
    out: dict = {}
    for g, _h, c in tensor:
        out[g] = out.get(g, ZERO) + c
    return SparseFunction.from_mapping(out)


def slice_right_leg(tensor: Sequence) -> SparseFunction:
    """(phi(x)id) of a finite tensor, for phi the counting functional."""
    out: dict = {}
    for _g, h, c in tensor:
        out[h] = out.get(h, ZERO) + c
    return SparseFunction.from_mapping(out)


def multiply_legs_twisted(group: Group, tensor: Sequence, twist_left: bool) -> SparseFunction:
    """m(S(x)id) (``twist_left``) or m(id(x)S) of a finite tensor."""
    out: dict = {}
    for g, h, c in tensor:
        if twist_left:
            g = group.inv(g)
        else:
            h = group.inv(h)
        if g == h:
            out[g] = out.get(g, ZERO) + c
    return SparseFunction.from_mapping(out)


# --- checks -----------------------------------------------------------------


def invariance_residuals(group: Group, a: SparseFunction, b: SparseFunction) -> dict:
    """Left: (id(x)phi)((b(x)1)Delta(a)) - phi(a) b.
    Right: (phi(x)id)(Delta(a)(1(x)b)) - phi(a) b."""
    left = slice_left_leg(slice_tensor(group, GaloisKind.T2, b, a)) - b.scale(integral(a))
    right = slice_right_leg(slice_tensor(group, GaloisKind.T1, a, b)) - b.scale(integral(a))
    return {"left_invariance": left.max_abs(), "right_invariance": right.max_abs()}


def engine_crosscheck(group: Group, a: SparseFunction, b: SparseFunction) -> dict:
    """Check eps(x) = phi(ab) and S(x) = (id(x)phi)((1(x)a)Delta(b)) for
    x = (id(x)phi)(Delta(a)(1(x)b)), with the closed-form eps and S."""
    x = slice_left_leg(slice_tensor(group, GaloisKind.T1, a, b))
    eps_res = abs(counit(group, x) - integral(a * b))
    s_res = (antipode(group, x) - slice_left_leg(slice_tensor(group, GaloisKind.T2P, a, b))).max_abs()
    return {"x": x, "counit_residual": eps_res, "antipode_residual": s_res}


def structure_residuals(group: Group, a: SparseFunction, b: SparseFunction) -> dict:
    """Counit/antipode identities in their sliced (multiplier) form."""
    ab = a * b
    t1 = slice_tensor(group, GaloisKind.T1, a, b)
    t2 = slice_tensor(group, GaloisKind.T2, b, a)
    return {
        "counit_multiplicative": abs(counit(group, ab) - counit(group, a) * counit(group, b)),
        "antipode_antimultiplicative": (antipode(group, ab) - antipode(group, b) * antipode(group, a)).max_abs(),
        "antipode_multiplicative": (antipode(group, ab) - antipode(group, a) * antipode(group, b)).max_abs(),
        # m(S(x)id)(Delta(a)(1(x)b)) = eps(a) b
        "antipode_convolution_left": (multiply_legs_twisted(group, t1, True) - b.scale(counit(group, a))).max_abs(),
        # m(id(x)S)((b(x)1)Delta(a)) = b eps(a)
        "antipode_convolution_right": (multiply_legs_twisted(group, t2, False) - b.scale(counit(group, a))).max_abs(),
        # (eps(x)id)(Delta(a)(1(x)b)) = ab
        "counit_left": (_apply_counit(group, t1, 0) - ab).max_abs(),
        # (id(x)eps)((b(x)1)Delta(a)) = ba
        "counit_right": (_apply_counit(group, t2, 1) - ab).max_abs(),
    }


def _apply_counit(group: Group, tensor: Sequence, leg: int) -> SparseFunction:
    out: dict = {}
    e = group.identity
    for g, h, c in tensor:
        if (g if leg == 0 else h) == e:
            k = h if leg == 0 else g
            out[k] = out.get(k, ZERO) + c
    return SparseFunction.from_mapping(out)


def random_function(group: Group, rng: random.Random, radius: int = 5, max_terms: int = 4) -> SparseFunction:
    n = rng.randint(1, max_terms)
    values = {}
    for _ in range(n):
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        den = rng.choice([1, 1, 2, 3])
        values[group.sample(rng, radius)] = Fraction(num, den)
    return SparseFunction.from_mapping(values)


def sample_pairs(group: Group, seed: int, count: int, radius: int = 5) -> list:
    rng = random.Random(seed)
    return [(random_function(group, rng, radius), random_function(group, rng, radius)) for _ in range(count)]


def run_suite(group: Group, seed: int = 0, samples: int = 50, radius: int = 5) -> dict:
    """Every backend check over a deterministic sample set."""
    pairs = sample_pairs(group, seed, samples, radius)
    elements = sorted({g for a, b in pairs for f in (a, b) for g in f.support})
    axiom = group_axiom_witness(group, elements[:12])
    maxima = {}
    finite = True
    for a, b in pairs:
        for kind in GaloisKind:
            t = slice_tensor(group, kind, a, b)
            finite = finite and len(t) <= len(a.items) * len(b.items)
        checks = {}
        checks.update(invariance_residuals(group, a, b))
        cc = engine_crosscheck(group, a, b)
        checks["crosscheck_counit"] = cc["counit_residual"]
        checks["crosscheck_antipode"] = cc["antipode_residual"]
        checks.update(structure_residuals(group, a, b))
        checks["antipode_involution"] = (antipode(group, antipode(group, a)) - a).max_abs()
        for name, r in checks.items():
            maxima[name] = max(maxima.get(name, ZERO), r)
    return {
        "group": group.name,
        "seed": seed,
        "samples": samples,
        "support_radius": radius,
        "group_axioms_on_sample": axiom is None,
        "slices_finite": finite,
        "max_residuals": maxima,
        "all_zero": finite and axiom is None and all(r == 0 for r in maxima.values()),
        "multiplier_note": (
            "Delta(f) and (id(x)phi)Delta(f) are multipliers outside K(G)(x)K(G) and K(G); "
            "they are only used through their finite slices"
        ),
    }
