"""The line-oriented ``mha-spec v1`` input format.

    mha-spec v1
    dim 2
    basis e s
    unit 1 0            # optional
    m 1 1 0 1           # coefficient of b_0 in b_1 * b_1
    d 1 1 1 1           # coefficient of b_1 (x) b_1 in Delta(b_1)

Omitted coefficients are zero; ``#`` starts a comment.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import FinDimAlgebra, validate_algebra
from .comult import Comultiplication, tensor_terms, validate_comultiplication
from .errors import SpecFileError
from .exactlin import format_rational, parse_rational

HEADER = "mha-spec v1"


@dataclass
class SpecFile:
    version: str
    dim: int
    labels: tuple
    unit: tuple | None = None
    products: dict = field(default_factory=dict)   # (i, j, k) -> Fraction
    coproducts: dict = field(default_factory=dict)  # (i, j, k) -> Fraction
    lines: dict = field(default_factory=dict)        # ("m"|"d", i, j, k) -> line number

    def build(self) -> tuple:
        """Validate into ``(FinDimAlgebra, Comultiplication)``."""
        alg = validate_algebra(self.labels, self.products, self.unit)
        cm = validate_comultiplication(alg, self.coproducts)
        return alg, cm


def _int(token: str, what: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise SpecFileError(f"{what} must be an integer, got {token!r}", line=lineno) from None
    return value


def _rational(token: str, lineno: int):
    try:
        return parse_rational(token)
    except ValueError as exc:
        raise SpecFileError(str(exc), line=lineno) from None


def parse_spec_file(text: str) -> SpecFile:
    """Parse without validating the algebra; every error carries its line."""
    spec = None
    dim = None
    labels = None
    unit = None
    products: dict = {}
    coproducts: dict = {}
    seen: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if spec is None:
            if line != HEADER:
                raise SpecFileError(f"expected header {HEADER!r}, got {line!r}", line=lineno)
            spec = HEADER
            continue
        key, args = tokens[0], tokens[1:]
        if key == "dim":
            if dim is not None:
                raise SpecFileError("duplicate dim line", line=lineno)
            if len(args) != 1:
                raise SpecFileError("dim takes one argument", line=lineno)
            dim = _int(args[0], "dim", lineno)
            if dim < 1:
                raise SpecFileError(f"dim must be positive, got {dim}", line=lineno)
        elif key == "basis":
            if dim is None:
                raise SpecFileError("basis before dim", line=lineno)
            if labels is not None:
                raise SpecFileError("duplicate basis line", line=lineno)
            if len(args) != dim:
                raise SpecFileError(f"basis has {len(args)} labels, dim is {dim}", line=lineno)
            if len(set(args)) != len(args):
                raise SpecFileError("basis labels must be distinct", line=lineno)
            labels = tuple(args)
        elif key == "unit":
            if dim is None:
                raise SpecFileError("unit before dim", line=lineno)
            if unit is not None:
                raise SpecFileError("duplicate unit line", line=lineno)
            if len(args) != dim:
                raise SpecFileError(f"unit has {len(args)} coordinates, dim is {dim}", line=lineno)
            unit = tuple(_rational(t, lineno) for t in args)
        elif key in ("m", "d"):
            if dim is None:
                raise SpecFileError(f"{key} line before dim", line=lineno)
            if len(args) != 4:
                raise SpecFileError(f"{key} line needs 'i j k p/q', got {len(args)} fields", line=lineno)
            idx = tuple(_int(t, "index", lineno) for t in args[:3])
            for n in idx:
                if not 0 <= n < dim:
                    raise SpecFileError(f"index {n} out of range for dim {dim}", line=lineno)
            coeff = _rational(args[3], lineno)
            tag = (key,) + idx
            if tag in seen:
                raise SpecFileError(f"duplicate entry {key} {idx[0]} {idx[1]} {idx[2]} (first on line {seen[tag]})", line=lineno)
            seen[tag] = lineno
            target = products if key == "m" else coproducts
            if coeff:
                target[idx] = coeff
        else:
            raise SpecFileError(f"unknown directive {key!r}", line=lineno)
    if spec is None:
        raise SpecFileError("empty file: missing header")
    if dim is None:
        raise SpecFileError("missing dim line")
    if labels is None:
        raise SpecFileError("missing basis line")
    return SpecFile(spec, dim, labels, unit, products, coproducts, seen)


def load_spec(text: str) -> tuple:
    """Parse and validate: ``(FinDimAlgebra, Comultiplication)``."""
    return parse_spec_file(text).build()


def export_spec(alg: FinDimAlgebra, cm: Comultiplication, comment: str | None = None) -> str:
    """Canonical text: entries sorted by index, zero coefficients omitted."""
    d = alg.dim
    out = [HEADER]
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"dim {d}")
    out.append("basis " + " ".join(alg.labels))
    if alg.unit is not None:
        out.append("unit " + " ".join(format_rational(c) for c in alg.unit))
    for i in range(d):
        for j in range(d):
            for k, c in alg.table[i][j]:
                out.append(f"m {i} {j} {k} {format_rational(c)}")
    for i in range(d):
        for p, q, c in tensor_terms(cm.of_basis(i), d):
            out.append(f"d {i} {p} {q} {format_rational(c)}")
    return "\n".join(out) + "\n"
