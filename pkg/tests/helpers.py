"""Small structures used by several test modules."""
from mha.algebra import validate_algebra
from mha.comult import validate_comultiplication


def semigroup_function_algebra(table):
    """Pointwise functions on a finite semigroup, Delta(d_z) = sum over xy = z."""
    n = len(table)
    alg = validate_algebra([f"d{i}" for i in range(n)], {(i, i, i): 1 for i in range(n)})
    delta = {(table[x][y], x, y): 1 for x in range(n) for y in range(n)}
    return validate_comultiplication(alg, delta)


# integral space of dimension 2, every member vanishes somewhere
TWO_DIM_INTEGRALS = [(0, 0, 2), (0, 1, 2), (0, 2, 2)]
