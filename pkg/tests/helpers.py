"""Shared oracles for the test suite.

The row-reduction oracles here are deliberately naive, textbook
implementations, independent of the package's fraction-free and
prime-field eliminations, so that agreement between the two routes is
evidence and not circularity.
"""

from fractions import Fraction


def _as_plain(x):
    """Field element to plain int or Fraction for oracle arithmetic."""
    val = getattr(x, "val", None)
    if val is not None:
        return int(val)
    if isinstance(x, Fraction):
        return x
    return int(x)


def oracle_rref_q(rows, ncols):
    """Plain fraction RREF; returns (rank, pivot columns, reduced matrix)."""
    mat = [[Fraction(_as_plain(x)) for x in row[:ncols]] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return r, pivots, mat


def oracle_kernel_q(rows, ncols):
    """(rank, kernel basis) over the rationals by back substitution."""
    rank, pivots, mat = oracle_rref_q(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r_i, pc in enumerate(pivots):
            vec[pc] = -mat[r_i][fc]
        basis.append(vec)
    return rank, basis


def oracle_rref_mod(rows, ncols, p):
    """Plain RREF with integer arithmetic mod p."""
    mat = [[_as_plain(x) % p for x in row[:ncols]] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return r, pivots, mat


def oracle_kernel_mod(rows, ncols, p):
    rank, pivots, mat = oracle_rref_mod(rows, ncols, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r_i, pc in enumerate(pivots):
            vec[pc] = (-mat[r_i][fc]) % p
        basis.append(vec)
    return rank, basis


def same_span_q(basis_a, basis_b, ncols):
    """Exact span equality of two rational bases, checked by the oracle."""
    a = [[Fraction(_as_plain(x)) for x in v] for v in basis_a]
    b = [[Fraction(_as_plain(x)) for x in v] for v in basis_b]
    if len(a) != len(b):
        return False
    rank_a, _, _ = oracle_rref_q(a, ncols)
    rank_b, _, _ = oracle_rref_q(b, ncols)
    if rank_a != len(a) or rank_b != len(b):
        return False
    rank_both, _, _ = oracle_rref_q(a + b, ncols)
    return rank_both == len(a)


def same_span_mod(basis_a, basis_b, ncols, p):
    a = [[_as_plain(x) % p for x in v] for v in basis_a]
    b = [[_as_plain(x) % p for x in v] for v in basis_b]
    if len(a) != len(b):
        return False
    rank_a, _, _ = oracle_rref_mod(a, ncols, p)
    rank_b, _, _ = oracle_rref_mod(b, ncols, p)
    if rank_a != len(a) or rank_b != len(b):
        return False
    rank_both, _, _ = oracle_rref_mod(a + b, ncols, p)
    return rank_both == len(a)


def cross_ratio(a, b, c, d):
    """(a-c)(b-d) / (a-d)(b-c) of four distinct scalars."""
    return ((a - c) * (b - d)) / ((a - d) * (b - c))
