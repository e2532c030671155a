"""Exact integer linear algebra: Smith normal form, solving, kernels, lattices.

All matrices are lists of lists of Python ints (arbitrary precision).  The
pivoting rule is deterministic -- smallest nonzero absolute value, ties broken
row-major -- so certificates are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    cols_b = len(b[0]) if b else 0
    out = [[0] * cols_b for _ in range(len(a))]
    for i, row in enumerate(a):
        for k, aik in enumerate(row):
            if aik:
                brow = b[k]
                orow = out[i]
                for j in range(cols_b):
                    orow[j] += aik * brow[j]
    return out


def mat_vec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


@dataclass
class SNFResult:
    """U @ A @ V == S with U, V unimodular and S in Smith normal form."""

    s: list[list[int]]
    u: list[list[int]]
    v: list[list[int]]

    @property
    def diagonal(self) -> list[int]:
        n = min(len(self.s), len(self.s[0]) if self.s else 0)
        return [self.s[i][i] for i in range(n)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _find_pivot(s, t, rows, cols):
    best = None
    for i in range(t, rows):
        row = s[i]
        for j in range(t, cols):
            x = row[j]
            if x:
                key = abs(x)
                if best is None or key < best[0]:
                    best = (key, i, j)
    return best


def smith_normal_form(a: list[list[int]]) -> SNFResult:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    s = [list(row) for row in a]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        if i != j:
            s[i], s[j] = s[j], s[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in s:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, mult):
        # row[dst] += mult * row[src]
        if mult:
            s[dst][:] = [x + mult * y for x, y in zip(s[dst], s[src])]
            u[dst][:] = [x + mult * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, mult):
        if mult:
            for row in s:
                row[dst] += mult * row[src]
            for row in v:
                row[dst] += mult * row[src]

    t = 0
    while t < min(rows, cols):
        found = _find_pivot(s, t, rows, cols)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(t, pi)
        swap_cols(t, pj)

        # Clear column and row t; restart elimination whenever a remainder
        # forces a smaller pivot into position.
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    add_row(i, t, -q)
                    if s[i][t]:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    add_col(j, t, -q)
                    if s[t][j]:
                        swap_cols(j, t)
                        dirty = True

        # Divisibility condition: pivot must divide the rest of the block.
        piv = s[t][t]
        offender = None
        for i in range(t + 1, rows):
            row = s[i]
            for j in range(t + 1, cols):
                if row[j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue  # redo this t with the new row
        if piv < 0:
            s[t][:] = [-x for x in s[t]]
            u[t][:] = [-x for x in u[t]]
        t += 1

    return SNFResult(s=s, u=u, v=v)


def solve(a: list[list[int]], b: list[int]) -> list[int] | None:
    """One integer solution x of A x = b, or None if there is none."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [0] * cols if all(x == 0 for x in b) else None
    snf = smith_normal_form(a)
    ub = mat_vec(snf.u, b)
    y = [0] * cols
    diag = snf.diagonal
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        if d:
            if ub[i] % d:
                return None
            y[i] = ub[i] // d
        elif ub[i]:
            return None
    return mat_vec(snf.v, y)


def kernel_basis(a: list[list[int]]) -> list[list[int]]:
    """Basis of the integer lattice {x : A x = 0}."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return identity_matrix(cols)
    snf = smith_normal_form(a)
    rank = snf.rank
    vt = transpose(snf.v)  # rows of vt are columns of V
    return [list(vt[j]) for j in range(rank, cols)]


def in_lattice(basis: list[list[int]], vector: list[int]) -> bool:
    """Is `vector` an integer combination of the rows of `basis`?"""
    if not basis:
        return all(x == 0 for x in vector)
    return solve(transpose(basis), vector) is not None


def lattice_rank(basis: list[list[int]]) -> int:
    if not basis:
        return 0
    return smith_normal_form(basis).rank


def lattice_equal(
    basis_a: list[list[int]], basis_b: list[list[int]]
) -> tuple[bool, list[list[int]]]:
    """Decide span_Z(basis_a) == span_Z(basis_b) by mutual membership.

    Returns (equal, vectors of basis_a not contained in span(basis_b)).
    """
    missing = [row for row in basis_a if not in_lattice(basis_b, row)]
    if missing:
        return False, missing
    extra = [row for row in basis_b if not in_lattice(basis_a, row)]
    return (not extra), missing
