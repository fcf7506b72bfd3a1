"""Symmetric-group and GL(q) actions on the quotients, and their invariants.

Generators act by linear substitution on representatives and reduce back to
basis coordinates; invariants are the simultaneous kernel of the matrices
M_g + I (fixed points of the generators are fixed points of the group).
"""

from __future__ import annotations

from . import hit, linalg, poly


def sigma_generators(q: int) -> list:
    """Transpositions x_j <-> x_{j+1} for 1 <= j < q, as GF(2) matrices."""
    out = []
    for j in range(q - 1):
        g = [[1 if r == c else 0 for c in range(q)] for r in range(q)]
        g[j][j] = g[j + 1][j + 1] = 0
        g[j][j + 1] = g[j + 1][j] = 1
        out.append(g)
    return out


def gl_generators(q: int) -> list:
    """The transpositions plus the transvection x_1 -> x_1 + x_2."""
    out = sigma_generators(q)
    g = [[1 if r == c else 0 for c in range(q)] for r in range(q)]
    g[0][1] = 1
    out.append(g)
    return out


def group_generators(q: int, kind: str) -> list:
    if kind == "sigma":
        return sigma_generators(q)
    if kind == "gl":
        return gl_generators(q)
    raise ValueError(f"unknown group kind {kind!r}")


def _space_basis(space) -> tuple:
    return space.admissible if hasattr(space, "admissible") else space.basis


def action_matrix(g, space) -> list:
    """Columns (as bit vectors) of the induced action of g on the space."""
    cols = []
    for m in _space_basis(space):
        cols.append(space.reduce_vec(poly.linear_substitute(g, frozenset({m}))))
    return cols


def _fixed_point_rows(cols: list, dim: int) -> list:
    """Rows of M + I from the columns of M."""
    rows = [0] * dim
    for c, col in enumerate(cols):
        col ^= 1 << c
        for r in linalg.support(col):
            rows[r] |= 1 << c
    return [r for r in rows if r]


def invariant_subspace(space, gens) -> list:
    """Basis vectors (space coordinates) of the common fixed points of gens."""
    dim = len(_space_basis(space))
    rows: list = []
    for g in gens:
        rows.extend(_fixed_point_rows(action_matrix(g, space), dim))
    return linalg.kernel_basis(rows, dim)


def kernel_invariants(q: int, n: int, gens) -> list:
    """Invariants of the Kameko kernel inside Q^q_n (admissible coordinates)."""
    kernel = hit.kameko_kernel(q, n)
    if not kernel:
        return []
    space = hit.quotient_basis(q, n)
    k = len(kernel)
    restricted = []
    for g in gens:
        cols = []
        for v in kernel:
            image = space.reduce_vec(
                poly.linear_substitute(g, space.poly_of_vec(v))
            )
            comb = linalg.solve_combination(kernel, image)
            if comb is None:
                raise RuntimeError(
                    f"Kameko kernel is not stable under the action at (q={q}, n={n})"
                )
            cols.append(comb)
        restricted.append(cols)
    rows: list = []
    for cols in restricted:
        rows.extend(_fixed_point_rows(cols, k))
    out = []
    for w in linalg.kernel_basis(rows, k):
        v = 0
        for j in linalg.support(w):
            v ^= kernel[j]
        out.append(v)
    return out


__all__ = [
    "sigma_generators",
    "gl_generators",
    "group_generators",
    "action_matrix",
    "invariant_subspace",
    "kernel_invariants",
]
