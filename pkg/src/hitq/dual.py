"""Divided power algebra dual to P_q: right Steenrod action and primitives.

A divided monomial a_1^{(j_1)}...a_q^{(j_q)} is stored as the tuple of its
orders (j_1,...,j_q) -- the same tuple universe as exponent vectors on the
polynomial side, which makes the order/exponent pairing a set intersection.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from . import linalg
from .poly import Polynomial, binom2, monomials

DividedMonomial = tuple  # tuple[int, ...]
DualElement = frozenset  # frozenset[DividedMonomial]


def dual_element(terms: Iterable[DividedMonomial]) -> DualElement:
    out: set = set()
    for t in terms:
        t = tuple(t)
        if t in out:
            out.discard(t)
        else:
            out.add(t)
    return frozenset(out)


def _dual_sq_monomial(t: int, m: DividedMonomial) -> list:
    """Terms of (m)Sq^t: distribute t with per-variable factors binom2(j-t_s, t_s)."""
    q = len(m)
    out: list = []

    def walk(i: int, remaining: int, acc: list):
        if i == q:
            if remaining == 0:
                out.append(tuple(acc))
            return
        j = m[i]
        for ts in range(min(remaining, j // 2) + 1):
            if binom2(j - ts, ts):
                acc.append(j - ts)
                walk(i + 1, remaining - ts, acc)
                acc.pop()

    walk(0, t, [])
    return out


def dual_sq(t: int, e: Iterable[DividedMonomial]) -> DualElement:
    """Right action of Sq^t on a dual element."""
    assert t >= 0
    if t == 0:
        return dual_element(e)
    out: set = set()
    for m in e:
        for r in _dual_sq_monomial(t, tuple(m)):
            if r in out:
                out.discard(r)
            else:
                out.add(r)
    return frozenset(out)


def dual_degree(e: DualElement) -> int:
    degs = {sum(m) for m in e}
    if len(degs) > 1:
        raise ValueError("dual element is not homogeneous")
    return degs.pop() if degs else 0


def is_primitive(e: Iterable[DividedMonomial]) -> bool:
    """True when every positive Steenrod square kills e (Sq^{2^i} suffice)."""
    e = dual_element(e)
    if not e:
        return True
    n = dual_degree(e)
    i = 0
    while (1 << i) <= n:
        if dual_sq(1 << i, e):
            return False
        i += 1
    return True


@lru_cache(maxsize=None)
def primitive_basis(q: int, n: int) -> tuple:
    """Basis of the simultaneous kernel of the dual_sq(2^i), as DualElements."""
    src = monomials(q, n)
    idx = {m: k for k, m in enumerate(src)}
    rows: list = []
    i = 0
    while (1 << i) <= n:
        t = 1 << i
        tgt = {u: k for k, u in enumerate(monomials(q, n - t))}
        functional = [0] * len(tgt)
        for m in src:
            for u in _dual_sq_monomial(t, m):
                functional[tgt[u]] ^= 1 << idx[m]
        rows.extend(v for v in functional if v)
        i += 1
    kernel = linalg.kernel_basis(rows, len(src))
    return tuple(
        frozenset(src[c] for c in linalg.support(v)) for v in kernel
    )


def pairing(e: Iterable[DividedMonomial], f: Polynomial) -> int:
    """GF(2) pairing: parity of order tuples of e matching exponent tuples of f."""
    e = {tuple(m) for m in e}
    return len(e & set(f)) & 1


def _solve_particular(eqs: list) -> int | None:
    """One solution of a GF(2) system given as (column mask, rhs bit) pairs.

    Leftmost-pivot elimination with free variables set to zero; returns the
    solution as a column bitmask, or None when inconsistent.
    """
    pivots: dict[int, tuple] = {}
    for mask, rhs in eqs:
        while mask:
            c = (mask & -mask).bit_length() - 1
            if c in pivots:
                pm, pr = pivots[c]
                mask ^= pm
                rhs ^= pr
            else:
                pivots[c] = (mask, rhs)
                break
        if not mask and rhs:
            return None
    sol = 0
    for c in sorted(pivots, reverse=True):
        mask, rhs = pivots[c]
        # columns above c are already decided; bit c of sol is still clear
        if rhs ^ ((mask & sol).bit_count() & 1):
            sol |= 1 << c
    return sol


def coinvariant_generators(q: int, n: int, gens) -> list:
    """Primitive duals pairing delta-wise against the invariant classes.

    For each invariant basis class [u_a] of the quotient under `gens`, produce
    a primitive e_a with pairing(e_a, u_b) = delta_ab; the certificate is that
    pairing row, recomputed from the returned element.
    """
    from . import action, hit

    space = hit.quotient_basis(q, n)
    inv_vectors = action.invariant_subspace(space, gens)
    if not inv_vectors:
        return []
    invs = [
        frozenset(space.admissible[c] for c in linalg.support(v))
        for v in inv_vectors
    ]
    prims = primitive_basis(q, n)
    pair = [[pairing(p, u) for p in prims] for u in invs]
    out = []
    for a in range(len(invs)):
        eqs = []
        for b, row in enumerate(pair):
            mask = 0
            for k, bit in enumerate(row):
                if bit:
                    mask |= 1 << k
            eqs.append((mask, 1 if b == a else 0))
        sol = _solve_particular(eqs)
        if sol is None:
            raise RuntimeError(
                f"no primitive pairs against invariant {a} at (q={q}, n={n}); "
                "duality between primitives and the quotient is broken"
            )
        e = frozenset()
        for k in linalg.support(sol):
            e = e.symmetric_difference(prims[k])
        cert = tuple(pairing(e, u) for u in invs)
        assert cert == tuple(1 if b == a else 0 for b in range(len(invs)))
        out.append((e, cert))
    return out


def kameko_up_dual(e: Iterable[DividedMonomial]) -> DualElement:
    """Orderwise j -> 2j+1, the dual of the Kameko down map."""
    return dual_element(tuple(2 * j + 1 for j in m) for m in e)


__all__ = [
    "DividedMonomial",
    "DualElement",
    "dual_element",
    "dual_sq",
    "dual_degree",
    "is_primitive",
    "primitive_basis",
    "pairing",
    "coinvariant_generators",
    "kameko_up_dual",
]
