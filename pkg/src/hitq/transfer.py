"""Chain-level transfer into the lambda algebra and per-degree image reports."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import action, dual, lam


@lru_cache(maxsize=None)
def _psi_orders(orders: tuple) -> frozenset:
    """Raw word set of psi on one divided monomial (no normalization).

    Recursion over the first order: each summand applies Sq^{k-j_1} to the
    tail and appends lambda_k; the sum over k stops at j_1 + deg(tail) since
    the dual action kills larger shifts.
    """
    if not orders:
        return frozenset({()})
    if len(orders) == 1:
        return frozenset({(orders[0],)})
    j1, rest = orders[0], orders[1:]
    out: set = set()
    for k in range(j1, j1 + sum(rest) + 1):
        for r in dual.dual_sq(k - j1, [rest]):
            for w in _psi_orders(r):
                w = w + (k,)
                if w in out:
                    out.discard(w)
                else:
                    out.add(w)
    return frozenset(out)


def psi(q: int, e) -> lam.Element:
    """The chain-level transfer of a dual element; output is NOT normalized."""
    out: frozenset = frozenset()
    for m in e:
        m = tuple(m)
        if len(m) != q:
            raise ValueError(f"term {m} does not have {q} orders")
        out = out.symmetric_difference(_psi_orders(m))
    return out


def transfer_class(e, q: int | None = None):
    """Normalized cycle of psi(e) with its catalog identification.

    e must be primitive; a nonzero differential would contradict the fact
    that psi carries primitives to cycles, so it raises immediately.
    """
    e = dual.dual_element(e)
    if q is None:
        if not e:
            return lam.ZERO, ()
        q = len(next(iter(e)))
    if not dual.is_primitive(e):
        raise ValueError("transfer_class requires a primitive dual element")
    z = lam.normalize(psi(q, e))
    if lam.differential(z):
        raise RuntimeError(
            "psi of a primitive is not a cycle -- internal inconsistency"
        )
    return z, lam.identify_class(z)


@dataclass
class TransferReport:
    """Transfer image summary at one degree."""

    q: int
    n: int
    generators: tuple  # (dual element, cycle, identification) triples
    image: tuple  # names of identified classes, deterministic order
    unidentified: int  # count of generators outside the catalog span

    @property
    def bidegree(self) -> tuple:
        return (self.q, self.q + self.n)


def transfer_image_report(q: int, n: int) -> TransferReport:
    """Map every coinvariant generator through the transfer and aggregate."""
    gens = action.gl_generators(q)
    triples = []
    image = []
    unidentified = 0
    for e, _cert in dual.coinvariant_generators(q, n, gens):
        z, ident = transfer_class(e, q)
        triples.append((e, z, ident))
        if ident == "unidentified":
            unidentified += 1
        else:
            image.extend(nm for nm in ident if nm not in image)
    return TransferReport(q, n, tuple(triples), tuple(image), unidentified)


def sq0_compat_check(q: int, n: int) -> bool:
    """theta(psi(e)) and psi(Kameko-up e) agree in homology for all generators."""
    gens = action.gl_generators(q)
    for e, _cert in dual.coinvariant_generators(q, n, gens):
        z = lam.normalize(psi(q, e))
        zu = lam.normalize(psi(q, dual.kameko_up_dual(e)))
        equal, _ = lam.classes_equal(lam.theta(z), zu)
        if not equal:
            return False
    return True


__all__ = [
    "psi",
    "transfer_class",
    "TransferReport",
    "transfer_image_report",
    "sq0_compat_check",
]
