"""Hit subspaces Abar(P_q)_n, admissible bases of Q^q_n, weight quotients, Kameko kernel.

Degree-n monomials, sorted ascending in the weight-then-exponent order, are
the coordinates of one big GF(2) elimination; the greatest monomial of a hit
element is its pivot, and the non-pivot monomials represent the quotient
basis.  For large degrees the elimination is seeded: every monomial whose
weight is below the minimal spike's weight is certainly hit, so those
coordinates enter as singleton pivot rows and the Sq^{2^i} generator stream
is projected onto the surviving coordinates.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from . import linalg, poly
from .poly import Monomial, Polynomial, WeightVector

CACHE_VERSION = 1


# --- cache ------------------------------------------------------------------

def cache_dir() -> Path:
    env = os.environ.get("HITQ_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hitq"


def _cache_base(q: int, n: int) -> Path:
    return cache_dir() / f"hit-q{q}-n{n}-v{CACHE_VERSION}"


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


# --- hit subspace ------------------------------------------------------------

@dataclass
class HitSubspace:
    """Echelonized span of Abar(P_q)_n over the degree-n monomial coordinates."""

    q: int
    n: int
    echelon: linalg.EchelonBasis
    engine: str = "full"

    @property
    def rank(self) -> int:
        return self.echelon.rank


def _universe(q: int, n: int) -> tuple:
    return poly.monomials(q, n)


@lru_cache(maxsize=None)
def _index(q: int, n: int) -> dict:
    return {m: k for k, m in enumerate(_universe(q, n))}


def vectorize(f: Polynomial, q: int, n: int) -> int:
    idx = _index(q, n)
    v = 0
    for m in f:
        if m not in idx:
            raise ValueError(f"term {m} is not a degree-{n} monomial in {q} variables")
        v ^= 1 << idx[m]
    return v


def unvectorize(v: int, q: int, n: int) -> Polynomial:
    uni = _universe(q, n)
    return frozenset(uni[c] for c in linalg.support(v))


def _generator_stream(q: int, n: int):
    """Vectors Sq^{2^i}(m) over all i with 2^i <= n and all m of degree n-2^i."""
    idx = _index(q, n)
    i = 0
    while (1 << i) <= n:
        t = 1 << i
        for m in _universe(q, n - t):
            v = 0
            for r in poly.sq_monomial(t, m):
                v ^= 1 << idx[r]
            if v:
                yield v
        i += 1


def hit_subspace(q: int, n: int, engine: str = "auto") -> HitSubspace:
    """Span of the Sq^{2^i} images in degree n (equals Abar(P_q)_n)."""
    assert n >= 0
    width = len(_universe(q, n))
    if engine == "auto":
        if n <= 24:
            engine = "full"
        elif poly.mu(n) > q:
            engine = "wood"
        else:
            engine = "seeded"
    basis = linalg.EchelonBasis(width)
    if engine == "wood":
        # mu(n) > q: every monomial is hit, no elimination needed
        assert poly.mu(n) > q
        for c in range(width):
            basis.insert(1 << c)
        return HitSubspace(q, n, basis, engine)
    mask = (1 << width) - 1
    if engine == "seeded":
        spike = poly.minimal_spike(q, n)
        assert spike is not None, "seeding needs a minimal spike (mu(n) <= q)"
        spike_w = poly.weight_of(spike)
        for c, m in enumerate(_universe(q, n)):
            if poly.weight_of(m) < spike_w:
                basis.insert(1 << c)
                mask ^= 1 << c
    elif engine != "full":
        raise ValueError(f"unknown engine {engine!r}")
    for v in _generator_stream(q, n):
        v &= mask
        if v:
            basis.insert(v)
    return HitSubspace(q, n, basis, engine)


# --- quotient -----------------------------------------------------------------

@dataclass
class QuotientBasis:
    """Admissible (non-pivot) monomials spanning Q^q_n, plus the hit reducer."""

    q: int
    n: int
    admissible: tuple
    hit: HitSubspace
    _coord_to_pos: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.admissible)

    def reduce_vec(self, f: Polynomial) -> int:
        """Coordinates of [f] over the admissible basis."""
        v = self.hit.echelon.reduce(vectorize(f, self.q, self.n))
        out = 0
        for c in linalg.support(v):
            out |= 1 << self._coord_to_pos[c]
        return out

    def poly_of_vec(self, w: int) -> Polynomial:
        return frozenset(self.admissible[k] for k in linalg.support(w))


def _make_quotient(q: int, n: int, hs: HitSubspace) -> QuotientBasis:
    uni = _universe(q, n)
    pivots = set(hs.echelon.pivots())
    admissible = tuple(m for c, m in enumerate(uni) if c not in pivots)
    pos = {}
    k = 0
    for c, m in enumerate(uni):
        if c not in pivots:
            pos[c] = k
            k += 1
    return QuotientBasis(q, n, admissible, hs, pos)


_QCACHE: dict = {}


def quotient_basis(q: int, n: int, engine: str = "auto", cache: bool = True) -> QuotientBasis:
    """Q^q_n with its admissible monomial basis (cached on disk per (q,n))."""
    key = (q, n)
    if key in _QCACHE:
        return _QCACHE[key]
    qb = _load_cached(q, n) if cache else None
    if qb is None:
        qb = _make_quotient(q, n, hit_subspace(q, n, engine))
        if cache:
            _save_cached(qb)
    _QCACHE[key] = qb
    return qb


def _save_cached(qb: QuotientBasis) -> None:
    width = len(_universe(qb.q, qb.n))
    nbytes = (width + 7) // 8
    rows = [qb.hit.echelon.rows_by_pivot()[p] for p in qb.hit.echelon.pivots()]
    blob = b"".join(r.to_bytes(nbytes, "little") for r in rows)
    meta = {
        "q": qb.q,
        "n": qb.n,
        "version": CACHE_VERSION,
        "width": width,
        "rank": len(rows),
        "dim": qb.dim,
        "engine": qb.hit.engine,
        "omega": [[list(w), d] for w, d in weight_dimensions(qb).items()],
    }
    base = _cache_base(qb.q, qb.n)
    _atomic_write(base.with_suffix(".bin"), blob)
    _atomic_write(
        base.with_suffix(".json"), json.dumps(meta, sort_keys=True).encode()
    )


def _load_cached(q: int, n: int):
    base = _cache_base(q, n)
    jp, bp = base.with_suffix(".json"), base.with_suffix(".bin")
    if not (jp.exists() and bp.exists()):
        return None
    try:
        meta = json.loads(jp.read_text())
    except ValueError:
        return None
    width = len(_universe(q, n))
    if meta.get("version") != CACHE_VERSION or meta.get("width") != width:
        return None
    nbytes = (width + 7) // 8
    blob = bp.read_bytes()
    if len(blob) != meta["rank"] * nbytes:
        return None
    basis = linalg.EchelonBasis(width)
    for k in range(meta["rank"]):
        basis.insert(int.from_bytes(blob[k * nbytes : (k + 1) * nbytes], "little"))
    if basis.rank != meta["rank"]:
        return None
    hs = HitSubspace(q, n, basis, meta.get("engine", "full"))
    qb = _make_quotient(q, n, hs)
    if qb.dim != meta["dim"]:
        return None
    return qb


def reduce_mod_hit(f: Polynomial, basis: QuotientBasis) -> int:
    """Canonical coordinates of [f] over basis.admissible; zero iff f is hit."""
    return basis.reduce_vec(f)


# --- weight filtration ----------------------------------------------------------

def enumerate_weights(q: int, n: int) -> list:
    """All weight vectors realized by degree-n monomials, ascending."""
    return sorted({poly.weight_of(m) for m in _universe(q, n)})


@dataclass
class WeightQuotient:
    """(Q^q_n)^omega: exact-weight monomials modulo the omega-block reducer."""

    q: int
    n: int
    omega: WeightVector
    basis: tuple
    _rows: dict = field(repr=False)  # pivot coordinate -> projected row
    _coord_to_pos: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce_vec(self, f: Polynomial) -> int:
        """Coordinates of [f]_omega; lower-weight terms die, higher ones error."""
        idx = _index(self.q, self.n)
        v = 0
        for m in f:
            w = poly.weight_of(m)
            if w == self.omega:
                v ^= 1 << idx[m]
            elif w > self.omega:
                raise ValueError(f"term {m} has weight above {self.omega}")
        rest = 0
        while v:
            p = v.bit_length() - 1
            row = self._rows.get(p)
            if row is not None:
                v ^= row
            else:
                v ^= 1 << p
                rest |= 1 << p
        out = 0
        for c in linalg.support(rest):
            out |= 1 << self._coord_to_pos[c]
        return out

    def poly_of_vec(self, w: int) -> Polynomial:
        return frozenset(self.basis[k] for k in linalg.support(w))


def weight_quotient(q: int, n: int, omega: WeightVector) -> WeightQuotient:
    """The weight-filtered quotient, read off the shared elimination.

    A forward-echelon row's support weights never exceed its pivot's weight,
    so rows whose pivot has weight exactly omega, projected to the exact-omega
    coordinates, reduce the block; everything lower-weight projects away.
    """
    omega = tuple(omega)
    if poly.weight_degree(omega) != n:
        raise ValueError(f"deg{omega} != {n}")
    qb = quotient_basis(q, n)
    uni = _universe(q, n)
    block = [c for c, m in enumerate(uni) if poly.weight_of(m) == omega]
    bmask = 0
    for c in block:
        bmask |= 1 << c
    rows = {}
    by_pivot = qb.hit.echelon.rows_by_pivot()
    for c in block:
        row = by_pivot.get(c)
        if row is not None:
            rows[c] = row & bmask
    basis = tuple(uni[c] for c in block if c not in rows)
    pos = {}
    k = 0
    for c in block:
        if c not in rows:
            pos[c] = k
            k += 1
    return WeightQuotient(q, n, omega, basis, rows, pos)


def weight_quotient_direct(q: int, n: int, omega: WeightVector) -> int:
    """Dimension of (Q^q_n)^omega by the literal subspace intersection route.

    Span(hit generators + all lower-weight monomials) is intersected with the
    coordinate subspace of weight <= omega, then reduced mod the lower-weight
    coordinates; kept as an independent cross-check of weight_quotient.
    """
    omega = tuple(omega)
    if poly.weight_degree(omega) != n:
        raise ValueError(f"deg{omega} != {n}")
    uni = _universe(q, n)
    width = len(uni)
    allowed = 0
    exact = []
    lower = []
    for c, m in enumerate(uni):
        w = poly.weight_of(m)
        if w <= omega:
            allowed |= 1 << c
        if w == omega:
            exact.append(c)
        elif w < omega:
            lower.append(c)
    gens = [1 << c for c in lower]
    gens.extend(_generator_stream(q, n))
    inter = linalg.intersect_coordinate_subspace(gens, width, allowed)
    block = linalg.EchelonBasis(width)
    emask = 0
    for c in exact:
        emask |= 1 << c
    for row in inter.rows():
        block.insert(row & emask)
    return len(exact) - block.rank


def weight_dimensions(qb: QuotientBasis) -> dict:
    """dim (Q^q_n)^omega for every realized omega, from the pivot weights."""
    uni = _universe(qb.q, qb.n)
    total: dict = {}
    for m in uni:
        w = poly.weight_of(m)
        total[w] = total.get(w, 0) + 1
    for c in qb.hit.echelon.pivots():
        total[poly.weight_of(uni[c])] -= 1
    return {w: d for w, d in sorted(total.items())}


# --- Singer filter and Kameko kernel ---------------------------------------------

def singer_hit_filter(m: Monomial, n: int | None = None) -> bool:
    """True when m's weight sits strictly below the minimal spike's (certainly hit)."""
    q = len(m)
    if n is None:
        n = poly.degree(m)
    elif poly.degree(m) != n:
        raise ValueError("degree mismatch")
    spike = poly.minimal_spike(q, n)
    if spike is None:
        raise ValueError(f"not applicable: mu({n}) > {q}")
    return poly.weight_of(m) < poly.weight_of(spike)


def kameko_kernel(q: int, n: int) -> list:
    """Basis of Ker(Q^q_n -> Q^q_{(n-q)/2}), as admissible coordinate vectors."""
    if (n - q) % 2 or n < q:
        raise ValueError(f"Kameko down map undefined at (q={q}, n={n})")
    nd = (n - q) // 2
    src = quotient_basis(q, n)
    tgt = quotient_basis(q, nd)
    columns = []
    for m in src.admissible:
        d = poly.kameko_down(m)
        columns.append(tgt.reduce_vec(frozenset({d})) if d is not None else 0)
    rows = [0] * tgt.dim
    for i, col in enumerate(columns):
        for c in linalg.support(col):
            rows[c] |= 1 << i
    return linalg.kernel_basis([r for r in rows if r], src.dim)


__all__ = [
    "HitSubspace",
    "QuotientBasis",
    "WeightQuotient",
    "cache_dir",
    "vectorize",
    "unvectorize",
    "hit_subspace",
    "quotient_basis",
    "reduce_mod_hit",
    "enumerate_weights",
    "weight_quotient",
    "weight_quotient_direct",
    "weight_dimensions",
    "singer_hit_filter",
    "kameko_kernel",
]
