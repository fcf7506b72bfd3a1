"""Monomials and polynomials over GF(2) with the Steenrod square action.

A monomial in q variables is a tuple of q non-negative exponents; a
polynomial is a frozenset of monomials (coefficients are implicitly 1, and
adding a duplicate term cancels it).  Degrees stay small enough that plain
ints suffice everywhere.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

Monomial = tuple  # tuple[int, ...]
Polynomial = frozenset  # frozenset[Monomial]
WeightVector = tuple  # tuple[int, ...]


def alpha(n: int) -> int:
    """Number of ones in the binary expansion of n."""
    assert n >= 0
    return n.bit_count()


def mu(n: int) -> int:
    """Smallest m with alpha(n + m) <= m."""
    assert n >= 0
    m = 0
    while alpha(n + m) > m:
        m += 1
    return m


def binom2(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) mod 2 (Lucas); 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return 0 if (a - b) & b else 1


def degree(m: Monomial) -> int:
    return sum(m)


def poly(terms: Iterable[Monomial]) -> Polynomial:
    """Polynomial from terms with GF(2) cancellation of duplicates."""
    out: set = set()
    for t in terms:
        t = tuple(t)
        if t in out:
            out.discard(t)
        else:
            out.add(t)
    return frozenset(out)


def add(*fs: Polynomial) -> Polynomial:
    out: frozenset = frozenset()
    for f in fs:
        out = out.symmetric_difference(f)
    return out


def sq_monomial(t: int, m: Monomial) -> list:
    """Terms of Sq^t applied to a monomial (distinct; no GF(2) cancellation).

    Distributes t over the variables; the per-variable coefficient is
    C(a_i, t_i) mod 2, nonzero iff the bits of t_i lie inside those of a_i.
    """
    q = len(m)
    out: list = []

    def walk(i: int, remaining: int, acc: list):
        if i == q - 1:
            if binom2(m[i], remaining):
                out.append(tuple(acc) + (m[i] + remaining,))
            return
        a = m[i]
        # t_i ranges over submasks of a (C(a, t_i) odd iff t_i's bits lie in a);
        # the enumeration is numerically increasing, so stop past `remaining`
        ti = 0
        while ti <= remaining:
            acc.append(a + ti)
            walk(i + 1, remaining - ti, acc)
            acc.pop()
            if ti == a:
                break
            ti = (ti - a) & a

    if q == 0:
        return [()] if t == 0 else []
    walk(0, t, [])
    return out


def sq(t: int, f: Polynomial) -> Polynomial:
    """Steenrod square Sq^t on a polynomial (Cartan formula, mod 2)."""
    assert t >= 0
    if t == 0:
        return frozenset(f)
    out: set = set()
    for m in f:
        for r in sq_monomial(t, m):
            if r in out:
                out.discard(r)
            else:
                out.add(r)
    return frozenset(out)


def weight_of(m: Monomial) -> WeightVector:
    """Weight vector: entry j counts exponents with bit j set (1-indexed)."""
    if not m:
        return ()
    bits = max(m).bit_length()
    w = [0] * bits
    for a in m:
        j = 0
        while a:
            if a & 1:
                w[j] += 1
            a >>= 1
            j += 1
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def weight_degree(w: WeightVector) -> int:
    """deg(omega) = sum 2^(i-1) * omega_i."""
    return sum(x << i for i, x in enumerate(w))


def order_key(m: Monomial):
    """Sort key for the monomial order: weight left-lex, then exponents left-lex.

    Weights of equal degree are never prefixes of one another, so plain tuple
    comparison realizes the left-lexicographic order.
    """
    return (weight_of(m), m)


def compare(m1: Monomial, m2: Monomial) -> int:
    """-1, 0 or 1 for m1 <, =, > m2 in the monomial order."""
    if len(m1) != len(m2) or degree(m1) != degree(m2):
        raise ValueError("monomials must share variable count and degree")
    k1, k2 = order_key(m1), order_key(m2)
    return -1 if k1 < k2 else (0 if k1 == k2 else 1)


@lru_cache(maxsize=None)
def monomials(q: int, n: int) -> tuple:
    """All degree-n monomials in q variables, ascending in the monomial order."""
    assert q >= 1 and n >= 0

    def gen(vars_left: int, rest: int):
        if vars_left == 1:
            yield (rest,)
            return
        for a in range(rest + 1):
            for tail in gen(vars_left - 1, rest - a):
                yield (a,) + tail

    return tuple(sorted(gen(q, n), key=order_key))


def is_spike(m: Monomial) -> bool:
    """True when every exponent is of the form 2^k - 1."""
    return all(a & (a + 1) == 0 for a in m)


def minimal_spike(q: int, n: int):
    """The minimal spike of degree n in q variables, or None when mu(n) > q.

    Exponents are 2^xi - 1 with xi_1 > xi_2 > ... > xi_{m-1} >= xi_m >= 1 and
    m = mu(n); returned with exponents descending, padded with zeros.
    """
    if n == 0:
        return (0,) * q
    m = mu(n)
    if m > q:
        return None

    def pick(slots: int, rest: int, cap: int):
        # choose xi for the next slot, greedily largest, honoring the
        # strict-descent-until-last-two shape
        if slots == 0:
            return [] if rest == 0 else None
        hi = min(cap, rest.bit_length())
        for xi in range(hi, 0, -1):
            val = (1 << xi) - 1
            if val > rest:
                continue
            nxt_cap = xi if slots == 2 else xi - 1
            tail = pick(slots - 1, rest - val, nxt_cap)
            if tail is not None:
                return [xi] + tail
        return None

    xs = pick(m, n, n.bit_length() + 1)
    assert xs is not None, (q, n)
    exps = [(1 << xi) - 1 for xi in xs] + [0] * (q - m)
    return tuple(exps)


@lru_cache(maxsize=None)
def _expand_power(targets: tuple, a: int) -> tuple:
    """Expansion of (sum of variables in targets)^a over GF(2).

    Each binary bit 2^b of a is given to one target variable; distinct
    assignments yield distinct exponent vectors, so there is no cancellation.
    Returns tuples of exponents aligned with `targets`.
    """
    r = len(targets)
    if r == 1:
        return ((a,),)
    out = [(0,) * r]
    b = 0
    while (1 << b) <= a:
        if (a >> b) & 1:
            piece = 1 << b
            out = [
                t[:i] + (t[i] + piece,) + t[i + 1 :]
                for t in out
                for i in range(r)
            ]
        b += 1
    return tuple(out)


def _matrix_rank2(g) -> int:
    rows = [int("".join(str(int(x)) for x in reversed(row)), 2) for row in g]
    seen: dict[int, int] = {}
    rk = 0
    for r in rows:
        while r:
            p = r.bit_length() - 1
            if p in seen:
                r ^= seen[p]
            else:
                seen[p] = r
                rk += 1
                break
    return rk


def linear_substitute(g, f: Polynomial) -> Polynomial:
    """Apply the algebra map x_i -> sum_j g[i][j] x_j to f (g invertible)."""
    g = [tuple(int(x) & 1 for x in row) for row in g]
    q = len(g)
    if _matrix_rank2(g) != q:
        raise ValueError("substitution matrix is singular")
    out: set = set()
    for mon in f:
        assert len(mon) == q
        terms = [(0,) * q]
        for i, a in enumerate(mon):
            if a == 0:
                continue
            targets = tuple(j for j in range(q) if g[i][j])
            expansion = _expand_power(targets, a)
            new_terms = []
            for base in terms:
                for choice in expansion:
                    t = list(base)
                    for j, e in zip(targets, choice):
                        t[j] += e
                    new_terms.append(tuple(t))
            terms = new_terms
        for t in terms:
            if t in out:
                out.discard(t)
            else:
                out.add(t)
    return frozenset(out)


def kameko_up(m: Monomial) -> Monomial:
    """Exponentwise a -> 2a + 1 (multiply by x_1...x_q and square)."""
    return tuple(2 * a + 1 for a in m)


def kameko_down(m: Monomial):
    """Inverse of kameko_up on all-odd monomials, None otherwise."""
    if any(a % 2 == 0 for a in m):
        return None
    return tuple((a - 1) // 2 for a in m)


__all__ = [
    "Monomial",
    "Polynomial",
    "WeightVector",
    "alpha",
    "mu",
    "binom2",
    "degree",
    "poly",
    "add",
    "sq",
    "sq_monomial",
    "weight_of",
    "weight_degree",
    "order_key",
    "compare",
    "monomials",
    "is_spike",
    "minimal_spike",
    "linear_substitute",
    "kameko_up",
    "kameko_down",
]
