"""Mod-2 lambda algebra: admissible words, normalization, differential, Sq^0.

A word (i_1,...,i_s) stands for the length-s monomial lambda_{i_1}...lambda_{i_s};
it is admissible when 2*i_k >= i_{k+1} for every k.  An element is a frozenset
of words (GF(2) coefficients).  Inadmissible pairs rewrite by

    lambda_i lambda_{2i+1+n} = sum_j binom2(n-1-j, j) lambda_{i+n-j} lambda_{2i+1+j}

and the differential is d(lambda_m) = sum_{j>=1} binom2(m-j, j)
lambda_{m-j} lambda_{j-1}, extended as a derivation over concatenation.

Literature sources that print words with the mirrored admissibility
convention (i_k <= 2*i_{k+1}) are transcribed here by reversing each word;
`from_display`/`to_display` perform that reversal at the JSON boundary.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import solve_combination
from .poly import binom2

Word = tuple  # tuple[int, ...]
Element = frozenset  # frozenset[Word]

ZERO: Element = frozenset()


def element(words: Iterable[Word]) -> Element:
    """Element from words with GF(2) cancellation of duplicates."""
    out: set = set()
    for w in words:
        w = tuple(w)
        if w in out:
            out.discard(w)
        else:
            out.add(w)
    return frozenset(out)


def add(*es: Element) -> Element:
    out: frozenset = frozenset()
    for e in es:
        out = out.symmetric_difference(e)
    return out


def word_degree(w: Word) -> int:
    return sum(w)


def is_admissible(w: Word) -> bool:
    """True when 2*i_k >= i_{k+1} for every adjacent pair."""
    return all(2 * w[k] >= w[k + 1] for k in range(len(w) - 1))


@lru_cache(maxsize=None)
def _pair_rewrite(i: int, j: int) -> tuple:
    """Admissible-pair expansion of the inadmissible pair lambda_i lambda_j."""
    n = j - 2 * i - 1
    assert n >= 0
    out = []
    for t in range((n - 1) // 2 + 1):
        if binom2(n - 1 - t, t):
            out.append((i + n - t, 2 * i + 1 + t))
    return tuple(out)


def normalize(e: Iterable[Word]) -> Element:
    """Admissible normal form, rewriting the leftmost inadmissible pair."""
    out: set = set()
    pending = [tuple(w) for w in e]
    while pending:
        w = pending.pop()
        for k in range(len(w) - 1):
            if 2 * w[k] < w[k + 1]:
                head, tail = w[:k], w[k + 2 :]
                for a, b in _pair_rewrite(w[k], w[k + 1]):
                    pending.append(head + (a, b) + tail)
                break
        else:
            if w in out:
                out.discard(w)
            else:
                out.add(w)
    return frozenset(out)


def multiply(e1: Iterable[Word], e2: Iterable[Word]) -> Element:
    """Concatenation product followed by normalization."""
    raw = [tuple(w1) + tuple(w2) for w1 in e1 for w2 in e2]
    return normalize(raw)


@lru_cache(maxsize=None)
def _d_letter(m: int) -> tuple:
    """Two-letter terms of d(lambda_m)."""
    return tuple(
        (m - j, j - 1) for j in range(1, m // 2 + 1) if binom2(m - j, j)
    )


def _d_word(w: Word) -> list:
    """Leibniz expansion of d on a single (possibly inadmissible) word."""
    out = []
    for k, m in enumerate(w):
        head, tail = w[:k], w[k + 1 :]
        for a, b in _d_letter(m):
            out.append(head + (a, b) + tail)
    return out


def differential(e: Iterable[Word]) -> Element:
    """d extended as a derivation; output normalized."""
    raw: list = []
    for w in e:
        raw.extend(_d_word(tuple(w)))
    return normalize(raw)


def is_cycle(e: Iterable[Word]) -> bool:
    return not differential(e)


def theta(e: Iterable[Word]) -> Element:
    """The endomorphism lambda_n -> lambda_{2n+1}, applied letterwise."""
    return normalize([tuple(2 * i + 1 for i in w) for w in e])


@lru_cache(maxsize=None)
def admissible_basis(s: int, n: int) -> tuple:
    """All admissible words of length s and degree n, lexicographically sorted."""
    assert s >= 0 and n >= 0
    if s == 0:
        return ((),) if n == 0 else ()
    out = []

    def extend(prefix: list, rest: int):
        slots = s - len(prefix)
        if slots == 0:
            if rest == 0:
                out.append(tuple(prefix))
            return
        cap = rest if not prefix else min(rest, 2 * prefix[-1])
        for i in range(cap + 1):
            # the tail after letter i can carry at most i*(2^slots - 2) more
            if rest - i > i * ((1 << slots) - 2):
                continue
            prefix.append(i)
            extend(prefix, rest - i)
            prefix.pop()

    extend([], n)
    return tuple(sorted(out))


def _index_map(s: int, n: int) -> dict:
    return {w: k for k, w in enumerate(admissible_basis(s, n))}


def _vectorize(e: Element, s: int, n: int) -> int:
    idx = _index_map(s, n)
    v = 0
    for w in e:
        v ^= 1 << idx[w]
    return v


def _bidegree(e: Element) -> tuple:
    """(length, degree) of a homogeneous element; error when mixed."""
    pairs = {(len(w), sum(w)) for w in e}
    if len(pairs) != 1:
        raise ValueError("element is not homogeneous in (length, degree)")
    return pairs.pop()


@lru_cache(maxsize=None)
def _boundaries(s: int, n: int) -> tuple:
    """(vector, source word) pairs spanning d(Lambda^{s-1, n+1}) inside (s, n)."""
    if s == 0:
        return ()
    out = []
    for w in admissible_basis(s - 1, n + 1):
        v = _vectorize(differential([w]), s, n)
        if v:
            out.append((v, w))
    return tuple(out)


def classes_equal(z1: Iterable[Word], z2: Iterable[Word]):
    """Homology-class equality for two cycles; witness chain when equal.

    Returns (True, w) with differential(w) = normalize(z1 + z2) (w = 0 when the
    cycles agree on the nose), or (False, None).
    """
    z1, z2 = element(z1), element(z2)
    for z in (z1, z2):
        if z and differential(z):
            raise ValueError("classes_equal requires cycle inputs")
    u = normalize(z1 ^ z2)
    if not u:
        return True, ZERO
    s, n = _bidegree(u)
    bnd = _boundaries(s, n)
    sol = solve_combination([v for v, _ in bnd], _vectorize(u, s, n))
    if sol is None:
        return False, None
    return True, element(w for k, (_, w) in enumerate(bnd) if (sol >> k) & 1)


# --- catalog of Ext representatives ---------------------------------------

_C0: Word = (2, 3, 3)
_E0: Element = frozenset(
    {(8, 3, 3, 3), (4, 5, 5, 3), (4, 7, 3, 3), (2, 3, 5, 7), (6, 5, 3, 3)}
)


def _theta_pow(e: Element, t: int) -> Element:
    for _ in range(t):
        e = theta(e)
    return e


def _h_multisets(slots: int, total: int):
    """Weakly descending tuples of 2^e - 1 letters with the given sum."""
    if slots == 0:
        return [()] if total == 0 else []
    out = []

    def extend(prefix: list, rest: int, hi: int):
        k = slots - len(prefix)
        if k == 0:
            if rest == 0:
                out.append(tuple(prefix))
            return
        for e in range(hi, -1, -1):
            v = (1 << e) - 1
            if v > rest:
                continue
            if v * k < rest:  # later letters are <= v, can't reach the sum
                break
            prefix.append(v)
            extend(prefix, rest - v, e)
            prefix.pop()

    extend([], total, total.bit_length() + 1)
    return out


def _h_name(letters: Word) -> str:
    idx = sorted((v + 1).bit_length() - 1 for v in letters)
    parts = []
    for i in sorted(set(idx)):
        k = idx.count(i)
        parts.append(f"h_{i}" if k == 1 else f"h_{i}^{k}")
    return "".join(parts)


@lru_cache(maxsize=None)
def catalog(s: int, n: int) -> tuple:
    """Named cycle representatives at (length, degree), independent mod boundaries.

    Products of h_i = [lambda_{2^i-1}] with the c- and e-families; candidates
    that are boundaries or dependent on earlier entries are dropped, so the
    coefficients returned by identify_class are unambiguous.
    """
    candidates: list = []
    for letters in _h_multisets(s, n):
        candidates.append((_h_name(letters), frozenset({letters})))
    specials = [(f"c_{t}", _theta_pow(frozenset({_C0}), t))
                for t in range(n.bit_length()) if 11 * (1 << t) - 3 <= n]
    specials += [(f"e_{t}", _theta_pow(_E0, t))
                 for t in range(n.bit_length()) if 21 * (1 << t) - 4 <= n]
    for name, elem in specials:
        length, d = _bidegree(elem)
        if s - length < 0 or d > n:
            continue
        for letters in _h_multisets(s - length, n - d):
            if letters:
                candidates.append((_h_name(letters) + name, multiply(elem, [letters])))
            else:
                candidates.append((name, elem))
    out = []
    bnd = [v for v, _ in _boundaries(s, n)]
    kept: list = []
    for name, elem in candidates:
        z = normalize(elem)
        if not z:
            continue
        v = _vectorize(z, s, n)
        if solve_combination(bnd + kept, v) is not None:
            continue
        kept.append(v)
        out.append((name, z))
    return tuple(out)


def identify_class(z: Iterable[Word], names=None):
    """Express a cycle as a combination of catalog entries modulo boundaries.

    Returns the tuple of contributing names (empty for a boundary), or the
    string "unidentified" when the cycle lies outside the catalog span.
    """
    z = normalize(element(z))
    if not z:
        return ()
    s, n = _bidegree(z)
    entries = [(nm, el) for nm, el in catalog(s, n) if names is None or nm in names]
    bnd = [v for v, _ in _boundaries(s, n)]
    targets = [_vectorize(el, s, n) for _, el in entries] + bnd
    sol = solve_combination(targets, _vectorize(z, s, n))
    if sol is None:
        return "unidentified"
    return tuple(nm for k, (nm, _) in enumerate(entries) if (sol >> k) & 1)


# --- display-order transcription -------------------------------------------

def from_display(terms: Iterable[Sequence]) -> Element:
    """Element from words written in the mirrored (display) letter order."""
    return element(tuple(reversed(tuple(w))) for w in terms)


def to_display(e: Element) -> list:
    """JSON-ready word list in the mirrored (display) letter order."""
    return sorted([list(reversed(w)) for w in e])


def format_element(e: Element) -> str:
    """Human-readable rendering, display letter order."""
    if not e:
        return "0"
    chunks = []
    for w in to_display(e):
        parts = []
        for i in w:
            if parts and parts[-1][0] == i:
                parts[-1][1] += 1
            else:
                parts.append([i, 1])
        chunks.append(
            "".join(f"l_{i}" if k == 1 else f"l_{i}^{k}" for i, k in parts)
        )
    return " + ".join(chunks)


__all__ = [
    "Word",
    "Element",
    "ZERO",
    "element",
    "add",
    "word_degree",
    "is_admissible",
    "normalize",
    "multiply",
    "differential",
    "is_cycle",
    "theta",
    "admissible_basis",
    "classes_equal",
    "catalog",
    "identify_class",
    "from_display",
    "to_display",
    "format_element",
]
