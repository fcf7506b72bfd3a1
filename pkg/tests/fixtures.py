"""Frozen reference data: invariant generators, dual primitives, lambda words.

Monomials are exponent tuples (x1, x2, x3, x4); polynomials are frozensets of
monomials; dual elements are listed as order tuples; lambda words appear in
display orientation and tests convert with lam.from_display where needed.
"""

from __future__ import annotations

from hitq import poly


def _family_a(s: int) -> dict:
    """The degree 2^(s+2) + 2^(s+1) - 3 monomial family, indexed from 1."""
    a = 2 ** s - 1
    b = 2 ** (s + 1) - 1
    c = 2 ** (s + 2) - 1
    d = 3 * 2 ** s - 1
    out = {
        1: (0, a, a, c), 2: (0, a, c, a), 3: (0, c, a, a),
        4: (a, 0, a, c), 5: (a, 0, c, a), 6: (a, a, 0, c),
        7: (a, a, c, 0), 8: (a, c, 0, a), 9: (a, c, a, 0),
        10: (c, 0, a, a), 11: (c, a, 0, a), 12: (c, a, a, 0),
        13: (0, a, b, d), 14: (0, b, a, d), 15: (0, b, d, a),
        16: (a, 0, b, d), 17: (a, b, 0, d), 18: (a, b, d, 0),
        19: (b, 0, a, d), 20: (b, 0, d, a), 21: (b, a, 0, d),
        22: (b, a, d, 0), 23: (b, d, 0, a), 24: (b, d, a, 0),
        25: (0, b, b, b), 26: (b, 0, b, b), 27: (b, b, 0, b),
        28: (b, b, b, 0),
    }
    if s >= 1:
        out.update({
            29: (1, a, a, c - 1), 30: (1, a, c - 1, a), 31: (1, c - 1, a, a),
            32: (1, a, b - 1, d), 33: (1, b - 1, a, d), 34: (1, b - 1, d, a),
            35: (1, b - 1, b, b), 36: (1, b, b - 1, b), 37: (1, b, b, b - 1),
            38: (b, 1, b - 1, b), 39: (b, 1, b, b - 1), 40: (b, b, 1, b - 1),
        })
    if s == 1:
        out.update({
            41: (1, 1, 3, 4), 42: (1, 3, 1, 4), 43: (1, 3, 4, 1),
            44: (3, 1, 1, 4), 45: (3, 1, 4, 1), 46: (3, 4, 1, 1),
        })
    return out


def _family_b(s: int) -> dict:
    """The degree 2^(s+3) + 2^(s+1) - 3 monomial family, indexed from 1."""
    a = 2 ** s - 1
    b = 2 ** (s + 1) - 1
    c = 2 ** (s + 2) - 1
    d = 3 * 2 ** s - 1
    e = 2 ** (s + 3) - 1
    g = 7 * 2 ** s - 1
    h = 5 * 2 ** s - 1
    return {
        1: (0, b, c, c), 2: (0, c, b, c), 3: (0, c, c, b),
        4: (b, 0, c, c), 5: (c, 0, b, c), 6: (c, 0, c, b),
        7: (b, c, 0, c), 8: (c, b, 0, c), 9: (c, c, 0, b),
        10: (b, c, c, 0), 11: (c, b, c, 0), 12: (c, c, b, 0),
        13: (0, a, a, e), 14: (0, a, e, a), 15: (0, e, a, a),
        16: (a, 0, a, e), 17: (a, 0, e, a), 18: (a, a, 0, e),
        19: (a, a, e, 0), 20: (a, e, 0, a), 21: (a, e, a, 0),
        22: (e, 0, a, a), 23: (e, a, 0, a), 24: (e, a, a, 0),
        25: (0, a, b, g), 26: (0, b, a, g), 27: (0, b, g, a),
        28: (a, 0, b, g), 29: (a, b, 0, g), 30: (a, b, g, 0),
        31: (b, 0, a, g), 32: (b, 0, g, a), 33: (b, a, 0, g),
        34: (b, a, g, 0), 35: (b, g, 0, a), 36: (b, g, a, 0),
        37: (0, b, d, h), 38: (b, 0, d, h), 39: (b, d, 0, h),
        40: (b, d, h, 0),
    }


def symmetric_sums_low(s: int) -> list:
    """q_{s,i} at degree 2^(s+2) + 2^(s+1) - 3: the fixed quotient classes."""
    fam = _family_a(s)
    sums = [
        poly.poly(fam[j] for j in range(1, 13)),
        poly.poly(fam[j] for j in range(13, 25)),
        poly.poly(fam[j] for j in range(25, 29)),
    ]
    if s == 1:
        sums.append(poly.poly(fam[j] for j in (29, 30, 31, 44, 45, 46)))
    return sums


def symmetric_sums_high(s: int) -> list:
    """q_{s,i} at degree 2^(s+3) + 2^(s+1) - 3: the fixed quotient classes."""
    fam = _family_b(s)
    return [
        poly.poly(fam[j] for j in range(1, 13)),
        poly.poly(fam[j] for j in range(13, 25)),
        poly.poly(fam[j] for j in range(25, 37)),
        poly.poly(fam[j] for j in range(37, 41)),
    ]


# The four-term degree-9 dual primitive generating the coinvariants there.
ZETA1 = [(1, 3, 3, 2), (1, 3, 4, 1), (1, 5, 2, 1), (1, 6, 1, 1)]

# psi applied to each single ZETA1 term, in display orientation.
PSI_COMPONENTS = {
    (1, 3, 3, 2): [(1, 3, 3, 2), (1, 3, 4, 1), (1, 4, 3, 1)],
    (1, 3, 4, 1): [(1, 3, 4, 1), (1, 4, 3, 1), (1, 5, 2, 1)],
    (1, 5, 2, 1): [(1, 5, 2, 1), (1, 6, 1, 1)],
    (1, 6, 1, 1): [(1, 6, 1, 1)],
}

# The 44-term degree-17 dual primitive whose transfer image is e_0.
ZETA17 = [
    (5, 5, 5, 2), (5, 5, 6, 1), (3, 5, 8, 1), (5, 3, 8, 1), (3, 6, 7, 1),
    (5, 7, 4, 1), (7, 5, 4, 1), (3, 9, 4, 1), (9, 3, 4, 1), (3, 9, 3, 2),
    (9, 3, 3, 2), (5, 9, 2, 1), (9, 5, 2, 1), (5, 10, 1, 1), (9, 6, 1, 1),
    (3, 11, 2, 1), (11, 3, 2, 1), (5, 5, 3, 4), (5, 3, 5, 4), (3, 5, 5, 4),
    (3, 12, 1, 1), (11, 4, 1, 1), (7, 8, 1, 1), (7, 7, 1, 2), (13, 2, 1, 1),
    (14, 1, 1, 1), (6, 5, 3, 3), (5, 3, 6, 3), (3, 6, 5, 3), (6, 3, 3, 5),
    (3, 3, 6, 5), (3, 6, 3, 5), (5, 3, 3, 6), (3, 5, 3, 6), (3, 3, 5, 6),
    (3, 3, 3, 8), (3, 3, 4, 7), (3, 5, 2, 7), (3, 6, 1, 7), (3, 3, 9, 2),
    (3, 3, 10, 1), (5, 3, 7, 2), (5, 7, 3, 2), (7, 5, 3, 2),
]

# The eight-term degree-17 invariant polynomial pairing to 1 against ZETA17.
ZETA_TILDE_17 = poly.poly([
    (1, 1, 1, 14), (1, 1, 14, 1), (1, 3, 1, 12), (1, 3, 12, 1),
    (3, 1, 1, 12), (3, 1, 12, 1), (3, 5, 1, 8), (3, 5, 8, 1),
])

# e_0 representative and the witness whose boundary certifies
# psi(ZETA17) = e_0, both in display orientation.
E0_DISPLAY = [(3, 3, 3, 8), (3, 5, 5, 4), (3, 3, 7, 4), (7, 5, 3, 2),
              (3, 3, 5, 6)]
WITNESS_DISPLAY = [(3, 5, 10), (3, 12, 3), (4, 7, 7), (0, 11, 7)]


def spike_primitive(s: int) -> list:
    """The one-term dual spike of degree 3 * (2^(s+1) - 1)."""
    b = 2 ** (s + 1) - 1
    return [(0, b, b, b)]


# Frozen brute-force quotient dimensions (independent oracle, tests/oracles.py).
ORACLE_DIMS = {
    1: (1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    2: (1, 2, 1, 3, 2, 0, 1, 3, 3, 0, 2, 0, 0, 0, 1, 3, 3),
    3: (1, 3, 3, 7, 8, 3, 6, 10, 15, 7, 14),
}

# Frozen dimensions of Q^4_n at the degrees the reports quote.
Q4_DIMS = {9: 46, 10: 70, 17: 87, 21: 94, 22: 116, 37: 135, 45: 105,
           46: 164, 65: 150}

# Frozen invariant dimensions under the full linear group at those degrees.
GL_INVARIANT_DIMS = {9: 1, 10: 0, 17: 1, 21: 0, 22: 1, 37: 0, 45: 1, 46: 0}

__all__ = [
    "E0_DISPLAY",
    "GL_INVARIANT_DIMS",
    "ORACLE_DIMS",
    "PSI_COMPONENTS",
    "Q4_DIMS",
    "WITNESS_DISPLAY",
    "ZETA1",
    "ZETA17",
    "ZETA_TILDE_17",
    "spike_primitive",
    "symmetric_sums_low",
    "symmetric_sums_high",
]
