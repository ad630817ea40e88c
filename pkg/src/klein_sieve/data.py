"""Tabulated reference data: generators, printed bases, dissection rows and congruence lists.

Vectors are written a0 first.  Wherever a list is given as seeds, the full
list is the union of the sigma-orbits of the seeds.
"""

from __future__ import annotations

import re

Vec = tuple[int, ...]

# ---------------------------------------------------------------------------
# Weight-one generators a_p: x_n = f_{sigma^n(a_p)}
# ---------------------------------------------------------------------------

GENERATORS: dict[int, Vec] = {
    5: (2, -3, 2),
    7: (2, -2, 0, 1),
    11: (2, -1, -1, 0, 1, 0),
    13: (2, -1, 0, -1, 0, 0, 1),
    17: (2, 0, -1, -1, 0, 0, 0, 0, 1),
    19: (2, 0, 0, -1, -1, -1, 0, 0, 1, 1),
}

# ---------------------------------------------------------------------------
# Printed monomial bases for weights 2 and 3 at levels 13, 17, 19
# ---------------------------------------------------------------------------

_MONOMIAL_TOKEN = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_monomial(text: str, m: int) -> tuple[int, ...]:
    """``"x0^2x3"`` -> exponent tuple of length m."""
    exps = [0] * m
    for idx, power in _MONOMIAL_TOKEN.findall(text):
        exps[int(idx)] += int(power) if power else 1
    return tuple(exps)


def parse_monomials(text: str, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(parse_monomial(tok, m) for tok in text.split())


PRINTED_BASES: dict[tuple[int, int], str] = {
    (13, 2): "x0^2 x0x1 x1^2 x0x2 x1x2 x2^2 x0x3 x1x3 x3^2 x0x4 x4^2 x1x5 x5^2",
    (13, 3): (
        "x0^3 x0^2x1 x0x1^2 x1^3 x0^2x2 x0x1x2 x1^2x2 x0x2^2 x1x2^2 x2^3 "
        "x0^2x3 x1^2x3 x0x3^2 x3^3 x0^2x4 x0x4^2 x4^3 x1^2x5 x1x5^2 x5^3"
    ),
    (17, 2): (
        "x0^2 x0x1 x1^2 x0x2 x1x2 x2^2 x0x3 x1x3 x2x3 x3^2 x0x4 x1x4 x3x4 x4^2 "
        "x0x5 x5^2 x0x6 x6^2 x1x7 x7^2"
    ),
    (17, 3): (
        "x0^3 x0^2x1 x0x1^2 x1^3 x0^2x2 x0x1x2 x1^2x2 x0x2^2 x1x2^2 x2^3 "
        "x0^2x3 x0x1x3 x1^2x3 x0x2x3 x1x2x3 x2^2x3 x0x3^2 x1x3^2 x3^3 "
        "x0^2x4 x1^2x4 x1x4^2 x4^3 x0^2x5 x0x5^2 x5^3 x0^2x6 x0x6^2 x6^3 "
        "x1^2x7 x1x7^2 x7^3"
    ),
    (19, 2): (
        "x0^2 x0x1 x1^2 x0x2 x1x2 x2^2 x0x3 x1x3 x2x3 x3^2 x0x4 x1x4 x2x4 x3x4 x4^2 "
        "x0x5 x1x5 x5^2 x0x6 x6^2 x0x7 x7^2 x1x8 x8^2"
    ),
    (19, 3): (
        "x0^3 x0^2x1 x0x1^2 x1^3 x0^2x2 x0x1x2 x1^2x2 x0x2^2 x1x2^2 x2^3 "
        "x0^2x3 x0x1x3 x1^2x3 x0x2x3 x1x2x3 x2^2x3 x0x3^2 x1x3^2 x2x3^2 x3^3 "
        "x0^2x4 x0x1x4 x1^2x4 x0x2x4 x2^2x4 x0x4^2 x4^3 x1^2x5 x1x5^2 x5^3 "
        "x0^2x6 x0x6^2 x6^3 x0^2x7 x0x7^2 x7^3 x1^2x8 x1x8^2 x8^3"
    ),
}

# ---------------------------------------------------------------------------
# Lattice-point counts (a0 = 2, 4, 6, 8, 10)
# ---------------------------------------------------------------------------

TABLE2_COUNTS: dict[int, dict[int, int]] = {
    5: {2: 2, 4: 4, 6: 6, 8: 9, 10: 12},
    7: {2: 6, 4: 18, 6: 39, 8: 72, 10: 120},
    11: {2: 25, 4: 226, 6: 1000, 8: 3126, 10: 7877},
    13: {2: 42, 4: 684, 6: 4388, 8: 17976, 10: 56076},
    17: {2: 96, 4: 4944, 6: 68288, 8: 486469, 10: 2339800},
    19: {2: 135, 4: 12195, 6: 248489, 8: 2339379, 10: 13997547},
}

# ---------------------------------------------------------------------------
# Ramanujan-type congruence lists: (seed, alpha)
# ---------------------------------------------------------------------------

RAMANUJAN_SEEDS: dict[int, tuple[tuple[Vec, int], ...]] = {
    5: (
        ((4, -1, -1), 1),
        ((6, 1, -4), 1),
        ((8, 3, -7), 1),
        ((8, -2, -2), 1),
        ((8, 4, 4), 1),
        ((10, 5, -10), 1),
        ((10, 0, -5), 1),
        ((10, 1, 6), 1),
    ),
    7: (
        ((4, 1, -1, -2), 1),
        ((6, 1, 0, -4), 2),
        ((6, 2, -3, -2), 1),
        ((6, -2, -5, 4), 1),
        ((6, -1, -1, -1), 1),
        ((6, 3, 3, 3), 1),
        ((8, 7, -3, -8), 1),
        ((8, 4, -1, -7), 1),
        ((8, 1, 1, -6), 1),
        ((8, 3, -5, -2), 1),
        ((8, 5, -4, -5), 1),
        ((8, 2, -2, -4), 1),
        ((8, 0, -3, -1), 1),
        ((8, 0, 6, 2), 1),
        ((8, 1, 3, 4), 1),
    ),
    11: (
        ((4, -2, 0, 0, 1, -1), 1),
        ((4, -2, 0, 1, -2, 1), 1),
        ((6, -4, 1, 0, 0, 0), 2),
        ((8, 4, 4, 4, 4, 4), 1),
        ((10, -1, -1, -1, -1, -1), 1),
    ),
    13: (
        ((4, -2, 0, 0, 1, -2, 1), 1),
        ((4, -2, 0, 0, 0, 1, -1), 1),
        ((4, -2, 1, -2, 1, 0, 0), 1),
        ((6, 1, 0, 0, 0, 0, -4), 2),
        ((6, -3, -1, 2, -3, 2, 0), 1),
    ),
    17: (
        ((4, -2, 0, 0, 0, 0, 1, -2, 1), 1),
        ((4, -2, 0, 0, 0, 0, 0, 1, -1), 1),
        ((4, -2, 1, -2, 1, 0, 0, 0, 0), 1),
        ((4, -2, 0, 1, -2, 1, 0, 0, 0), 1),
        ((6, 1, 0, 0, 0, 0, 0, 0, -4), 2),
    ),
    19: (
        ((4, -2, 0, 0, 0, 0, 0, 1, -2, 1), 1),
        ((4, -2, 0, 0, 0, 0, 0, 0, 1, -1), 1),
        ((4, -2, 1, -2, 1, 0, 0, 0, 0, 0), 1),
        ((4, -2, 0, 1, -2, 1, 0, 0, 0, 0), 1),
        ((6, 1, 0, 0, 0, 0, 0, 0, 0, -4), 2),
    ),
}

# (p, a0) slices for which the lists above are complete.
RAMANUJAN_COVERAGE: dict[int, tuple[int, ...]] = {
    5: (4, 6, 8, 10),
    7: (4, 6, 8),
    11: (4, 6, 8, 10),
    13: (4, 6),
    17: (4, 6),
    19: (4, 6),
}


# ---------------------------------------------------------------------------
# Families valid for every large prime
# ---------------------------------------------------------------------------


def family_vectors(p: int) -> list[tuple[Vec, int]]:
    """(vector, eigenvalue) of the families that are U_p eigenforms at p."""
    m = (p - 1) // 2
    out: list[tuple[Vec, int]] = []
    top = [6, 1] + [0] * (m - 2) + [-4]
    out.append((tuple(top), p * p))
    if p >= 11:
        out.append((tuple([4, -2] + [0] * (m - 4) + [1, -2, 1]), p))
        out.append((tuple([4, -2] + [0] * (m - 3) + [1, -1]), p))
        out.append((tuple([4, 1, 1] + [0] * (m - 4) + [-2, -2]), p))
    return out


def conjecture_vectors(p: int) -> list[Vec]:
    """Weight-three vectors expected to satisfy a(pn) = 0 (mod p), tested as evidence only."""
    m = (p - 1) // 2

    def pad_right(*head: int) -> Vec:
        return tuple(head) + (0,) * (m + 1 - len(head))

    def pad_middle(head: tuple[int, ...], tail: tuple[int, ...]) -> Vec:
        return head + (0,) * (m + 1 - len(head) - len(tail)) + tail

    out: list[Vec] = []
    if p >= 11:
        out += [
            pad_right(6, -5, 3, 0, -2, 1),
            pad_right(6, 2, -4, -3, 1, 1),
            pad_right(6, -1, -1, -3, 2),
            pad_middle((6, 1), (1, -3, -2)),
            pad_right(6, -5, 4, -3, 1),
        ]
    if p >= 13:
        out += [
            pad_middle((6, 3, -2), (1, 0, -3, -2)),
            pad_right(6, -3, 2, -1, -2, 0, 1),
            pad_right(6, 5, 2, 2, 1, 1, -2),
        ]
    return out


# ---------------------------------------------------------------------------
# Chimeral congruences of weight three
# ---------------------------------------------------------------------------

CHIMERAL_SEEDS: dict[int, tuple[Vec, ...]] = {
    11: (
        (6, -5, 3, 0, -2, 1),
        (6, -4, 1, 1, -3, 2),
        (6, -1, -1, -3, 2, 0),
        (6, 1, 0, 1, -3, -2),
        (6, -3, 0, 3, -2, -1),
        (6, -3, 2, -1, -2, 1),
        (6, -1, 5, 1, 2, 2),
        (6, -5, 4, -3, 1, 0),
    ),
    13: (
        (6, -5, 3, 0, -2, 1, 0),
        (6, -4, 1, 0, 1, -3, 2),
        (6, -1, -1, -3, 2, 0, 0),
        (6, 3, -2, 1, 0, -3, -2),
        (6, 1, 0, 0, 1, -3, -2),
        (6, -3, 2, -1, -2, 0, 1),
        (6, 5, 2, 2, 1, 1, -2),
        (6, -5, 4, -3, 1, 0, 0),
        (6, -4, 2, -2, 1, -1, 1),
        (6, -3, 0, -1, -1, 4, -2),
        (6, -2, -2, 1, 3, -2, -1),
        (6, -2, -2, 2, 1, -2, 0),
        (6, -2, 1, -1, 1, -1, -1),
        (6, -7, 7, -3, 2, -3, 1),
    ),
    17: (
        (6, -5, 3, 0, -2, 1, 0, 0, 0),
        (6, -4, 1, 0, 0, 0, 1, -3, 2),
        (6, -1, -1, -3, 2, 0, 0, 0, 0),
        (6, 3, -2, 0, 0, 1, 0, -3, -2),
        (6, 1, 0, 0, 0, 0, 1, -3, -2),
        (6, -3, 2, -1, -2, 0, 1, 0, 0),
        (6, 5, 2, 2, 1, 1, -2, 0, 0),
        (6, -5, 4, -3, 1, 0, 0, 0, 0),
    ),
    19: (
        (6, -5, 3, 0, -2, 1, 0, 0, 0, 0),
        (6, -4, 1, 0, 0, 0, 0, 1, -3, 2),
        (6, -1, -1, -3, 2, 0, 0, 0, 0, 0),
        (6, 3, -2, 0, 0, 0, 1, 0, -3, -2),
        (6, 1, 0, 0, 0, 0, 0, 1, -3, -2),
        (6, -3, 2, -1, -2, 0, 1, 0, 0, 0),
        (6, 5, 2, 2, 1, 1, -2, 0, 0, 0),
        (6, -5, 4, -3, 1, 0, 0, 0, 0, 0),
    ),
}

# Order-four chimeral example at p = 13 (weight six).
CHIMERAL_ORDER_FOUR: tuple[int, Vec, int] = (13, (12, -13, 17, -9, 4, -7, 2), 4)

# ---------------------------------------------------------------------------
# Orbit-size examples at p = 13
# ---------------------------------------------------------------------------

ORBIT_SIZES_13: dict[Vec, int] = {
    (4, 1, 1, 0, 0, -2, -2): 6,
    (4, 1, 0, 0, -1, -2, 0): 6,
    (4, 1, -2, -2, 0, 1, 0): 3,
}

# ---------------------------------------------------------------------------
# Dissection congruences U_{p,r}(f) = 0 (mod m)
# ---------------------------------------------------------------------------

# (p, vector, residues, modulus)
MIXED_MODULI: tuple[tuple[int, Vec, tuple[int, ...], int], ...] = (
    (13, (4, -6, 6, -2, 0, 0, 0), (6, 7), 2),
    (17, (4, -6, 6, -2, 0, 0, 0, 0, 0), (6, 11), 2),
    (19, (4, -6, 6, -2, 0, 0, 0, 0, 0, 0), (6, 13), 2),
    (13, (4, -2, 0, -2, -1, 3, 0), (3, 10), 3),
    (17, (4, -6, 6, -2, 0, 0, 0, 0, 0), (8, 9), 3),
    (19, (4, -4, 1, 1, 1, -1, 0, 0, 0, 0), (5, 14), 3),
    (13, (4, -4, 1, 1, 1, -1, 0), (5, 8), 4),
    (13, (4, -5, 3, 1, -1, 0, 0), (4, 9), 6),
    (17, (4, -1, 0, 0, -5, 1, 0, 0, 3), (4, 13), 6),
    (13, (6, -8, 6, 0, -1, 0, 0), (4, 10), 13),
    (13, (4, -4, 2, -1, 1, 1, -1), (3,), 13),
    (13, (4, 3, 0, 0, 1, 0, 0), (7,), 26),
    (19, (2, -3, 0, 0, 0, 3, -2, 0, 0, 0), (18,), 19),
)

# Exhaustive U_{p,r} tables modulo p.  Rows not listed here follow by sigma:
# the row at s(r) = alpha~^2 r is sigma applied to the row at r.
DISSECTION_TABLES: dict[str, dict] = {
    "corollary-5s": {
        "p": 5,
        "a0": (4,),
        "rows": {
            0: ((4, -1, -1),),
            1: ((4, 4, -6), (4, 5, 5)),
            2: ((4, 5, 5),),
            3: ((4, 5, 5),),
            4: ((4, -6, 4), (4, 5, 5)),
        },
        "derived": {},
    },
    "theorem-7s": {
        "p": 7,
        "a0": (2, 4, 6),
        "rows": {
            1: (
                (4, 3, 0, -5), (6, -7, 3, 1), (6, -3, 5, -5), (6, -2, 2, -3),
                (6, 0, 3, -6), (6, 3, -6, 0), (6, 7, 7, 7),
            ),
            3: (
                (4, 2, 5, 3), (4, 3, 2, 5), (4, 5, 3, 2), (4, 6, -2, -6),
                (6, -6, 7, -4), (6, -3, -9, 9), (6, 0, -4, 1), (6, 3, 1, -7),
                (6, 3, 3, 3), (6, 4, -2, -5), (6, 5, -5, -3), (6, 6, -1, -8),
                (6, 7, -4, -6), (6, 7, 7, 7), (6, 9, -3, -9), (4, 0, 2, -4),
            ),
        },
        # target residue: (source residue, sigma power)
        "derived": {2: (1, 1), 4: (1, 2), 6: (3, 1), 5: (3, 2)},
    },
    "theorem-11s": {
        "p": 11,
        "a0": (6,),
        "rows": {
            1: (
                (6, -3, 7, -4, -1, -2), (6, -2, 2, -5, 0, 2),
                (6, 1, 4, 0, 2, 2), (6, 7, -2, -4, -3, -1),
            ),
            2: (
                (6, -3, 6, -2, -1, -3), (6, 0, -7, 0, 8, -4), (6, 0, -4, 4, 0, -3),
                (6, 0, 0, -4, 0, 1), (6, 1, -6, 3, 5, -6), (6, 2, 3, 3, 0, 1),
                (6, 3, -4, -5, -3, 6), (6, 3, -4, 0, 4, -6), (6, 3, 2, 1, 2, 1),
                (6, 3, 4, 1, 1, 0),
            ),
        },
        "derived": {
            3: (1, 1), 9: (1, 2), 5: (1, 3), 4: (1, 4),
            6: (2, 1), 7: (2, 2), 10: (2, 3), 8: (2, 4),
        },
    },
}

# ---------------------------------------------------------------------------
# Weight-one bases of M_1(Gamma(p)) by residue component
# ---------------------------------------------------------------------------

# Explicit component lists for p = 5, 7, 11 (component 0 listed in the printed order).
GAMMA_P_COMPONENTS: dict[int, dict[int, tuple[Vec, ...]]] = {
    5: {
        0: ((2, -3, 2), (2, 2, -3)),
        1: ((2, -2, 1),),
        2: ((2, -1, 0),),
        3: ((2, 0, -1),),
        4: ((2, 1, -2),),
    },
    7: {
        0: ((2, -2, 0, 1), (2, 0, 1, -2), (2, 1, -2, 0)),
        1: ((2, -2, 1, 0), (2, 1, -1, -1)),
        2: ((2, 1, 0, -2), (2, -1, -1, 1)),
        3: ((2, -1, 0, 0),),
        4: ((2, 0, -2, 1), (2, -1, 1, -1)),
        5: ((2, 0, -1, 0),),
        6: ((2, 0, 0, -1),),
    },
    11: {
        # x0, x1, x4, x3, x2
        0: (
            (2, -1, -1, 0, 1, 0), (2, -1, 1, 0, 0, -1), (2, 0, -1, 1, -1, 0),
            (2, 0, 0, -1, -1, 1), (2, 1, 0, -1, 0, -1),
        ),
        1: ((2, -1, -1, 1, -1, 1), (2, 0, 0, -1, 0, 0), (2, 2, 0, 0, -1, -2)),
        2: ((2, 1, 0, 0, -1, -1), (2, -1, -1, 1, 0, 0)),
        3: ((2, 0, 0, 0, -1, 0), (2, -1, -1, 1, 1, -1), (2, 0, -1, -2, 0, 2)),
        4: ((2, 0, 0, 0, 0, -1), (2, 1, -1, -1, -1, 1), (2, -2, 2, -1, 0, 0)),
        5: ((2, -1, 0, 0, 0, 0), (2, 1, 1, -1, -1, -1), (2, 0, -2, 0, 2, -1)),
        6: ((2, 0, -1, -1, 0, 1), (2, -1, 0, 0, 1, -1)),
        7: ((2, -1, 0, 1, -1, 0), (2, 0, 1, -1, 0, -1)),
        8: ((2, 0, -1, 0, -1, 1), (2, -1, 1, -1, 0, 0)),
        9: ((2, -1, 1, -1, 1, -1), (2, 0, -1, 0, 0, 0), (2, -1, 0, 2, -2, 0)),
        10: ((2, 0, -1, 0, 1, -1), (2, 1, 0, -1, -1, 0)),
    },
}

# Seeds V_{p,1} (quadratic residues) and V_{p,alpha~} (non-residues) for p = 13, 17, 19:
# the component of alpha~^(2n) is sigma^n(V_{p,1}), that of alpha~^(2n+1) is sigma^n(V_{p,alpha~}).
GAMMA_P_SEEDS: dict[int, tuple[tuple[Vec, ...], tuple[Vec, ...]]] = {
    13: (
        ((2, -1, 1, 0, -1, 1, -1), (2, -2, 1, 0, 0, 0, 0), (2, -1, -1, 1, 0, -1, 1)),
        ((2, 1, 0, 0, -1, 0, -1), (2, -2, 2, -1, 1, -1, 0), (2, 1, -1, -1, 0, 0, 0)),
    ),
    17: (
        (
            (2, 0, -1, 0, 0, 0, 1, 0, -1), (2, 0, 0, -1, 0, 0, -1, 0, 1),
            (2, -1, -1, 1, 0, 0, 0, -1, 1), (2, -2, 0, 2, -1, 0, 1, -2, 1),
        ),
        (
            (2, -1, 0, 0, 0, 0, -1, 1, 0), (2, 0, 0, 1, -1, 0, 0, -1, 0),
            (2, 0, 0, 0, 1, -1, 0, 0, -1), (2, 0, -1, -1, 0, 1, 0, 0, 0),
        ),
    ),
    19: (
        (
            (2, 0, 0, 0, -1, -1, 0, 0, 0, 1), (2, -1, 1, 0, -1, 0, 0, -1, 1, 0),
            (2, 0, -1, 0, 0, 0, 0, 1, 0, -1), (2, 0, 0, -1, 0, -1, 1, 0, 0, 0),
            (2, -1, -1, 1, 0, 0, 0, 0, -1, 1),
        ),
        (
            (2, -1, 0, 0, 0, -1, 2, 0, -1, 0), (2, 0, -1, 0, 1, 0, -1, 1, 0, -1),
            (2, -1, 0, 1, 0, 0, 0, 0, -1, 0), (2, 0, -1, 0, 0, 1, 1, -1, -1, 0),
        ),
    ),
}

# ---------------------------------------------------------------------------
# Printed decomposition rows of x_n(tau/p) over the component bases
# ---------------------------------------------------------------------------

DISSECTION_ROWS: dict[int, dict[int, dict[int, Vec]]] = {
    5: {
        0: {0: (1, 0), 1: (3,), 2: (4,), 3: (2,), 4: (1,)},
        1: {0: (0, 1), 1: (1,), 2: (-2,), 3: (4,), 4: (-3,)},
    },
    7: {
        0: {0: (1, 0, 0), 1: (2, 0), 2: (1, 3), 3: (3,), 4: (1, 1), 5: (1,), 6: (2,)},
        1: {0: (0, 1, 0), 1: (1, 1), 2: (-2, 0), 3: (-1,), 4: (-1, 3), 5: (2,), 6: (-3,)},
        2: {0: (0, 0, 1), 1: (1, -3), 2: (1, -1), 3: (2,), 4: (-2, 0), 5: (3,), 6: (-1,)},
    },
    11: {
        0: {
            0: (1, 0, 0, 0, 0), 1: (1, 2, 1), 2: (-1, 2), 3: (2, 1, 1), 4: (0, -1, 2),
            5: (2, 0, 0), 6: (2, 0), 7: (1, 0), 8: (1, 0), 9: (1, 0, 0), 10: (2, 1),
        },
        1: {
            0: (0, 1, 0, 0, 0), 1: (1, 0, 2), 2: (0, 1), 3: (2, -1, 1), 4: (-2, 0, 0),
            5: (0, -1, 0), 6: (-1, 2), 7: (2, 0), 8: (-1, 2), 9: (-1, 2, -1), 10: (-1, 0),
        },
        2: {
            0: (0, 0, 0, 0, 1), 1: (0, -2, 0), 2: (-2, 1), 3: (0, 1, -2), 4: (0, -1, 0),
            5: (2, -1, -1), 6: (0, -1), 7: (1, -2), 8: (0, 1), 9: (-1, -2, 1), 10: (2, 0),
        },
        3: {
            0: (0, 0, 0, 1, 0), 1: (1, 0, 0), 2: (1, 0), 3: (-2, 0, 0), 4: (-2, 1, 1),
            5: (2, 1, -1), 6: (-2, 1), 7: (0, -1), 8: (0, 2), 9: (-1, 0, 2), 10: (-1, -2),
        },
        4: {
            0: (0, 0, 1, 0, 0), 1: (1, -2, -1), 2: (-2, 0), 3: (0, 1, 0), 4: (2, 1, -1),
            5: (0, -1, 2), 6: (-1, 0), 7: (2, -1), 8: (-2, 1), 9: (0, 2, 0), 10: (0, 1),
        },
    },
    # Only x0 = f_{a_p} is printed at these levels; residue 0 is the unit vector e1.
    13: {
        0: {
            1: (0, 1, 0), 2: (3, 1, -2), 3: (2, 2, 1), 4: (1, 1, 1), 5: (0, 1, 2),
            6: (1, 0, 2), 7: (1, 1, 0), 8: (0, 1, 0), 9: (0, 0, 1), 10: (-1, -1, 1),
            11: (1, 0, 0), 12: (0, -1, 2),
        },
    },
    17: {
        0: {
            1: (-1, 1, -2, 2), 2: (0, 1, 0, 0), 3: (1, 1, 0, 0), 4: (3, 1, -3, -2),
            5: (1, 1, 1, 1), 6: (0, -1, 1, 2), 7: (0, 1, 1, 0), 8: (0, 1, 1, 0),
            9: (1, 0, 2, -1), 10: (1, 2, 0, -1), 11: (1, 0, 0, 1), 12: (1, 1, 1, -1),
            13: (1, 0, -1, 1), 14: (-1, -1, 0, 2), 15: (0, 0, 2, -1), 16: (0, 0, 1, 1),
        },
    },
    19: {
        0: {
            1: (0, 1, 0, 1, 0), 2: (1, 2, -1, -2), 3: (0, 0, 1, 1), 4: (-1, 1, 1, 0, 0),
            5: (1, -1, 1, -1, 0), 6: (2, -1, 0, -1, 1), 7: (0, 1, 0, 1, 0), 8: (1, 0, 0, 0),
            9: (1, 0, 1, -1, 1), 10: (1, 0, 0, -1), 11: (0, 1, 0, 0, 1), 12: (0, 1, -2, 0),
            13: (0, 0, 1, 0), 14: (0, 0, 0, 1), 15: (1, 0, -1, -1), 16: (1, -2, 1, 0, -1),
            17: (0, 0, 0, 1, 0), 18: (0, 1, 0, 0),
        },
    },
}

# ---------------------------------------------------------------------------
# Klein relations among the generators (printed labelling, degree two)
# ---------------------------------------------------------------------------

KLEIN_RELATIONS: dict[int, tuple[str, ...]] = {
    7: ("x0x1 - x1x2 - x0x2",),
    11: (
        "x0x1 - x1x4 - x0x3",
        "x0x4 - x0x3 - x2x4",
        "x1x4 - x0x2 - x1x2",
        "x1x3 - x0x2 - x3x2",
        "x1x3 - x4x3 - x2x4",
    ),
    13: (
        "x1x3 - x3x5 - x1x5",
        "x3x4 - x4x5 - x0x5",
        "x0x4 - x0x2 - x2x4",
        "x1x4 + x2x4 - x3x4 - x1x5 - x2x5",
        "x0x3 + x3x5 - x0x4 + x2x4 - x2x5 - x4x5",
    ),
}


def parse_relation(text: str, m: int) -> dict[tuple[int, ...], int]:
    """``"x0x1 - x1x2"`` -> {monomial: coefficient}."""
    out: dict[tuple[int, ...], int] = {}
    for sign, coeff, body in re.findall(r"([+-]?)\s*(\d*)\s*((?:x\d+(?:\^\d+)?)+)", text):
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        mono = parse_monomial(body, m)
        out[mono] = out.get(mono, 0) + c
    return out


# ---------------------------------------------------------------------------
# Operator data
# ---------------------------------------------------------------------------

# U_5 on <x0^2, x0x1, x1^2> acting on the left.
U5_WEIGHT2: tuple[tuple[int, ...], ...] = ((1, 0, 0), (22, 5, -22), (0, 0, 1))

# Irreducible factors expected in characteristic polynomials, as descending coefficients.
CHARPOLY_FACTORS: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {
    (13, 2): ((1, 5, 13),),
    (13, 3): ((1, 13, 169), (1, -8, 104, -1352, 13**4)),
}

# Eigenvalues whose eigenspaces make up M_k(Gamma_1(p)) at small level.
EIGENVALUES: dict[tuple[int, int], tuple[int, ...]] = {
    (5, 2): (1, 5),
    (7, 2): (1, 7),
    (11, 2): (1, 11),
    (7, 3): (1, -7, 49),
}

# ---------------------------------------------------------------------------
# Identities used by the CM and level-ten checks
# ---------------------------------------------------------------------------

# eta(tau)^3 eta(7 tau)^3 over the weight-three basis at p = 7.
CM_IDENTITY_7 = "x0^2x2 - 6x0x2^2 - 7x1x2^2 - x1^2x2"

# U_{11,10} U_11^j f_{6,-4,1,0,0,0} = 11^(2j) U_{11,10}(this cubic).
U11_10_CUBIC = "x0^2x3 + 2x0x1x3 + x1x2x4"

# Garvan's p = 5 construction: coefficients of w_1..w_12.
LEVEL10_U0 = (1, 1, 0, 0, 1, 1, -2, -2, 4, 4, -3, -3)
LEVEL10_U5 = (0, 0, 1, 1, 3, 3, 4, 4, 2, 2, 1, 1)
# U_{10,3} and U_{10,7} of f_{4,-1,-1} as 2 * sum c * w_i * w_j.
LEVEL10_U10_3 = (
    (1, (1, 9)), (1, (2, 10)), (2, (4, 10)), (-3, (11, 12)), (2, (3, 9)),
    (-1, (5, 7)), (-1, (6, 8)),
)
LEVEL10_U10_7 = (
    (2, (1, 8)), (-1, (10, 12)), (-1, (9, 11)), (2, (2, 7)), (-1, (3, 8)),
    (-1, (4, 7)), (3, (5, 6)),
)
