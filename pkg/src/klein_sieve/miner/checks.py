"""Named verifications of tabulated identities and congruence families."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from fractions import Fraction

from sympy import legendre_symbol, primerange

from klein_sieve.algebra.basis import monomial_series, polynomial_series
from klein_sieve.algebra.hecke import build_up_matrix
from klein_sieve.algebra.linalg import eigenspace, nullspace
from klein_sieve.data import (
    CM_IDENTITY_7,
    MIXED_MODULI,
    ORBIT_SIZES_13,
    U11_10_CUBIC,
    conjecture_vectors,
    family_vectors,
    parse_relation,
)
from klein_sieve.klein import (
    check_low_coefficient_vanishing,
    is_modular,
    product_to_precision,
    proof_window,
)
from klein_sieve.miner.search import holds_mod
from klein_sieve.models.certificates import CheckResult
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.orbits import orbit_size_class
from klein_sieve.series import dissect, truncate

log = logging.getLogger(__name__)


def _nonresidue(n: int, p: int) -> bool:
    return n % p != 0 and legendre_symbol(n % p, p) == -1


# ---------------------------------------------------------------------------
# CM forms and parity
# ---------------------------------------------------------------------------


def cm_vanishing_7(window: int = 500) -> CheckResult:
    """P_{6,3,3,3}(n - 1) = 0 whenever n = 3, 5, 6 (mod 7)."""
    f = product_to_precision(ExponentVector(7, (6, 3, 3, 3)), window + 1)
    bad = [n for n in range(1, window + 1) if n % 7 in (3, 5, 6) and f.coefficient(n)]
    return CheckResult("cm_vanishing_7", not bad, f"first nonzero at n={bad[0]}" if bad else "")


def cm_identity_7() -> CheckResult:
    """eta(tau)^3 eta(7 tau)^3 as a cubic in the level-7 generators."""
    window = proof_window(7, 3)
    poly = parse_relation(CM_IDENTITY_7, 3)
    f = product_to_precision(ExponentVector(7, (6, 3, 3, 3)), window)
    ok = f.agrees(polynomial_series(7, poly, window), upto=window)
    return CheckResult("cm_identity_7", ok, CM_IDENTITY_7)


def _residue(n: int, p: int) -> bool:
    return n % p != 0 and legendre_symbol(n % p, p) == 1


def parity_rows_11(window: int | None = None) -> list[CheckResult]:
    """U_{11,r} of eta_1^2 eta_11^2 (r a non-residue) and eta_1^4 eta_11^4 (r a residue) are even.

    Each row is compared on the proof window of its weight unless ``window`` is given.
    """
    out = []
    for vec, wanted in (
        ((4, 2, 2, 2, 2, 2), lambda r: _nonresidue(r, 11)),
        ((8, 4, 4, 4, 4, 4), lambda r: _residue(r, 11)),
    ):
        v = ExponentVector(11, vec)
        n = window or proof_window(11, v.a0 // 2)
        f = product_to_precision(v, 11 * n)
        rows = [r for r in range(11) if wanted(r)]
        bad = [r for r in rows if not holds_mod(f, 11, r, 2, n)]
        out.append(CheckResult(f"parity_{v}", not bad, f"odd rows {bad}" if bad else f"rows {rows}"))
    return out


def elliptic_parity_11(limit: int = 200) -> CheckResult:
    """q - a(q) is odd for odd primes q <= limit that are non-residues mod 11.

    a(q) is the coefficient of q^q in eta(tau)^2 eta(11 tau)^2.
    """
    f = product_to_precision(ExponentVector(11, (4, 2, 2, 2, 2, 2)), limit + 1)
    primes = [q for q in primerange(3, limit + 1) if _nonresidue(q, 11)]
    bad = [q for q in primes if (q - int(f.coefficient(q))) % 2 == 0]
    return CheckResult(
        "elliptic_parity_11", not bad, f"{len(primes)} primes" + (f", even at {bad}" if bad else "")
    )


def _primitive(values: list[Fraction]) -> list[int]:
    """Scale to coprime integers with a positive first nonzero entry."""
    lcm = math.lcm(*(x.denominator for x in values))
    ints = [int(x * lcm) for x in values]
    g = math.gcd(*ints) or 1
    lead = next((x for x in ints if x), 1)
    sign = -1 if lead < 0 else 1
    return [sign * x // g for x in ints]


def twisted_eigenform_11(k: int, eigenvalue: int, length: int) -> list[int] | None:
    """Coefficients a(0..length-1) of the U_11 eigenform of weight k vanishing on non-residues.

    The form is the combination of the eigenspace of A(11, k) at ``eigenvalue``
    whose coefficients at non-residue indices vanish; it is returned primitive.
    """
    A = build_up_matrix(11, k)
    basis = A.basis
    space = eigenspace(A.entries, Fraction(eigenvalue))
    if not space:
        return None
    rows = [basis.combination(e) for e in space]
    constraints = [
        [row[n] for row in rows] for n in range(basis.window) if _nonresidue(n, 11)
    ]
    kernel = nullspace(constraints)
    if not kernel:
        return None
    coords = [sum((t * e[j] for t, e in zip(kernel[0], space)), Fraction(0))
              for j in range(basis.dim)]
    total = [Fraction(0)] * length
    for c, mono in zip(coords, basis.monomials):
        if c:
            window = monomial_series(11, mono, length).window(0, length)
            for n, x in enumerate(window):
                total[n] += c * x
    return _primitive(total)


def eigenform_congruences_11(n_max: int = 50, levels: int = 2) -> list[CheckResult]:
    """a_{11,3}(11^j n) = 0 (mod 11^j) and a_{11,5}(11^j n) = 0 (mod 11^(2j)) for j <= levels."""
    out = []
    length = 11**levels * n_max + 1
    for k, eigenvalue, alpha in ((3, -11, 1), (5, 121, 2)):
        name = f"eigenform_11_weight{k}"
        a = twisted_eigenform_11(k, eigenvalue, length)
        if a is None:
            out.append(CheckResult(name, False, f"no eigenform at {eigenvalue} vanishing on non-residues"))
            continue
        vanishes = all(a[n] == 0 for n in range(length) if _nonresidue(n, 11))
        bad = [
            (j, n)
            for j in range(1, levels + 1)
            for n in range(1, n_max + 1)
            if a[11**j * n] % 11 ** (alpha * j)
        ]
        detail = f"lambda={eigenvalue}, alpha={alpha}" + (f", fails at {bad[:3]}" if bad else "")
        out.append(CheckResult(name, vanishes and not bad, detail))
    return out


def u11_10_cubic(levels: int = 1) -> CheckResult:
    """U_{11,10} U_11^j f_{6,-4,1,0,0,0} = 11^(2j) U_{11,10} of a cubic in the generators."""
    window = proof_window(11, 3)
    top = Fraction(10, 11) + window
    f = product_to_precision(ExponentVector(11, (6, -4, 1, 0, 0, 0)), 11 ** (levels + 1) * window)
    images = [f]
    for _ in range(levels):
        images.append(dissect(images[-1], 11, 0))
    targets = [truncate(dissect(g, 11, 10), top) for g in images]

    cubic = polynomial_series(11, parse_relation(U11_10_CUBIC, 5), 11 * window)
    base = truncate(dissect(cubic, 11, 10), top)
    bad = [j for j, t in enumerate(targets) if not t.agrees(base * (11 ** (2 * j)), upto=top)]
    return CheckResult("u11_10_cubic", not bad, f"fails at j={bad}" if bad else f"j <= {levels}")


def cm_vanishing_check(window: int = 500) -> list[CheckResult]:
    """All CM, parity and eigenform checks at levels 7 and 11."""
    results = [cm_vanishing_7(window), cm_identity_7()]
    results += parity_rows_11()
    results.append(elliptic_parity_11())
    results += eigenform_congruences_11()
    results.append(u11_10_cubic())
    for r in results:
        log.info("%s: %s %s", r.name, "ok" if r.passed else "FAILED", r.detail)
    return results


# ---------------------------------------------------------------------------
# Families at larger primes
# ---------------------------------------------------------------------------


def eigen_residual_zero(v: ExponentVector, eigenvalue: int, window: int | None = None) -> bool:
    """U_p f_v - eigenvalue * f_v vanishes on the proof window."""
    window = window or proof_window(v.p, v.a0 // 2)
    f = product_to_precision(v, v.p * window)
    image = dissect(f, v.p, 0).window(0, window)
    return image == [eigenvalue * x for x in f.window(0, window)]


def verify_large_prime_families(primes: Iterable[int]) -> list[CheckResult]:
    """Eigen families checked at the series level; conjecture vectors as evidence only."""
    out = []
    for p in primes:
        for vec, eigenvalue in family_vectors(p):
            v = ExponentVector(p, vec)
            modular, _ = is_modular(v)
            low = check_low_coefficient_vanishing(v)
            residual = modular and eigen_residual_zero(v, eigenvalue)
            out.append(
                CheckResult(
                    f"family_{p}_{v}",
                    modular and low and residual,
                    f"lambda={eigenvalue} modular={modular} low={low} residual_zero={residual}",
                )
            )
        for vec in conjecture_vectors(p):
            v = ExponentVector(p, vec)
            window = proof_window(p, v.a0 // 2)
            f = product_to_precision(v, p * window)
            ok = holds_mod(f, p, 0, p, window)
            out.append(CheckResult(f"conjecture_{p}_{v}", ok, f"window={window}", evidence_only=True))
        log.info("Families at p=%d checked", p)
    return out


def verify_mixed_moduli(window: int = 200) -> list[CheckResult]:
    """U_{p,r} f = 0 (mod m) for the tabulated mixed-modulus congruences."""
    out = []
    for p, vec, residues, modulus in MIXED_MODULI:
        v = ExponentVector(p, vec)
        f = product_to_precision(v, p * window)
        bad = [r for r in residues if not holds_mod(f, p, r, modulus, window)]
        out.append(
            CheckResult(
                f"mixed_{p}_{v}_mod{modulus}",
                not bad,
                f"residues {list(residues)}" + (f", fails at {bad}" if bad else ""),
            )
        )
    return out


def verify_orbit_sizes() -> list[CheckResult]:
    return [
        CheckResult(f"orbit_size_13_{vec}", orbit_size_class(ExponentVector(13, vec)) == size,
                    f"expected {size}")
        for vec, size in ORBIT_SIZES_13.items()
    ]

