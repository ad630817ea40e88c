"""Exact truncated q-series with rational exponents.

A :class:`FracSeries` stands for

    sum_k (coeffs[k] / scale) * q^(start + k/den)   + O(q^(start + trunc/den))

with integer numerators sharing one positive denominator ``scale``.  Every
series carries a finite precision; coefficients at or past it are unknown and
asking for them raises :class:`TruncationError`.

Multiplication packs numerators into one big integer (Kronecker substitution)
once both operands are dense enough; inversion of a unit series runs Newton
iteration on the ``giant_steps`` precision schedule.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Mapping

from mpmath.libmp.libintmath import giant_steps
from sympy import multiplicity

try:
    import gmpy2  # optional: faster big-integer products
except ModuleNotFoundError:
    gmpy2 = None  # type: ignore[assignment]

from klein_sieve.errors import (
    GridMismatchError,
    NotIntegralError,
    NotInvertibleError,
    TruncationError,
)

log = logging.getLogger(__name__)

Rational = int | Fraction

# Sparse operands with at most this many nonzero coefficients use schoolbook
# convolution over their support; everything else goes through Kronecker.
SPARSE_LIMIT = 40


# ---------------------------------------------------------------------------
# Integer convolution kernels
# ---------------------------------------------------------------------------


def _schoolbook(x: list[int], y: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of x*y, iterating over the sparser operand's support."""
    if sum(1 for c in x if c) > sum(1 for c in y if c):
        x, y = y, x
    size = min(n, len(x) + len(y) - 1)
    out = [0] * max(size, 0)
    for i, xi in enumerate(x):
        if not xi or i >= size:
            continue
        for j, yj in enumerate(y[: size - i]):
            if yj:
                out[i + j] += xi * yj
    return out


def _pack(values: list[int], width: int) -> int:
    pos = b"".join((v if v > 0 else 0).to_bytes(width, "little") for v in values)
    neg = b"".join((-v if v < 0 else 0).to_bytes(width, "little") for v in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(packed: int, width: int, digits: int, keep: int) -> list[int]:
    """Split a signed base-2^(8*width) integer into ``keep`` balanced digits."""
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * digits, "little")
    raw = (packed + bias).to_bytes(width * digits, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") - half for i in range(keep)
    ]


def _kronecker(x: list[int], y: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of x*y through one big-integer product."""
    x, y = x[:n], y[:n]
    mx = max(abs(c) for c in x)
    my = max(abs(c) for c in y)
    if mx == 0 or my == 0:
        return [0] * min(n, len(x) + len(y) - 1)
    bound = min(len(x), len(y)) * mx * my
    width = (bound.bit_length() + 2 + 7) // 8
    px, py = _pack(x, width), _pack(y, width)
    if gmpy2 is not None:
        product = int(gmpy2.mpz(px) * gmpy2.mpz(py))
    else:
        product = px * py
    digits = len(x) + len(y) - 1
    return _unpack(product, width, digits, min(n, digits))


def convolve(x: list[int], y: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer coefficient lists."""
    if not x or not y or n <= 0:
        return []
    if min(sum(1 for c in x if c), sum(1 for c in y if c)) <= SPARSE_LIMIT:
        return _schoolbook(x, y, n)
    return _kronecker(x, y, n)


def _unit_recurrence(f: list[int], n: int) -> list[int]:
    """Inverse of an integer series with constant term 1 by the direct recurrence."""
    g = [1]
    for m in range(1, n):
        g.append(-sum(f[k] * g[m - k] for k in range(1, min(m, len(f) - 1) + 1)))
    return g[:n]


def _newton_inverse(f: list[int], n: int) -> list[int]:
    """Inverse of an integer series with constant term 1, to ``n`` coefficients."""
    if n <= 0:
        return []
    # giant_steps(2, n) opens at <= 4 slots and never more than doubles after that
    steps = giant_steps(2, n)
    g = _unit_recurrence(f, steps[0])
    for prec in steps[1:]:
        residual = convolve(f[:prec], g, prec)
        residual += [0] * (prec - len(residual))
        residual[0] -= 1
        correction = convolve(g, residual, prec)
        correction += [0] * (prec - len(correction))
        g = [(g[k] if k < len(g) else 0) - correction[k] for k in range(prec)]
    return g


def _recurrence_inverse(f: list[int], n: int) -> tuple[list[int], int]:
    """Inverse of an integer series with arbitrary nonzero constant term.

    Returns numerators over the common denominator ``f[0]**n``.
    """
    c = f[0]
    h = [1]
    cpow = [1]
    for k in range(1, n):
        cpow.append(cpow[-1] * c)
    for m in range(1, n):
        acc = 0
        for k in range(1, min(m, len(f) - 1) + 1):
            if f[k]:
                acc += f[k] * cpow[k - 1] * h[m - k]
        h.append(-acc)
    denom = cpow[-1] * c if n else 1
    return [h[m] * cpow[n - 1 - m] for m in range(n)], denom


# ---------------------------------------------------------------------------
# FracSeries
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FracSeries:
    """Truncated series on the grid ``start + k/den`` with shared-denominator coefficients."""

    start: Fraction  # exponent of coeffs[0]; the precision point for a zero series
    den: int  # step denominator of the exponent grid
    coeffs: tuple[int, ...]  # numerators, leading entry nonzero, trailing zeros trimmed
    scale: int  # shared positive denominator
    trunc: int  # number of valid slots from start

    # ── Construction ──────────────────────────────────────────

    @classmethod
    def _make(
        cls, start: Fraction, den: int, nums: list[int], scale: int, trunc: int
    ) -> FracSeries:
        start = Fraction(start)
        trunc = max(trunc, 0)
        nums = list(nums[:trunc])
        lead = 0
        while lead < len(nums) and nums[lead] == 0:
            lead += 1
        if lead == len(nums):
            return cls(start + Fraction(trunc, den), den, (), 1, 0)
        if lead:
            nums = nums[lead:]
            start += Fraction(lead, den)
            trunc -= lead
        while nums[-1] == 0:
            nums.pop()
        if scale < 0:
            scale = -scale
            nums = [-c for c in nums]
        g = math.gcd(scale, *nums)
        if g != 1:
            nums = [c // g for c in nums]
            scale //= g
        return cls(start, den, tuple(nums), scale, trunc)

    @classmethod
    def from_coefficients(
        cls,
        coeffs: Iterable[Rational],
        *,
        start: Rational = 0,
        den: int = 1,
        prec: Rational | None = None,
    ) -> FracSeries:
        """Series with the given coefficients on ``start + k/den``.

        ``prec`` defaults to the first slot after the last given coefficient.
        """
        values = [Fraction(c) for c in coeffs]
        start = Fraction(start)
        scale = math.lcm(*(v.denominator for v in values)) if values else 1
        nums = [int(v * scale) for v in values]
        if prec is None:
            trunc = len(nums)
        else:
            span = (Fraction(prec) - start) * den
            trunc = math.ceil(span)
        return cls._make(start, den, nums, scale, trunc)

    @classmethod
    def from_terms(cls, terms: Mapping[Rational, Rational], prec: Rational) -> FracSeries:
        """Series from an exponent → coefficient mapping, known below ``prec``."""
        prec = Fraction(prec)
        exps = [Fraction(e) for e in terms if terms[e] and Fraction(e) < prec]
        if not exps:
            return cls.zero(prec)
        start = min(exps)
        den = math.lcm(*((e - start).denominator for e in exps), (prec - start).denominator)
        slots = [Fraction(0)] * int((prec - start) * den)
        for e, c in terms.items():
            e = Fraction(e)
            if c and e < prec:
                slots[int((e - start) * den)] = Fraction(c)
        return cls.from_coefficients(slots, start=start, den=den, prec=prec)

    @classmethod
    def monomial(cls, exponent: Rational, prec: Rational, coeff: Rational = 1) -> FracSeries:
        return cls.from_terms({Fraction(exponent): coeff}, prec)

    @classmethod
    def constant(cls, value: Rational, prec: Rational) -> FracSeries:
        return cls.from_terms({Fraction(0): value}, prec)

    @classmethod
    def zero(cls, prec: Rational) -> FracSeries:
        return cls(Fraction(prec), 1, (), 1, 0)

    # ── Inspection ────────────────────────────────────────────

    @property
    def precision(self) -> Fraction:
        """First exponent whose coefficient is unknown."""
        return self.start + Fraction(self.trunc, self.den)

    @property
    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    @property
    def is_integral(self) -> bool:
        return self.scale == 1

    @property
    def leading_exponent(self) -> Fraction:
        if not self.coeffs:
            raise TruncationError("zero series has no leading term below its precision")
        return self.start

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise TruncationError("zero series has no leading term below its precision")
        return Fraction(self.coeffs[0], self.scale)

    def coefficient(self, exponent: Rational) -> Fraction:
        """Coefficient of ``q^exponent``; raises past the precision."""
        exponent = Fraction(exponent)
        if exponent >= self.precision:
            raise TruncationError(
                f"coefficient of q^{exponent} requested, series known below q^{self.precision}"
            )
        idx = (exponent - self.start) * self.den
        if idx < 0 or idx.denominator != 1 or idx >= len(self.coeffs):
            return Fraction(0)
        return Fraction(self.coeffs[int(idx)], self.scale)

    def terms(self) -> Iterator[tuple[Fraction, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        step = Fraction(1, self.den)
        for k, c in enumerate(self.coeffs):
            if c:
                yield self.start + k * step, Fraction(c, self.scale)

    def window(self, base: Rational, count: int) -> list[Fraction]:
        """Coefficients of ``q^(base + n)`` for ``0 <= n < count``."""
        base = Fraction(base)
        if count and base + count - 1 >= self.precision:
            raise TruncationError(
                f"window [{base}, {base + count - 1}] exceeds precision {self.precision}"
            )
        offset = (base - self.start) * self.den
        out: list[Fraction] = []
        for n in range(count):
            idx = offset + n * self.den
            if idx < 0 or idx.denominator != 1 or idx >= len(self.coeffs):
                out.append(Fraction(0))
            else:
                out.append(Fraction(self.coeffs[int(idx)], self.scale))
        return out

    def agrees(self, other: FracSeries, upto: Rational | None = None) -> bool:
        """Coefficientwise equality below ``upto`` (default: the common precision)."""
        limit = min(self.precision, other.precision)
        if upto is None:
            upto = limit
        elif Fraction(upto) > limit:
            raise TruncationError(f"comparison up to q^{upto} but series known below q^{limit}")
        return sub(truncate(self, upto), truncate(other, upto)).is_zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self.precision == other.precision and sub(self, other).is_zero

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        shown = []
        for e, c in list(self.terms())[:6]:
            shown.append(f"{c}*q^{e}")
        body = " + ".join(shown) if shown else "0"
        more = " + ..." if len(self.coeffs) > 6 else ""
        return f"FracSeries({body}{more} + O(q^{self.precision}))"

    # ── Operators ─────────────────────────────────────────────

    def __add__(self, other: FracSeries) -> FracSeries:
        return add(self, other)

    def __sub__(self, other: FracSeries) -> FracSeries:
        return sub(self, other)

    def __neg__(self) -> FracSeries:
        return scalar_mul(self, -1)

    def __mul__(self, other: FracSeries | Rational) -> FracSeries:
        if isinstance(other, FracSeries):
            return mul(self, other)
        return scalar_mul(self, other)

    def __rmul__(self, other: Rational) -> FracSeries:
        return scalar_mul(self, other)

    def __pow__(self, e: int) -> FracSeries:
        return power(self, e)


# ---------------------------------------------------------------------------
# Grid helpers
# ---------------------------------------------------------------------------


def _on_grid(f: FracSeries, start: Fraction, den: int, length: int) -> list[int]:
    """Numerators of ``f`` laid out on ``start + k/den`` for ``k < length``."""
    out = [0] * length
    offset = (f.start - start) * den
    if offset.denominator != 1 or den % f.den:
        raise GridMismatchError(f"series on {f.start}+Z/{f.den} does not embed in {start}+Z/{den}")
    offset = int(offset)
    stride = den // f.den
    if stride == 1:
        chunk = list(f.coeffs[: max(length - offset, 0)])
        out[offset : offset + len(chunk)] = chunk
        return out
    for k, c in enumerate(f.coeffs):
        idx = offset + k * stride
        if idx >= length:
            break
        out[idx] = c
    return out


def align(a: FracSeries, b: FracSeries) -> tuple[Fraction, int, int]:
    """Common (start, den, trunc) on which both series can be laid out."""
    den = math.lcm(a.den, b.den, (a.start - b.start).denominator)
    start = min(a.start, b.start)
    prec = min(a.precision, b.precision)
    return start, den, int((prec - start) * den)


def truncate(f: FracSeries, prec: Rational) -> FracSeries:
    """Forget every coefficient at or beyond ``q^prec``."""
    prec = Fraction(prec)
    if prec >= f.precision:
        return f
    if prec <= f.start:
        return FracSeries.zero(prec)
    span = (prec - f.start) * f.den
    return FracSeries._make(f.start, f.den, list(f.coeffs), f.scale, math.ceil(span))


# ---------------------------------------------------------------------------
# Ring operations
# ---------------------------------------------------------------------------


def add(a: FracSeries, b: FracSeries) -> FracSeries:
    """Sum on the common grid; precision is the smaller of the two."""
    start, den, trunc = align(a, b)
    scale = math.lcm(a.scale, b.scale)
    ma, mb = scale // a.scale, scale // b.scale
    xa = _on_grid(a, start, den, trunc)
    xb = _on_grid(b, start, den, trunc)
    return FracSeries._make(start, den, [x * ma + y * mb for x, y in zip(xa, xb)], scale, trunc)


def sub(a: FracSeries, b: FracSeries) -> FracSeries:
    return add(a, scalar_mul(b, -1))


def scalar_mul(f: FracSeries, c: Rational) -> FracSeries:
    c = Fraction(c)
    if c == 0:
        return FracSeries.zero(f.precision)
    return FracSeries._make(
        f.start, f.den, [x * c.numerator for x in f.coeffs], f.scale * c.denominator, f.trunc
    )


def linear_combination(pairs: Iterable[tuple[Rational, FracSeries]]) -> FracSeries:
    """Sum of ``c * f`` over the pairs (at least one pair required)."""
    return reduce(add, (scalar_mul(f, c) for c, f in pairs))


def mul(a: FracSeries, b: FracSeries) -> FracSeries:
    """Cauchy product; the relative precision is the smaller relative precision."""
    den = math.lcm(a.den, b.den)
    sa, sb = den // a.den, den // b.den
    trunc = min(a.trunc * sa, b.trunc * sb)
    if not a.coeffs or not b.coeffs:
        return FracSeries.zero(a.start + b.start + Fraction(trunc, den))
    xa = _on_grid(a, a.start, den, min(trunc, (len(a.coeffs) - 1) * sa + 1))
    xb = _on_grid(b, b.start, den, min(trunc, (len(b.coeffs) - 1) * sb + 1))
    return FracSeries._make(
        a.start + b.start, den, convolve(xa, xb, trunc), a.scale * b.scale, trunc
    )


def invert(a: FracSeries) -> FracSeries:
    """Multiplicative inverse; the leading exponent negates and relative precision is kept."""
    if not a.coeffs:
        raise NotInvertibleError()
    n = a.trunc
    f = list(a.coeffs) + [0] * (n - len(a.coeffs))
    lead = f[0]
    if abs(lead) == 1:
        g = _newton_inverse([lead * c for c in f], n)
        nums, denom = [lead * c * a.scale for c in g], 1
    else:
        g, denom = _recurrence_inverse(f, n)
        nums = [c * a.scale for c in g]
    return FracSeries._make(-a.start, a.den, nums, denom, n)


def power(a: FracSeries, e: int) -> FracSeries:
    """``a**e`` by binary powering; negative exponents invert first."""
    if e == 0:
        return FracSeries.from_coefficients([1], den=a.den, prec=Fraction(a.trunc, a.den))
    if e < 0:
        a, e = invert(a), -e
    result: FracSeries | None = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    assert result is not None
    return result


def shift(f: FracSeries, exponent: Rational) -> FracSeries:
    """Multiply by ``q^exponent``."""
    return FracSeries(f.start + Fraction(exponent), f.den, f.coeffs, f.scale, f.trunc)


# ---------------------------------------------------------------------------
# Exponent transformations
# ---------------------------------------------------------------------------


def integral_support(f: FracSeries) -> FracSeries:
    """Re-express ``f`` on the integer grid; fails if a known term has a fractional exponent."""
    if f.den == 1 and f.start.denominator == 1:
        return f
    terms = {}
    for e, c in f.terms():
        if e.denominator != 1:
            raise GridMismatchError(f"term q^{e} is not on the integer grid")
        terms[e] = c
    return FracSeries.from_terms(terms, math.ceil(f.precision))


def dissect(f: FracSeries, p: int, r: int) -> FracSeries:
    """``U_{p,r} f = sum_{n = r mod p} b(n) q^(n/p)``; ``U_{p,0}`` is the usual ``U_p``."""
    g = integral_support(f)
    if not g.coeffs:
        return FracSeries.zero(Fraction(r, p) + math.ceil(Fraction(g.precision - r, p)))
    start = int(g.start)
    k0 = (r - start) % p
    picked = list(g.coeffs[k0::p])
    count = len(range(k0, g.trunc, p))
    return FracSeries._make(Fraction(start + k0, p), 1, picked, g.scale, count)


def scale_exponents(f: FracSeries, factor: Rational) -> FracSeries:
    """``f(factor * tau)``: every exponent is multiplied by ``factor`` (> 0)."""
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError("exponent scale factor must be positive")
    step = factor / f.den
    den, stride = step.denominator, step.numerator
    nums = [0] * ((len(f.coeffs) - 1) * stride + 1 if f.coeffs else 0)
    for k, c in enumerate(f.coeffs):
        nums[k * stride] = c
    return FracSeries._make(f.start * factor, den, nums, f.scale, f.trunc * stride)


def parity_split(f: FracSeries, base: Rational) -> tuple[FracSeries, FracSeries]:
    """Split by the parity of ``n`` where exponents are ``base + n``."""
    offset = f.start - Fraction(base)
    if f.den != 1 or offset.denominator != 1:
        raise GridMismatchError(f"series is not supported on {base} + Z")
    even, odd = list(f.coeffs), list(f.coeffs)
    for k in range(len(f.coeffs)):
        if (int(offset) + k) % 2:
            even[k] = 0
        else:
            odd[k] = 0
    return (
        FracSeries._make(f.start, 1, even, f.scale, f.trunc),
        FracSeries._make(f.start, 1, odd, f.scale, f.trunc),
    )


# ---------------------------------------------------------------------------
# Integrality and congruences
# ---------------------------------------------------------------------------


def reduce_mod(f: FracSeries, m: int) -> FracSeries:
    """Coefficients reduced into ``[0, m)``; every known coefficient must be an integer."""
    if f.scale != 1:
        raise NotIntegralError()
    return FracSeries._make(f.start, f.den, [c % m for c in f.coeffs], 1, f.trunc)


def valuation(f: FracSeries, p: int) -> int | None:
    """Smallest p-adic valuation among known coefficients; ``None`` for a zero series."""
    if not f.coeffs:
        return None
    g = math.gcd(*f.coeffs)
    return multiplicity(p, g) - multiplicity(p, f.scale)


def is_zero_mod(f: FracSeries, modulus: int) -> bool:
    """True when every known coefficient is an integer multiple of ``modulus``."""
    if f.scale != 1:
        return False
    return all(c % modulus == 0 for c in f.coeffs)


# ---------------------------------------------------------------------------
# Product building blocks
# ---------------------------------------------------------------------------


def _check_index(i: int, p: int) -> None:
    if not 1 <= i <= (p - 1) // 2:
        raise ValueError(f"index {i} outside 1..{(p - 1) // 2} for p={p}")


@lru_cache(maxsize=512)
def theta_series(p: int, i: int, length: int) -> FracSeries:
    """``(q^i, q^(p-i), q^p; q^p)_inf`` through the Jacobi triple product, ``length`` terms."""
    terms: dict[int, int] = {}
    n = 0
    while True:
        hit = False
        for m in {n, -n}:
            e = p * m * (m - 1) // 2 + i * m
            if e < length:
                terms[e] = terms.get(e, 0) + (-1) ** (m % 2)
                hit = True
        if not hit and n > 0:
            break
        n += 1
    return FracSeries.from_terms(terms, length)


@lru_cache(maxsize=512)
def euler_series(p: int, length: int) -> FracSeries:
    """``(q^p; q^p)_inf`` through the pentagonal number theorem, ``length`` terms."""
    terms: dict[int, int] = {}
    n = 0
    while True:
        hit = False
        for m in {n, -n}:
            e = p * m * (3 * m - 1) // 2
            if e < length:
                terms[e] = (-1) ** (m % 2)
                hit = True
        if not hit and n > 0:
            break
        n += 1
    return FracSeries.from_terms(terms, length)


@lru_cache(maxsize=2048)
def euler_power(p: int, e: int, length: int) -> FracSeries:
    return power(euler_series(p, length), e)


@lru_cache(maxsize=2048)
def theta_power(p: int, i: int, e: int, length: int) -> FracSeries:
    return power(theta_series(p, i, length), e)


def pochhammer_product(i: int, p: int, N: int) -> FracSeries:
    """``(q^i, q^(p-i); q^p)_inf`` with coefficients of ``q^0 .. q^N``."""
    _check_index(i, p)
    length = N + 1
    return mul(theta_series(p, i, length), euler_power(p, -1, length))


def eta_power(p: int, e: int, N: int) -> FracSeries:
    """``eta(p tau)^e`` with leading exponent ``p e / 24`` and ``N`` further terms."""
    return shift(euler_power(p, e, N + 1), Fraction(p * e, 24))
