"""Exact integer polynomials and algebraic numbers given by minimal polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

ZERO_DEGREE = -math.inf


class IntPoly:
    """Dense univariate polynomial with ``int`` coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"integer coefficients required, got {a!r}")
        self.coeffs: tuple[int, ...] = tuple(c)
        self._hash = None

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        """Parse space-separated coefficients in descending degree, e.g. ``"1 0 -3"``."""
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty polynomial text")
        try:
            return cls.from_descending([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"bad polynomial coefficients: {text!r}") from None

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(str(a) for a in reversed(self.coeffs))

    # -- basic properties

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = math.gcd(g, a)
        return g

    def primitive_part(self) -> "IntPoly":
        """``self / content`` with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(a // g for a in self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(k * a for k, a in enumerate(self.coeffs) if k)

    def __call__(self, value):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    # -- ring operations

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * a for a in self.coeffs)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``x^k``."""
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else self

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"IntPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly.const(p)
    raise TypeError(f"cannot use {p!r} as a polynomial")


def exact_divide(num: IntPoly, den: IntPoly) -> IntPoly | None:
    """Integral ``q`` with ``num == den * q``, or ``None`` when there is none.

    Integer long division; it stops as soon as a quotient coefficient would be
    fractional.  For primitive ``den`` this loses nothing, since any rational
    quotient of integer polynomials by a primitive divisor is integral.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return IntPoly()
    d = den.coeffs
    dn = len(d) - 1
    lead = d[-1]
    r = list(num.coeffs)
    m = len(r) - 1 - dn
    if m < 0:
        return None
    q = [0] * (m + 1)
    for k in range(m, -1, -1):
        top = r[k + dn]
        if top:
            c, rem = divmod(top, lead)
            if rem:
                return None
            q[k] = c
            for j in range(dn + 1):
                r[k + j] -= c * d[j]
    if any(r[:dn]):
        return None
    return IntPoly(q)


def divmod_rational(num: IntPoly, den: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over the rationals, as ascending coefficient lists."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    d = [Fraction(a) for a in den.coeffs]
    r = [Fraction(a) for a in num.coeffs]
    dn = len(d) - 1
    m = len(r) - 1 - dn
    q = [Fraction(0)] * max(m + 1, 0)
    for k in range(m, -1, -1):
        c = r[k + dn] / d[-1]
        q[k] = c
        if c:
            for j in range(dn + 1):
                r[k + j] -= c * d[j]
    rem = r[:dn] if m >= 0 else r
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


def _pseudo_remainder(a: tuple[int, ...], b: tuple[int, ...]) -> IntPoly:
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lead * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= top * b[j]
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (integer content ignored)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.primitive_part(), b.primitive_part()
    while not b.is_zero():
        if a.degree < b.degree:
            a, b = b, a
            continue
        a, b = b, _pseudo_remainder(a.coeffs, b.coeffs).primitive_part()
    return a.primitive_part()


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: IntPoly) -> list[Fraction]:
    """All rational roots of ``p`` (rational root theorem)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    roots = set()
    c = p.coeffs
    k = 0
    while c[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    c0, lead = c[k], c[-1]
    for a in _divisors(c0):
        for b in _divisors(lead):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if p(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


@dataclass(frozen=True)
class ThetaSpec:
    """An algebraic number known through its minimal polynomial.

    Conjugates are not distinguished: ``sqrt3`` and ``-sqrt3`` have the same
    multiplicity in every integer polynomial.  Irreducibility is checked for
    degree up to 3 and otherwise taken on trust from the caller.
    """

    minpoly: IntPoly
    label: str = field(default="", compare=False)

    def __post_init__(self):
        m = self.minpoly
        if m.degree < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        if m.content() != 1 or m.leading < 0:
            raise ValueError(f"minimal polynomial {m} must be primitive with positive leading coefficient")
        if m.degree > 1 and poly_gcd(m, m.derivative()).degree > 0:
            raise ValueError(f"minimal polynomial {m} is not square-free")
        if m.degree == 2:
            c, b, a = m.coeffs
            if _is_square(b * b - 4 * a * c):
                raise ValueError(f"{m} is reducible over the rationals")
        elif m.degree == 3 and rational_roots(m):
            raise ValueError(f"{m} is reducible over the rationals")
        if not self.label:
            object.__setattr__(self, "label", _default_label(m))

    @classmethod
    def rational(cls, value) -> "ThetaSpec":
        """``theta = p/q`` with minimal polynomial ``q x - p``."""
        v = Fraction(value)
        return cls(IntPoly((-v.numerator, v.denominator)))

    @classmethod
    def from_text(cls, text: str, label: str = "") -> "ThetaSpec":
        return cls(IntPoly.from_text(text), label)

    @property
    def degree(self) -> int:
        return int(self.minpoly.degree)

    @property
    def is_zero(self) -> bool:
        return self.minpoly.coeffs == (0, 1)

    def to_text(self) -> str:
        return self.minpoly.to_text()

    def __str__(self) -> str:
        return self.label


def _default_label(m: IntPoly) -> str:
    if m.degree == 1:
        return str(Fraction(-m.coeffs[0], m.coeffs[1]))
    if m.degree == 2 and m.coeffs[1] == 0 and m.coeffs[2] == 1 and m.coeffs[0] < 0:
        return f"sqrt{-m.coeffs[0]}"
    return f"root of {m}"


def root_multiplicity(p: IntPoly, theta: ThetaSpec) -> int:
    """Largest ``k`` such that ``minpoly(theta)^k`` divides ``p``."""
    if p.is_zero():
        raise ValueError("root multiplicity in the zero polynomial is undefined")
    m = theta.minpoly
    if m.coeffs == (0, 1):
        k = 0
        while p.coeffs[k] == 0:
            k += 1
        return k
    k = 0
    while True:
        q = exact_divide(p, m)
        if q is None:
            return k
        p = q
        k += 1


def find_theta_candidates(p: IntPoly, degree_cap: int = 2) -> list[ThetaSpec]:
    """Monic linear and (for ``degree_cap == 2``) irreducible monic quadratic
    integer factors of a monic ``p``, as θ specs."""
    if degree_cap not in (1, 2):
        raise ValueError("degree_cap must be 1 or 2")
    if p.is_zero():
        return []
    if not p.is_monic():
        raise ValueError("find_theta_candidates expects a monic polynomial")
    return [ThetaSpec(IntPoly(m)) for m in _candidate_factors(p.coeffs, degree_cap)]


@lru_cache(maxsize=1 << 14)
def _candidate_factors(coeffs: tuple[int, ...], degree_cap: int) -> tuple[tuple[int, ...], ...]:
    p = IntPoly(coeffs)
    n = len(coeffs) - 1
    found: list[tuple[int, ...]] = []
    # rational roots of a monic integer polynomial are integers
    linear = [c for c in range(-n, n + 1) if p(c) == 0]
    linear.sort(key=lambda c: (abs(c), -c))
    found.extend((-c, 1) for c in linear)
    if degree_cap == 2 and n >= 2:
        probes = [(k, p(k)) for k in (0, 1, -1, 2, -2)]
        quads = []
        for b in range(-2 * n, 2 * n + 1):
            for c in range(-n * n, n * n + 1):
                if _is_square(b * b - 4 * c):
                    continue
                # m(k) | p(k) is necessary for m | p; m has no integer roots
                if any(pk % (k * k + b * k + c) for k, pk in probes):
                    continue
                if exact_divide(p, IntPoly((c, b, 1))) is not None:
                    quads.append((c, b, 1))
        quads.sort(key=lambda m: (abs(m[1]), m[1] < 0, abs(m[0]), m[0] < 0))
        found.extend(quads)
    return tuple(found)
