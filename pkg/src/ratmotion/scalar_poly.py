"""Univariate polynomials over the rationals.

:class:`RealPoly` is an immutable coefficient tuple (index = power of ``t``,
zero polynomial = empty tuple).  Besides ring arithmetic the module provides
the monic gcd, square-free decomposition and a factorization into real
linear and irreducible quadratic factors.

Factorization is exact up to the square-free level.  Square-free parts of
degree at most two are split exactly.  Higher degree parts are split from
numerical roots; candidate factors are snapped to nearby rationals and kept
only if exact trial division confirms them, everything else is reported as
an approximate (``exact=False``) factor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._backend import ONE, ZERO, Scalar, exact, fmt, is_exact

__all__ = [
    "RealPoly",
    "QuadraticFactor",
    "Factorization",
    "FactorizationError",
    "real_gcd",
    "squarefree_decomposition",
    "factor_real",
    "quadratic_roots",
]

SNAP_DENOMINATOR = 10**6


class FactorizationError(ArithmeticError):
    """Numerical root finding failed; ``part`` is the unsplit square-free factor."""

    def __init__(self, message, part):
        super().__init__(message)
        self.part = part


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class RealPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, RealPoly):
            self.coeffs = coeffs.coeffs
            return
        if is_exact(coeffs) or isinstance(coeffs, str):
            coeffs = (coeffs,)
        self.coeffs = _trim([exact(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already exact; only trimming needed
        p = cls.__new__(cls)
        p.coeffs = _trim(coeffs)
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls._raw([ZERO] * degree + [exact(c)])

    @classmethod
    def from_roots(cls, *roots):
        p = cls.constant(1)
        for r in roots:
            p = p * cls((-exact(r), 1))
        return p

    # -- basic properties --------------------------------------------------
    @property
    def degree(self):
        """Degree, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, RealPoly):
            return self.coeffs == other.coeffs
        if is_exact(other):
            return self.coeffs == RealPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RealPoly):
            return other
        if is_exact(other):
            return RealPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return RealPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RealPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if is_exact(other):
            c = exact(other)
            return RealPoly._raw([c * a for a in self.coeffs])
        if not isinstance(other, RealPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RealPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RealPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out, base = RealPoly.constant(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = ONE / other.lc
        quot = [ZERO] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RealPoly._raw(quot), RealPoly._raw(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """True if ``self`` divides ``other`` exactly."""
        return not (other % self)

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- calculus and evaluation --------------------------------------------
    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, z):
        z = complex(z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def derivative(self):
        return RealPoly._raw([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            return self
        return self * (ONE / self.lc)

    def to_float(self):
        return [float(c) for c in self.coeffs]

    # -- presentation ---------------------------------------------------------
    def to_json(self):
        return [fmt(c) for c in self.coeffs]

    def __repr__(self):
        return f"RealPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{fmt(mag)}*{mono}"
            else:
                body = fmt(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


T = RealPoly((0, 1))


def real_gcd(a, b):
    """Monic greatest common divisor of two rational polynomials."""
    a, b = RealPoly(a), RealPoly(b)
    if not a and not b:
        raise ValueError("gcd undefined for two zero polynomials")
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_gcd(*polys):
    """Monic gcd of several polynomials, zeros ignored."""
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise ValueError("gcd undefined for two zero polynomials")
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        if g.degree == 0:
            break
        g = real_gcd(g, p)
    return g


def squarefree_decomposition(p):
    """Yun's algorithm: return ``[(s_k, k), ...]`` with ``p = lc * prod s_k**k``.

    Every ``s_k`` is monic, square-free and of positive degree; the ``s_k`` are
    pairwise coprime.
    """
    p = RealPoly(p)
    if not p:
        raise ValueError("square-free decomposition of the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    out = []
    dp = p.derivative()
    a = real_gcd(p, dp)
    b = p // a
    d = dp // a - b.derivative()
    k = 1
    while b.degree > 0:
        a = real_gcd(b, d) if d else b.monic()
        if a.degree > 0:
            out.append((a, k))
        b = b // a
        d = (d // a) - b.derivative()
        k += 1
    return out


@dataclass(frozen=True)
class QuadraticFactor:
    """Monic ``t^2 + p*t + q`` with negative discriminant.

    ``exact`` is False when ``p`` and ``q`` are floating point approximations
    of irrational coefficients.
    """

    p: object
    q: object
    multiplicity: int = 1
    exact: bool = True

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.discriminant >= 0:
            raise ValueError("quadratic factor must have negative discriminant")

    @property
    def discriminant(self):
        return self.p * self.p - 4 * self.q

    def poly(self):
        if not self.exact:
            raise ValueError("approximate quadratic factor has no exact polynomial")
        return RealPoly((self.q, self.p, 1))

    def to_json(self):
        if self.exact:
            p, q = fmt(self.p), fmt(self.q)
        else:
            p, q = float(self.p), float(self.q)
        return {"p": p, "q": q, "multiplicity": self.multiplicity, "exact": self.exact}


@dataclass
class Factorization:
    leading: object
    linear: list = field(default_factory=list)       # (root, multiplicity)
    quadratics: list = field(default_factory=list)   # QuadraticFactor
    squarefree: list = field(default_factory=list)   # (RealPoly, multiplicity)

    def is_exact(self):
        return all(is_exact(r) for r, _ in self.linear) and all(q.exact for q in self.quadratics)

    def expand(self):
        """Re-expand an exact factorization."""
        if not self.is_exact():
            raise ValueError("factorization contains approximate factors")
        out = RealPoly.constant(self.leading)
        for r, k in self.linear:
            out = out * RealPoly((-r, 1)) ** k
        for q in self.quadratics:
            out = out * q.poly() ** q.multiplicity
        return out


def quadratic_roots(q):
    """Complex root pair ``(z, conj(z))`` of ``t^2 + p*t + q``, positive imaginary part first."""
    p, c = float(q.p), float(q.q)
    disc = 4 * c - p * p
    if disc <= 0:
        raise ValueError("quadratic has real roots")
    z = complex(-p / 2, math.sqrt(disc) / 2)
    return z, z.conjugate()


def _snap(x):
    return exact(Fraction(x).limit_denominator(SNAP_DENOMINATOR))


def _is_square(r):
    r = exact(r)
    if r < 0:
        return None
    num, den = int(r.numerator), int(r.denominator)
    sn, sd = math.isqrt(num), math.isqrt(den)
    if sn * sn == num and sd * sd == den:
        return Scalar(sn, sd)
    return None


def _split_small(s, k, fac):
    # exact splitting of a monic square-free part of degree 1 or 2
    if s.degree == 1:
        fac.linear.append((-s[0], k))
        return
    p, q = s[1], s[0]
    disc = p * p - 4 * q
    if disc < 0:
        fac.quadratics.append(QuadraticFactor(p, q, k))
        return
    root = _is_square(disc)
    if root is not None:
        fac.linear.append(((-p + root) / 2, k))
        fac.linear.append(((-p - root) / 2, k))
    else:
        sq = math.sqrt(float(disc))
        fac.linear.append(((-float(p) + sq) / 2, k))
        fac.linear.append(((-float(p) - sq) / 2, k))


def _numeric_roots(s):
    coeffs = s.to_float()[::-1]
    try:
        roots = np.roots(coeffs)
    except np.linalg.LinAlgError as exc:
        raise FactorizationError(f"root finding failed: {exc}", s) from exc
    if len(roots) != s.degree or not np.all(np.isfinite(roots)):
        raise FactorizationError("root finding did not converge", s)
    return roots


def _split_numeric(s, k, fac):
    rest = s
    tol = 1e-9 * max(1.0, max(abs(c) for c in s.to_float()))
    for z in _numeric_roots(s):
        if rest.degree <= 2:
            break
        if abs(z.imag) <= tol:
            cand = RealPoly((-_snap(z.real), 1))
        elif z.imag > 0:
            cand = RealPoly((_snap(abs(z) ** 2), _snap(-2 * z.real), 1))
        else:
            continue
        quot, rem = divmod(rest, cand)
        if not rem:
            _split_small(cand, k, fac)
            rest = quot
    if rest.degree <= 0:
        return
    if rest.degree <= 2:
        _split_small(rest, k, fac)
        return
    # whatever is left has no rational-looking factors: report approximately
    for z in _numeric_roots(rest):
        if abs(z.imag) <= tol:
            fac.linear.append((float(z.real), k))
        elif z.imag > 0:
            fac.quadratics.append(
                QuadraticFactor(float(-2.0 * z.real), float(abs(z) ** 2), k, exact=False))


def factor_real(p):
    """Factor ``p`` into leading coefficient, real linear and quadratic factors."""
    p = RealPoly(p)
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    fac = Factorization(leading=p.lc)
    fac.squarefree = squarefree_decomposition(p)
    for s, k in fac.squarefree:
        if s.degree <= 2:
            _split_small(s, k, fac)
        else:
            _split_numeric(s, k, fac)
    fac.linear.sort(key=lambda rk: (rk[1], float(rk[0])))
    fac.quadratics.sort(key=lambda q: (q.multiplicity, float(q.q), float(q.p)))
    return fac
