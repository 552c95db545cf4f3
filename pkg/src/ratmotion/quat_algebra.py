"""Quaternions over exact rationals or complex doubles, and dual quaternions.

A :class:`Quaternion` holds four coefficients ``w + x*i + y*j + z*k``.  The
coefficients are either all exact rationals (Hamiltonian quaternions) or all
Python ``complex`` (complex quaternions, used for numeric ruling checks).
Mixing the two promotes to complex.

:class:`DualQuaternion` is ``primal + eps*dual`` with ``eps**2 = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

from ._backend import ONE, exact, fmt, is_exact

__all__ = [
    "Quaternion",
    "DualNumber",
    "DualQuaternion",
    "ProjectivePoint3",
    "ZeroDivisorError",
    "qmul",
    "qinv",
    "is_zero_divisor",
    "act_on_point",
    "study_defect",
    "QONE",
    "QI",
    "QJ",
    "QK",
]

NUMERIC_TOL = 1e-12


class ZeroDivisorError(ZeroDivisionError):
    """Raised when inverting a zero divisor."""


def _is_numeric(v):
    return isinstance(v, Number) and not is_exact(v)


class Quaternion:
    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        comps = (w, x, y, z)
        if any(_is_numeric(c) for c in comps):
            comps = tuple(complex(float(c)) if is_exact(c) else complex(c) for c in comps)
        else:
            comps = tuple(exact(c) for c in comps)
        self.w, self.x, self.y, self.z = comps

    @classmethod
    def _raw(cls, w, x, y, z):
        q = cls.__new__(cls)
        q.w, q.x, q.y, q.z = w, x, y, z
        return q

    @classmethod
    def scalar(cls, s):
        return cls(s, 0, 0, 0)

    # -- structure -----------------------------------------------------------
    @property
    def components(self):
        return (self.w, self.x, self.y, self.z)

    @property
    def numeric(self):
        return isinstance(self.w, complex)

    def to_complex(self):
        if self.numeric:
            return self
        return Quaternion._raw(*(complex(float(c)) for c in self.components))

    def is_zero(self):
        return not (self.w or self.x or self.y or self.z)

    def __bool__(self):
        return not self.is_zero()

    def is_scalar(self):
        return not (self.x or self.y or self.z)

    def scalar_part(self):
        return self.w

    def vector_part(self):
        return Quaternion._raw(self.w * 0, self.x, self.y, self.z)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.components == other.components
        if isinstance(other, Number):
            return self.components == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def _promote(self, other):
        # bring self and other to a common scalar kind
        if self.numeric == other.numeric:
            return self, other
        return self.to_complex(), other.to_complex()

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, Number):
                other = Quaternion.scalar(other)
            else:
                return NotImplemented
        a, b = self._promote(other)
        return Quaternion._raw(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion._raw(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if isinstance(other, Number):
            other = Quaternion.scalar(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, s):
        if self.numeric or _is_numeric(s):
            q = self.to_complex()
            s = complex(s) if not is_exact(s) else complex(float(s))
        else:
            q, s = self, exact(s)
        return Quaternion._raw(q.w * s, q.x * s, q.y * s, q.z * s)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        if isinstance(other, Number):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self._scale(other)
        return NotImplemented

    def __truediv__(self, s):
        if isinstance(s, Number):
            if self.numeric or _is_numeric(s):
                return self._scale(1 / complex(s if not is_exact(s) else float(s)))
            return self._scale(ONE / exact(s))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Quaternion.scalar(1) if not self.numeric else Quaternion.scalar(1).to_complex()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self):
        return Quaternion._raw(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        """``q * conj(q)``: a scalar (not a metric norm)."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self):
        return qinv(self)

    def max_abs(self):
        return max(abs(complex(c)) for c in self.components)

    def normalized(self):
        """Numeric copy scaled so the largest-modulus component is exactly 1."""
        q = self.to_complex()
        comps = q.components
        big = max(comps, key=abs)
        if big == 0:
            return q
        return Quaternion._raw(*(c / big for c in comps))

    # -- presentation ----------------------------------------------------------
    def __repr__(self):
        return f"Quaternion({self})"

    def __str__(self):
        if self.numeric:
            return "({} + {}*i + {}*j + {}*k)".format(*self.components)
        parts = []
        for c, u in zip(self.components, ("", "i", "j", "k")):
            if not c:
                continue
            mag = fmt(abs(c))
            body = u if (u and mag == "1") else (f"{mag}*{u}" if u else mag)
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def to_json(self):
        if self.numeric:
            return [[c.real, c.imag] for c in self.components]
        return [fmt(c) for c in self.components]


def qmul(a, b):
    """Hamilton product with ``i^2 = j^2 = k^2 = ijk = -1``."""
    a, b = a._promote(b)
    aw, ax, ay, az = a.w, a.x, a.y, a.z
    bw, bx, by, bz = b.w, b.x, b.y, b.z
    return Quaternion._raw(
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def _norm_vanishes(q):
    n = q.norm()
    if q.numeric:
        return abs(n) <= NUMERIC_TOL * max(q.max_abs() ** 2, 1e-300)
    return n == 0


def is_zero_divisor(a):
    """True if ``a`` is a zero divisor.

    Complex quaternions: the norm vanishes (``[a]`` lies on the null quadric).
    Dual quaternions: the primal part is a zero divisor (for Hamiltonian
    coefficients this means the primal part is zero).
    """
    if isinstance(a, DualQuaternion):
        if a.is_zero():
            raise ValueError("zero is excluded")
        return a.primal.is_zero() or _norm_vanishes(a.primal)
    if a.is_zero():
        raise ValueError("zero is excluded")
    return _norm_vanishes(a)


def qinv(a):
    """Inverse ``conj(a) / norm(a)``; raises :class:`ZeroDivisorError` for zero divisors."""
    if isinstance(a, DualQuaternion):
        return a.inverse()
    if a.is_zero() or _norm_vanishes(a):
        raise ZeroDivisorError("not invertible")
    return a.conj() / a.norm()


QONE = Quaternion(1)
QI = Quaternion(0, 1)
QJ = Quaternion(0, 0, 1)
QK = Quaternion(0, 0, 0, 1)
QZERO = Quaternion()


@dataclass(frozen=True)
class DualNumber:
    """``real + eps*dual`` with ``eps**2 = 0``."""

    real: object
    dual: object

    def __mul__(self, other):
        if not isinstance(other, DualNumber):
            return NotImplemented
        return DualNumber(self.real * other.real, self.real * other.dual + self.dual * other.real)

    def __add__(self, other):
        return DualNumber(self.real + other.real, self.dual + other.dual)


class DualQuaternion:
    __slots__ = ("primal", "dual")

    def __init__(self, primal=QZERO, dual=QZERO):
        if not isinstance(primal, Quaternion):
            primal = Quaternion.scalar(primal)
        if not isinstance(dual, Quaternion):
            dual = Quaternion.scalar(dual)
        self.primal, self.dual = primal, dual

    def __eq__(self, other):
        if not isinstance(other, DualQuaternion):
            return NotImplemented
        return self.primal == other.primal and self.dual == other.dual

    def __hash__(self):
        return hash((self.primal, self.dual))

    def is_zero(self):
        return self.primal.is_zero() and self.dual.is_zero()

    def __add__(self, other):
        return DualQuaternion(self.primal + other.primal, self.dual + other.dual)

    def __sub__(self, other):
        return DualQuaternion(self.primal - other.primal, self.dual - other.dual)

    def __neg__(self):
        return DualQuaternion(-self.primal, -self.dual)

    def __mul__(self, other):
        if isinstance(other, DualQuaternion):
            return DualQuaternion(self.primal * other.primal,
                                  self.primal * other.dual + self.dual * other.primal)
        if isinstance(other, Number):
            return DualQuaternion(self.primal * other, self.dual * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return DualQuaternion(other * self.primal, other * self.dual)
        return NotImplemented

    def conj(self):
        return DualQuaternion(self.primal.conj(), self.dual.conj())

    def norm(self):
        """``g * conj(g)`` as a dual number; its dual part vanishes iff the Study condition holds."""
        p, d = self.primal, self.dual
        return DualNumber(p.norm(), (p * d.conj() + d * p.conj()).w)

    def inverse(self):
        if is_zero_divisor(self):
            raise ZeroDivisorError("not invertible")
        pinv = qinv(self.primal)
        return DualQuaternion(pinv, -(pinv * self.dual * pinv))

    def __repr__(self):
        return f"DualQuaternion({self.primal} + eps*({self.dual}))"


def study_defect(g):
    """``p*conj(d) + d*conj(p)``; zero iff ``g`` lies on the Study quadric."""
    p, d = g.primal, g.dual
    return p * d.conj() + d * p.conj()


class ProjectivePoint3:
    """Point ``[x0 : x1 : x2 : x3]`` of real projective 3-space.

    Stored with the first nonzero coordinate scaled to one, so equality is
    plain tuple equality.
    """

    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], Number):
            coords = tuple(coords[0])
        if len(coords) != 4:
            raise ValueError("a projective point needs four coordinates")
        coords = [exact(c) for c in coords]
        pivot = next((c for c in coords if c), None)
        if pivot is None:
            raise ValueError("all coordinates vanish")
        self.coords = tuple(c / pivot for c in coords)

    @classmethod
    def affine(cls, x, y, z):
        return cls(1, x, y, z)

    def as_quaternion(self):
        return Quaternion(*self.coords)

    def dehomogenize(self):
        x0 = self.coords[0]
        if not x0:
            raise ZeroDivisionError("point at infinity")
        return tuple(c / x0 for c in self.coords[1:])

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint3):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "[" + ":".join(fmt(c) for c in self.coords) + "]"


def act_on_point(g, pt):
    """Image of ``pt`` under the displacement ``[g]``.

    ``[x0 + x] -> [p (x0 + x) conj(p) + 2 x0 p conj(d)]``.
    """
    p, d = g.primal, g.dual
    if p.is_zero() or _norm_vanishes(p):
        raise ZeroDivisorError("singular displacement")
    x = pt.as_quaternion()
    img = p * x * p.conj() + (2 * pt.coords[0]) * (p * d.conj())
    return ProjectivePoint3(img.components)
