"""Polynomials with quaternion and dual quaternion coefficients.

The indeterminate ``t`` is central: it commutes with every coefficient, while
coefficients multiply non-commutatively.  Only right-sided notions are
provided (right evaluation, right division, right factors, gcrd).
"""
from __future__ import annotations

from numbers import Number

from ._backend import ZERO, exact, is_exact
from .quat_algebra import DualQuaternion, Quaternion, QZERO, qinv
from .scalar_poly import QuadraticFactor, RealPoly, poly_gcd

__all__ = [
    "InconsistencyError",
    "QuatPoly",
    "DualQuatPoly",
    "pmul",
    "right_eval",
    "right_divide",
    "gcrd",
    "mrpf",
    "norm_poly",
    "extract_right_factor",
    "reparameterize",
    "eval_at_infinity",
]


class InconsistencyError(ArithmeticError):
    """An identity guaranteed by theory failed to hold; indicates a bug or bad input."""


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


def _as_quaternion(c):
    if isinstance(c, Quaternion):
        return c
    return Quaternion.scalar(c)


class QuatPoly:
    """Element of H[t]; ``coeffs[k]`` is the quaternion coefficient of ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, QuatPoly):
            self.coeffs = coeffs.coeffs
            return
        if isinstance(coeffs, (Quaternion, Number)):
            coeffs = (coeffs,)
        self.coeffs = _trim([_as_quaternion(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs):
        p = cls.__new__(cls)
        p.coeffs = _trim(coeffs)
        return p

    @classmethod
    def from_real(cls, poly):
        return cls._raw([Quaternion._raw(c, ZERO, ZERO, ZERO) for c in RealPoly(poly).coeffs])

    @classmethod
    def from_components(cls, w=(), x=(), y=(), z=()):
        w, x, y, z = (RealPoly(c) for c in (w, x, y, z))
        n = max(len(p.coeffs) for p in (w, x, y, z))
        return cls._raw([Quaternion._raw(w[k], x[k], y[k], z[k]) for k in range(n)])

    @classmethod
    def linear(cls, root):
        """``t - root``."""
        return cls((-_as_quaternion(root), Quaternion.scalar(1)))

    # -- structure -------------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else QZERO

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else QZERO

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def components(self):
        """The four real component polynomials ``(w, x, y, z)``."""
        return tuple(RealPoly._raw([getattr(c, a) for c in self.coeffs]) for a in "wxyz")

    def is_real(self):
        return all(c.is_scalar() for c in self.coeffs)

    def is_vectorial(self):
        return all(not c.w for c in self.coeffs)

    def scalar_part(self):
        return RealPoly._raw([c.w for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, QuatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, RealPoly):
            return self == QuatPoly.from_real(other)
        if isinstance(other, (Quaternion, Number)):
            return self == QuatPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic --------------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, QuatPoly):
            return other
        if isinstance(other, RealPoly):
            return QuatPoly.from_real(other)
        if isinstance(other, Quaternion) or is_exact(other):
            return QuatPoly(other)
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
        return QuatPoly._raw(out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return QuatPoly._raw([-c for c in self.coeffs])

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
            return QuatPoly._raw([q * c for q in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return pmul(self, other)

    def __rmul__(self, other):
        if is_exact(other):
            return self * other
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return pmul(other, self)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out, base = QuatPoly(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self):
        return QuatPoly._raw([c.conj() for c in self.coeffs])

    def norm_poly(self):
        return norm_poly(self)

    def monic(self):
        """Left-multiply by the inverse of the leading coefficient."""
        if not self.coeffs:
            return self
        return QuatPoly(qinv(self.lc)) * self

    def derivative(self):
        return QuatPoly._raw([c * k for k, c in enumerate(self.coeffs)][1:])

    # -- evaluation --------------------------------------------------------------
    def __call__(self, t):
        """Evaluate at a scalar ``t`` (exact or complex)."""
        if isinstance(t, Quaternion):
            return right_eval(self, t)
        numeric = not is_exact(t)
        acc = QZERO.to_complex() if numeric else QZERO
        for c in reversed(self.coeffs):
            acc = acc * t + (c.to_complex() if numeric else c)
        return acc

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        return f"QuatPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(f"({c})")
            elif c == Quaternion.scalar(1):
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)


def pmul(a, b):
    """Product in H[t]: coefficient convolution with quaternion products."""
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return QuatPoly()
    out = [QZERO] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x.is_zero():
            continue
        for j, y in enumerate(bc):
            out[i + j] = out[i + j] + x * y
    return QuatPoly._raw(out)


def norm_poly(p):
    """``P * conj(P)`` as a real polynomial (sum of squared component polynomials)."""
    w, x, y, z = p.components()
    return w * w + x * x + y * y + z * z


def right_eval(p, q):
    """Right evaluation ``sum p_l * q**l`` at a quaternion ``q``."""
    if not isinstance(q, Quaternion):
        q = Quaternion.scalar(q)
    acc = QZERO if not q.numeric else QZERO.to_complex()
    power = Quaternion.scalar(1) if not q.numeric else Quaternion.scalar(1).to_complex()
    for c in p.coeffs:
        acc = acc + c * power
        power = power * q
    return acc


def right_divide(a, b):
    """Right division with remainder: ``a = quot * b + rem``, ``deg rem < deg b``."""
    a, b = QuatPoly(a), QuatPoly(b)
    if b.is_zero():
        raise ZeroDivisionError("right division by the zero polynomial")
    db = b.degree
    binv = qinv(b.lc)
    rem = list(a.coeffs)
    quot = [QZERO] * max(len(rem) - db, 0)
    bc = b.coeffs
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * binv
        quot[k] = c
        if not c.is_zero():
            for j, y in enumerate(bc):
                rem[k + j] = rem[k + j] - c * y
    return QuatPoly._raw(quot), QuatPoly._raw(rem[:db])


def gcrd(a, b):
    """Monic greatest common right divisor in H[t]."""
    a, b = QuatPoly(a), QuatPoly(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcrd undefined for two zero polynomials")
    while b:
        a, b = b, right_divide(a, b)[1].monic()
    return a.monic()


def mrpf(p):
    """Maximal real polynomial factor: monic gcd of the four component polynomials."""
    p = QuatPoly(p)
    if p.is_zero():
        raise ValueError("mrpf of the zero polynomial")
    return poly_gcd(*p.components())


def _as_real_quadratic(q):
    if isinstance(q, QuadraticFactor):
        return q.poly()
    q = RealPoly(q).monic()
    if q.degree != 2:
        raise ValueError("expected a quadratic polynomial")
    return q


def extract_right_factor(g, q):
    """Monic linear right factor ``t - r`` of ``g`` whose norm is the quadratic ``q``.

    ``r`` comes from the linear remainder ``a*t + b`` of ``g`` right-divided by
    ``q`` as ``r = -a^{-1} b``.  Requires ``q | norm(g)`` and ``mrpf(g) = 1``.
    """
    g = QuatPoly(g)
    qpoly = _as_real_quadratic(q)
    rem = right_divide(g, QuatPoly.from_real(qpoly))[1]
    a, b = rem[1], rem[0]
    if a.is_zero():
        raise InconsistencyError(
            "non-generic: q divides G componentwise is impossible since mrpf(G)=1; "
            "signal internal inconsistency")
    r = -(qinv(a) * b)
    factor = QuatPoly.linear(r)
    if not right_eval(g, r).is_zero() or norm_poly(factor) != qpoly:
        raise InconsistencyError(f"{q} does not yield a right factor of {g}")
    return factor


def _moebius(p, n, alpha, beta, gamma, delta):
    num, den = RealPoly((beta, alpha)), RealPoly((delta, gamma))
    out = QuatPoly()
    for ell, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        weight = num ** ell * den ** (n - ell)
        out = out + QuatPoly._raw([c * w for w in weight.coeffs])
    return out


def reparameterize(c, alpha, beta, gamma, delta):
    """Substitute ``t -> (alpha t + beta) / (gamma t + delta)`` and clear denominators."""
    alpha, beta, gamma, delta = (exact(v) for v in (alpha, beta, gamma, delta))
    if alpha * delta - beta * gamma == 0:
        raise ValueError("singular parameter transformation")
    if isinstance(c, QuatPoly):
        return _moebius(c, c.degree, alpha, beta, gamma, delta)
    n = c.degree
    return DualQuatPoly(_moebius(c.primal, n, alpha, beta, gamma, delta),
                        _moebius(c.dual, n, alpha, beta, gamma, delta))


def _to_qpoly(v):
    coerced = QuatPoly._coerce(v)
    return coerced if coerced is not None else QuatPoly(v)


class DualQuatPoly:
    """``P + eps*D`` with ``P, D`` in H[t]."""

    __slots__ = ("primal", "dual")

    def __init__(self, primal=(), dual=()):
        self.primal = _to_qpoly(primal)
        self.dual = _to_qpoly(dual)

    @property
    def degree(self):
        return max(self.primal.degree, self.dual.degree)

    def is_zero(self):
        return self.primal.is_zero() and self.dual.is_zero()

    def components(self):
        return self.primal.components() + self.dual.components()

    def __eq__(self, other):
        if not isinstance(other, DualQuatPoly):
            return NotImplemented
        return self.primal == other.primal and self.dual == other.dual

    def __hash__(self):
        return hash((self.primal, self.dual))

    def __add__(self, other):
        return DualQuatPoly(self.primal + other.primal, self.dual + other.dual)

    def __sub__(self, other):
        return DualQuatPoly(self.primal - other.primal, self.dual - other.dual)

    def __neg__(self):
        return DualQuatPoly(-self.primal, -self.dual)

    def __mul__(self, other):
        if isinstance(other, DualQuatPoly):
            return DualQuatPoly(self.primal * other.primal,
                                self.primal * other.dual + self.dual * other.primal)
        if isinstance(other, (RealPoly, Quaternion, QuatPoly)) or is_exact(other):
            return DualQuatPoly(self.primal * other, self.dual * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RealPoly, Quaternion, QuatPoly)) or is_exact(other):
            return DualQuatPoly(other * self.primal, other * self.dual)
        return NotImplemented

    def conj(self):
        return DualQuatPoly(self.primal.conj(), self.dual.conj())

    def study_defect(self):
        """The scalar polynomial ``P conj(D) + D conj(P)``."""
        p, d = self.primal, self.dual
        return (p * d.conj() + d * p.conj()).scalar_part()

    def __call__(self, t):
        return DualQuaternion(self.primal(t), self.dual(t))

    def to_json(self):
        return {"primal": self.primal.to_json(), "dual": self.dual.to_json()}

    def __repr__(self):
        return f"DualQuatPoly({self.primal} + eps*({self.dual}))"


def eval_at_infinity(c):
    """Dual quaternion of the degree-``n`` coefficients (value at ``t = oo``)."""
    n = c.degree
    return DualQuaternion(c.primal[n], c.dual[n])
