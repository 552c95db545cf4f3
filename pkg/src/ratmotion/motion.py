"""Motion polynomials, their normal forms and trajectories."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from ._backend import exact
from .quat_algebra import DualQuaternion, ProjectivePoint3, Quaternion
from .quat_poly import DualQuatPoly, QuatPoly, norm_poly, reparameterize
from .scalar_poly import poly_gcd

__all__ = [
    "MotionError",
    "StudyViolation",
    "NullNorm",
    "MotionPolynomial",
    "Trajectory",
    "validate",
    "reduce",
    "make_monic",
    "normalize",
    "trajectory",
    "trajectory_degree",
    "inverse",
    "random_point",
    "generic_degree_oracle",
]

SAMPLE_BOUND = 97


class MotionError(ValueError):
    """Input is not a motion polynomial."""


class StudyViolation(MotionError):
    def __init__(self, defect):
        super().__init__(f"Study condition violated: P*conj(D) + D*conj(P) = {defect}")
        self.defect = defect


class NullNorm(MotionError):
    def __init__(self):
        super().__init__("norm polynomial of the primal part vanishes")


class MotionPolynomial:
    """A validated motion polynomial ``P + eps*D``.

    Construction checks the polynomial Study condition and that ``P`` is not
    zero.  Instances are immutable.
    """

    __slots__ = ("poly", "_reduced", "_monic")

    def __init__(self, poly):
        if isinstance(poly, MotionPolynomial):
            poly = poly.poly
        if not isinstance(poly, DualQuatPoly):
            poly = DualQuatPoly(poly)
        if poly.primal.is_zero():
            raise NullNorm()
        defect = poly.study_defect()
        if defect:
            raise StudyViolation(defect)
        self.poly = poly
        self._reduced = None
        self._monic = None

    @property
    def primal(self):
        return self.poly.primal

    @property
    def dual(self):
        return self.poly.dual

    @property
    def n(self):
        return self.poly.degree

    @property
    def is_reduced(self):
        if self._reduced is None:
            self._reduced = content(self).degree == 0
        return self._reduced

    @property
    def is_monic(self):
        if self._monic is None:
            n = self.n
            self._monic = (self.primal.degree == n and self.primal[n] == Quaternion.scalar(1)
                           and self.dual[n].is_zero())
        return self._monic

    def __eq__(self, other):
        if not isinstance(other, MotionPolynomial):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __mul__(self, other):
        if isinstance(other, MotionPolynomial):
            return MotionPolynomial(self.poly * other.poly)
        return NotImplemented

    def __call__(self, t):
        return self.poly(t)

    def __repr__(self):
        return f"MotionPolynomial({self.primal} + eps*({self.dual}))"


def validate(c):
    """Return ``c`` as a :class:`MotionPolynomial` or raise StudyViolation / NullNorm."""
    if isinstance(c, MotionPolynomial):
        return c
    return MotionPolynomial(c)


def content(c):
    """Monic gcd of the eight real component polynomials."""
    c = c.poly if isinstance(c, MotionPolynomial) else c
    return poly_gcd(*c.components())


def reduce(c):
    """Divide out the real content so the eight components are coprime."""
    c = validate(c)
    g = content(c)
    if g.degree == 0:
        out = c
    else:
        p = QuatPoly.from_components(*(comp // g for comp in c.primal.components()))
        d = QuatPoly.from_components(*(comp // g for comp in c.dual.components()))
        out = MotionPolynomial(DualQuatPoly(p, d))
    out._reduced = True
    return out


def _left_multiply(h, c):
    return DualQuatPoly(QuatPoly(h.primal), QuatPoly(h.dual)) * c


def _moebius_candidates():
    # t -> (k t - 1) / t maps t = oo to k; try k = 0, 1, -1, 2, -2, ...
    yield 0
    for k in count(1):
        yield k
        yield -k


def _monicize(c, steps):
    poly = c.poly
    n = poly.degree
    if poly.primal.degree < n:
        for k in _moebius_candidates():
            if not poly.primal(exact(k)).is_zero():
                break
        poly = reparameterize(poly, k, -1, 1, 0)
        steps.append(f"reparameterize: t -> ({k}*t - 1)/t (leading coefficient was a zero divisor)")
    lead = DualQuaternion(poly.primal[n], poly.dual[n])
    if not (lead.primal == Quaternion.scalar(1) and lead.dual.is_zero()):
        poly = _left_multiply(lead.inverse(), poly)
        steps.append(f"left-multiply by inverse of leading coefficient {lead.primal} + eps*({lead.dual})")
    if poly is c.poly:
        c._monic = True
        return c
    out = MotionPolynomial(poly)
    out._reduced = c._reduced
    out._monic = True
    return out


def make_monic(c):
    """Monic representative; left-multiplies by the inverse leading coefficient.

    When the leading coefficient is a zero divisor the parameter is first
    changed by a fractional linear map so that ``t = oo`` corresponds to a
    regular parameter value.
    """
    return _monicize(validate(c), [])


def normalize(c):
    """Reduced monic normal form of ``c`` and a list of the steps applied."""
    c = validate(c)
    steps = []
    if not c.is_reduced:
        steps.append(f"reduce: divided by real content {content(c)}")
        c = reduce(c)
    return _monicize(c, steps), steps


def inverse(c):
    """Inverse motion: coefficient-wise conjugation of both parts."""
    c = validate(c)
    out = MotionPolynomial(c.poly.conj())
    out._reduced = c._reduced
    return out


@dataclass(frozen=True)
class Trajectory:
    """Homogeneous coordinate polynomials of the path of ``point``."""

    coords: tuple
    point: ProjectivePoint3

    @property
    def degree(self):
        return max(p.degree for p in self.coords)

    def content(self):
        return poly_gcd(*self.coords)

    def reduced(self):
        g = self.content()
        if g.degree == 0:
            return self
        return Trajectory(tuple(p // g for p in self.coords), self.point)

    def __call__(self, t):
        """Homogeneous coordinates at parameter ``t`` (exact)."""
        t = exact(t)
        return tuple(p(t) for p in self.coords)

    def affine(self, t):
        x0, x1, x2, x3 = self(t)
        if not x0:
            raise ZeroDivisionError("trajectory point at infinity")
        return x1 / x0, x2 / x0, x3 / x0


def trajectory(c, pt):
    """``x0*norm(P) + P x conj(P) + 2 x0 P conj(D)`` as four real polynomials."""
    c = validate(c)
    if not isinstance(pt, ProjectivePoint3):
        pt = ProjectivePoint3(*pt)
    x0 = pt.coords[0]
    x = Quaternion(0, *pt.coords[1:])
    p, d = c.primal, c.dual
    vec = p * x * p.conj() + (p * d.conj()) * (2 * x0)
    w, x1, x2, x3 = vec.components()
    return Trajectory((norm_poly(p) * x0 + w, x1, x2, x3), pt)


def trajectory_degree(c, pt):
    """Degree of the trajectory of ``pt`` after removing its real content."""
    return trajectory(c, pt).reduced().degree


def _sample_rational(rng):
    values = [v for v in range(-SAMPLE_BOUND, SAMPLE_BOUND + 1) if v]
    return Fraction(rng.choice(values), rng.choice(values))


def random_point(seed, trial):
    """Pseudorandom rational point derived from ``(seed, trial)`` only."""
    rng = random.Random(f"ratmotion:{seed}:{trial}")
    return ProjectivePoint3(*(_sample_rational(rng) for _ in range(4)))


def generic_degree_oracle(c, trials=8, seed=0):
    """Maximal trajectory degree over ``trials`` pseudorandom rational points."""
    if trials < 1:
        raise ValueError("trials must be positive")
    c = validate(c)
    return max(trajectory_degree(c, random_point(seed, k)) for k in range(trials))
