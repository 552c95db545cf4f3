"""Seeded generators of random exact test data shared by the test modules."""
import random
from fractions import Fraction

from hypothesis import strategies as st

from ratmotion.quat_algebra import Quaternion
from ratmotion.quat_poly import DualQuatPoly, QuatPoly
from ratmotion.scalar_poly import RealPoly

T = QuatPoly((0, 1))


def rng_for(tag, seed):
    return random.Random(f"tests:{tag}:{seed}")


def rand_rational(rng, bound=5):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_quat(rng, bound=5):
    return Quaternion(*(rand_rational(rng, bound) for _ in range(4)))


def rand_vector(rng, bound=5):
    while True:
        v = Quaternion(0, *(rand_rational(rng, bound) for _ in range(3)))
        if not v.is_zero():
            return v


def rand_qpoly(rng, degree, bound=5, monic=False):
    coeffs = [rand_quat(rng, bound) for _ in range(degree)]
    lead = Quaternion(1) if monic else rand_quat(rng, bound)
    while lead.is_zero():
        lead = rand_quat(rng, bound)
    return QuatPoly(coeffs + [lead])


def rand_real_poly(rng, degree, bound=5):
    coeffs = [rand_rational(rng, bound) for _ in range(degree + 1)]
    if not coeffs[-1]:
        coeffs[-1] = Fraction(1)
    return RealPoly(coeffs)


def rand_rotation_factor(rng):
    """``t - h`` with ``h`` a quaternion having a nonzero vector part (irreducible norm)."""
    return T - (rand_vector(rng) + Quaternion(rand_rational(rng)))


def rand_linear_motion(rng):
    """``t - (p + eps*d)`` with ``d`` perpendicular to ``vec(p)``, so the Study condition holds."""
    p = rand_vector(rng) + Quaternion(rand_rational(rng))
    w = rand_vector(rng)
    # d = vec(p) x w is vectorial and orthogonal to vec(p)
    v = Quaternion(0, p.x, p.y, p.z)
    cross = (v * w - w * v) / 2
    return DualQuatPoly(T - p, QuatPoly(-cross))


def rand_motion(rng, factors):
    c = rand_linear_motion(rng)
    for _ in range(factors - 1):
        c = c * rand_linear_motion(rng)
    return c


# -- hypothesis strategies --------------------------------------------------------

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)
nonzero_quaternions = quaternions.filter(lambda q: not q.is_zero())


def qpolys(max_degree=3):
    return st.lists(quaternions, max_size=max_degree + 1).map(QuatPoly)


def nonzero_qpolys(max_degree=3):
    return st.builds(lambda body, lead: QuatPoly(body + [lead]),
                     st.lists(quaternions, max_size=max_degree), nonzero_quaternions)


def real_polys(max_degree=4):
    return st.lists(rationals, max_size=max_degree + 1).map(RealPoly)
