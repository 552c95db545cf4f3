from fractions import Fraction

import pytest

from helpers import T, rand_linear_motion, rand_motion, rng_for
from ratmotion.construct import cardan, darboux_example, oldham
from ratmotion.motion import (
    MotionPolynomial,
    NullNorm,
    StudyViolation,
    content,
    generic_degree_oracle,
    inverse,
    make_monic,
    normalize,
    random_point,
    reduce,
    trajectory,
    trajectory_degree,
    validate,
)
from ratmotion.quat_algebra import QI, QJ, QK, ProjectivePoint3
from ratmotion.quat_poly import DualQuatPoly, QuatPoly
from ratmotion.scalar_poly import RealPoly

CARDAN = DualQuatPoly((T * T + 1) * (T - QK), T * QI + QJ)
ROTATION = DualQuatPoly(T - QK, QuatPoly(QJ))
IDENTITY = DualQuatPoly(QuatPoly(1))


def _projectively_equal(g, h):
    a = g.primal.components + g.dual.components
    b = h.primal.components + h.dual.components
    return all(x * y2 == x2 * y for x, y in zip(a, b) for x2, y2 in zip(a, b))


def test_validate_examples():
    assert validate(CARDAN).poly == CARDAN
    with pytest.raises(StudyViolation) as err:
        validate(DualQuatPoly(T - QK, QuatPoly(1)))
    assert err.value.defect == RealPoly((0, 2))
    with pytest.raises(NullNorm):
        validate(DualQuatPoly(QuatPoly(), QuatPoly(QI)))


def test_reduce_examples():
    factor = DualQuatPoly(QuatPoly.from_real(RealPoly((1, 0, 1))))
    assert reduce(factor * ROTATION).poly == ROTATION
    assert reduce(ROTATION).poly == ROTATION
    assert reduce(CARDAN).poly == CARDAN
    assert content(CARDAN) == RealPoly((1,))


def test_make_monic_examples():
    assert make_monic(DualQuatPoly((T - QK) * 2)).poly == DualQuatPoly(T - QK)
    assert make_monic(DualQuatPoly(QI * T + QJ)).poly == DualQuatPoly(T - QK)


def test_make_monic_reparameterizes_zero_divisor_lead():
    # leading term eps*i*t: primal degree 0 < n = 1
    c = validate(DualQuatPoly(QuatPoly(1), QI * T))
    out = make_monic(c)
    assert out.is_monic
    assert out.primal.degree == out.n


def test_reduce_and_monic_preserve_curve():
    for seed in range(10):
        rng = rng_for("normal", seed)
        scale = DualQuatPoly(QuatPoly.from_real(RealPoly((rng.randint(1, 5), 0, 1))))
        c = validate(DualQuatPoly(QuatPoly(QJ + 2)) * scale * rand_motion(rng, 2))
        out, steps = normalize(c)
        assert out.is_reduced and out.is_monic and steps
        if out.primal.degree == c.primal.degree:
            for t in range(-2, 3):
                assert _projectively_equal(out(Fraction(t)), c(Fraction(t)))


def test_trajectory_of_identity_is_constant():
    pt = ProjectivePoint3(1, 2, -3, 5)
    traj = trajectory(IDENTITY, pt)
    assert traj.degree == 0
    assert trajectory_degree(IDENTITY, pt) == 0


def test_rotation_traces_a_circle():
    traj = trajectory(DualQuatPoly(T - QK), ProjectivePoint3(1, 1, 0, 0))
    assert traj.coords[0] == RealPoly((1, 0, 1))
    assert traj.degree == 2
    for t in range(-3, 4):
        x, y, z = traj.affine(t)
        assert x * x + y * y == 1 and z == 0


def test_named_trajectory_degrees():
    pt = random_point(0, 0)
    assert trajectory_degree(CARDAN, pt) == 2
    assert trajectory_degree(oldham(), pt) == 4


def test_inverse():
    c = validate(CARDAN)
    assert inverse(inverse(c)) == c
    translation = DualQuatPoly(QuatPoly(1), QuatPoly(QI + QJ))
    assert inverse(translation).poly == DualQuatPoly(QuatPoly(1), QuatPoly(-QI - QJ))
    assert normalize(inverse(cardan()))[0] == oldham()


def test_oracle_examples():
    assert generic_degree_oracle(CARDAN, 8) == 2
    assert generic_degree_oracle(darboux_example(), 8) == 2
    assert generic_degree_oracle(inverse(darboux_example()), 8) == 4


def test_random_points_are_reproducible():
    assert random_point(3, 1) == random_point(3, 1)
    assert random_point(3, 1) != random_point(3, 2)
    for v in random_point(7, 0).coords:
        assert abs(v) <= 97


def test_products_of_motions_are_motions():
    for seed in range(15):
        rng = rng_for("product", seed)
        a, b = validate(rand_motion(rng, 2)), validate(rand_linear_motion(rng))
        assert isinstance(a * b, MotionPolynomial)


def test_trajectory_degree_bounded_by_twice_n():
    for seed in range(10):
        c = validate(rand_motion(rng_for("bound", seed), 3))
        assert trajectory_degree(c, random_point(seed, 0)) <= 2 * c.n
