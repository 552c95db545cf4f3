"""End-to-end acceptance checks, one group of tests per numbered criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per criterion
in the terminal summary.
"""
import random
from fractions import Fraction

import pytest
import sympy as sp

from helpers import T, rand_motion, rand_qpoly, rand_quat, rand_rotation_factor, rng_for
from ratmotion.analysis import (
    algebraic_certificate,
    geometric_certificate,
    predicted_degree,
    ruling_swap_check,
)
from ratmotion.cli import main
from ratmotion.construct import darboux_example, exceptional, vertical_darboux, wunderlich_example
from ratmotion.expr import BinOp, Neg, Num, Pow, Sym, evaluate, format_motion, parse_expr, parse_motion, to_source
from ratmotion.motion import generic_degree_oracle, inverse, validate
from ratmotion.quat_algebra import QK
from ratmotion.quat_poly import QuatPoly, mrpf, norm_poly, right_divide, right_eval
from ratmotion.scalar_poly import RealPoly

CARDAN_SRC = "(t^2+1)*(t-k) + eps*(t*i+j)"
SEEDS = range(50)
CASES = 200

# every report produced here, for the evenness criterion
ANALYZED = []


def analyze(c, **kw):
    report = predicted_degree(c, **kw)
    ANALYZED.append(report)
    return report


def signature(report):
    return report.n, report.m, report.e, report.predicted, report.oracle_degree


@pytest.fixture(scope="module")
def cardan():
    return validate(parse_motion(CARDAN_SRC))


# -- 1-5: named motions ---------------------------------------------------------

@pytest.mark.criterion(1, "Cardan: n=3 m=2 e=2 predicted=2 oracle=2")
def test_ac01_cardan(cardan):
    assert signature(analyze(cardan, oracle_trials=8)) == (3, 2, 2, 2, 2)


@pytest.mark.criterion(2, "Oldham: m=2 e=0 predicted=4 oracle=4")
def test_ac02_oldham(cardan):
    r = analyze(inverse(cardan), oracle_trials=8)
    assert (r.m, r.e, r.predicted, r.oracle_degree) == (2, 0, 4, 4)


@pytest.mark.criterion(3, "Darboux predicted=oracle=2, inverse predicted=oracle=4")
def test_ac03_darboux():
    r = analyze(darboux_example(), oracle_trials=8)
    assert (r.predicted, r.oracle_degree) == (2, 2)
    r = analyze(inverse(darboux_example()), oracle_trials=8)
    assert (r.predicted, r.oracle_degree) == (4, 4)


@pytest.mark.criterion(4, "vertical Darboux: motion and inverse e=2 predicted=2, coincident")
def test_ac04_vertical_darboux():
    c = vertical_darboux()
    for motion in (c, inverse(c)):
        r = analyze(motion, oracle_trials=8)
        assert (r.e, r.predicted, r.oracle_degree) == (2, 2, 2)
        assert r.certificates and all(cert.coincident for cert in r.certificates)


@pytest.mark.criterion(5, "Wunderlich: n=4 m=3 e=2 predicted=3 oracle=3")
def test_ac05_wunderlich():
    assert signature(analyze(wunderlich_example(), oracle_trials=8)) == (4, 3, 2, 3, 3)


# -- 6-8: constructed exceptional reductions ------------------------------------

def exceptional_instance(seed):
    rng = rng_for("exceptional", seed)
    seed_motion = rand_motion(rng, rng.choice((1, 2)))
    deg_h = rng.choice((1, 2))
    h = rand_rotation_factor(rng)
    for _ in range(deg_h - 1):
        h = h * rand_rotation_factor(rng)
    return exceptional(seed_motion.primal, seed_motion.dual, h), h


@pytest.fixture(scope="module")
def exceptional_reports():
    out = []
    for seed in SEEDS:
        motion, h = exceptional_instance(seed)
        out.append((motion, h, analyze(motion, oracle_trials=8, check=False)))
    return out


@pytest.mark.criterion(6, "exceptional construction round trip on 50 seeds")
def test_ac06_exceptional_round_trip(exceptional_reports):
    for motion, h, report in exceptional_reports:
        factor = algebraic_certificate(motion)
        assert factor is not None
        q = QuatPoly.from_components(*(comp // report.c for comp in motion.primal.components()))
        assert right_divide(q, factor)[1].is_zero()
        assert right_divide(motion.dual, factor)[1].is_zero()
        assert norm_poly(factor).divides(report.c)
        assert report.e >= 2 * h.degree
        assert report.oracle_degree == report.predicted


@pytest.mark.criterion(7, "ruling certificates: sum 2*mu = e, residual < 1e-8, swap check")
def test_ac07_ruling_certificates(exceptional_reports):
    named = [darboux_example(), vertical_darboux(), wunderlich_example(), validate(parse_motion(CARDAN_SRC))]
    motions = [m for m, _, _ in exceptional_reports] + named
    for motion in motions:
        report = analyze(motion)
        certs = geometric_certificate(motion)
        assert sum(2 * cert.multiplicity for cert in certs) == report.e
        assert all(cert.left_ruling_residual < 1e-8 for cert in certs)
        if certs:
            assert ruling_swap_check(motion)


# -- 9: no reduction means full degree -------------------------------------------

@pytest.mark.criterion(9, "25 random motions with m=0 have oracle degree 2n")
def test_ac09_full_degree():
    for seed in range(25):
        rng = rng_for("full-degree", seed)
        motion = validate(rand_motion(rng, rng.choice((2, 3))))
        assert mrpf(motion.primal).degree == 0
        report = analyze(motion)
        assert report.m == 0
        assert generic_degree_oracle(motion, 8, seed) == 2 * motion.n


@pytest.mark.criterion(8, "e is even for every analyzed motion")
def test_ac08_evenness(exceptional_reports):
    # depends on the reports gathered by the other criteria in this module
    for motion in (darboux_example(), wunderlich_example(), vertical_darboux()):
        analyze(inverse(motion))
    assert len(ANALYZED) > 50
    assert all(r.e % 2 == 0 for r in ANALYZED)


# -- 10: algebra identities -------------------------------------------------------

@pytest.mark.criterion(10, "algebra suite, 200 randomized cases per identity")
def test_ac10_conj_is_anti_homomorphism():
    for k in range(CASES):
        rng = rng_for("conj", k)
        a, b = rand_qpoly(rng, rng.randint(0, 3)), rand_qpoly(rng, rng.randint(0, 3))
        assert (a * b).conj() == b.conj() * a.conj()
        x, y = rand_quat(rng), rand_quat(rng)
        assert (x * y).conj() == y.conj() * x.conj()


@pytest.mark.criterion(10, "algebra suite, 200 randomized cases per identity")
def test_ac10_norm_is_multiplicative():
    for k in range(CASES):
        rng = rng_for("norm", k)
        a, b = rand_qpoly(rng, rng.randint(0, 3)), rand_qpoly(rng, rng.randint(0, 3))
        assert norm_poly(a * b) == norm_poly(a) * norm_poly(b)
        x, y = rand_quat(rng), rand_quat(rng)
        assert (x * y).norm() == x.norm() * y.norm()


@pytest.mark.criterion(10, "algebra suite, 200 randomized cases per identity")
def test_ac10_right_division_unique_and_round_trip():
    for k in range(CASES):
        rng = rng_for("division", k)
        b = rand_qpoly(rng, rng.randint(1, 3))
        quot = rand_qpoly(rng, rng.randint(0, 3))
        rem = QuatPoly([rand_quat(rng) for _ in range(b.degree)])
        a = quot * b + rem
        assert right_divide(a, b) == (quot, rem)
        other = rand_qpoly(rng, rng.randint(0, 5))
        q2, r2 = right_divide(other, b)
        assert q2 * b + r2 == other and r2.degree < b.degree


@pytest.mark.criterion(10, "algebra suite, 200 randomized cases per identity")
def test_ac10_right_zero_iff_right_factor():
    for k in range(CASES):
        rng = rng_for("right-zero", k)
        f, r = rand_qpoly(rng, rng.randint(0, 3)), rand_quat(rng)
        assert right_eval(f * (T - r), r).is_zero()
        s = rand_quat(rng)
        rem = right_divide(f, T - s)[1]
        assert rem == QuatPoly(right_eval(f, s))
        assert rem.is_zero() == right_eval(f, s).is_zero()


@pytest.mark.criterion(10, "algebra suite, 200 randomized cases per identity")
def test_ac10_mrpf_of_conjugate():
    for k in range(CASES):
        rng = rng_for("mrpf", k)
        real = RealPoly([Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))] + [Fraction(1)])
        p = rand_qpoly(rng, rng.randint(0, 3)) * real
        assert mrpf(p.conj()) == mrpf(p)


# -- 11: parser --------------------------------------------------------------------

def random_tree(rng, depth=0):
    if depth >= 4 or rng.random() < 0.3:
        if rng.random() < 0.4:
            return Num(Fraction(rng.randint(0, 9), rng.randint(1, 4)))
        return Sym(rng.choice(["t", "i", "j", "k", "eps"]))
    kind = rng.choice(["neg", "bin", "bin", "pow"])
    if kind == "neg":
        return Neg(random_tree(rng, depth + 1))
    if kind == "pow":
        return Pow(random_tree(rng, depth + 1), rng.randint(0, 3))
    return BinOp(rng.choice("+-*"), random_tree(rng, depth + 1), random_tree(rng, depth + 1))


@pytest.mark.criterion(11, "parser round trip on 100 trees, non-commutativity witness")
def test_ac11_parser_round_trip():
    for k in range(100):
        tree = random_tree(random.Random(f"tree:{k}"))
        assert parse_expr(to_source(tree)) == tree
        value = evaluate(tree)
        assert parse_motion(to_source(tree)) == value
        assert parse_motion(format_motion(value)) == value


@pytest.mark.criterion(11, "parser round trip on 100 trees, non-commutativity witness")
def test_ac11_non_commutativity_witness():
    a = parse_motion("(t-i)*(t-j)")
    b = parse_motion("(t-j)*(t-i)")
    assert a.primal[0] == QK and b.primal[0] == -QK
    assert (a - b).primal == QuatPoly(2 * QK) and a.dual.is_zero() and b.dual.is_zero()


# -- 12: conic test through the CLI -------------------------------------------------

def sampled_points(tmp_path, capsys, src):
    path = tmp_path / "motion.txt"
    path.write_text(src, encoding="utf-8")
    assert main(["trajectory", "--point", "1,2/3,-1/5,1/2", "--from", "-3", "--to", "3",
                 "--samples", "13", "--exact", str(path)]) == 0
    rows = capsys.readouterr().out.strip().splitlines()[1:]
    points = [tuple(sp.Rational(v) for v in row.split(",")[1:]) for row in rows]
    assert len({z for _, _, z in points}) == 1  # planar motion, planar trajectory
    return [(x, y) for x, y, _ in points]


def seven_point_conic_check(points):
    """True if a conic passes through the first six points and also the seventh."""
    rows = [[x * x, x * y, y * y, x, y, 1] for x, y in points[:6]]
    null = sp.Matrix(rows).nullspace()
    if not null:
        return False
    x, y = points[6]
    monomials = [x * x, x * y, y * y, x, y, 1]
    return any(sum(c * m for c, m in zip(v, monomials)) == 0 for v in null)


@pytest.mark.criterion(12, "exact 7-point conic check: Cardan passes, Oldham fails")
def test_ac12_conic(tmp_path, capsys):
    cardan_pts = sampled_points(tmp_path, capsys, CARDAN_SRC)
    assert seven_point_conic_check(cardan_pts)
    assert seven_point_conic_check(cardan_pts[6:13])

    oldham_src = format_motion(inverse(validate(parse_motion(CARDAN_SRC))))
    oldham_pts = sampled_points(tmp_path, capsys, oldham_src)
    assert not seven_point_conic_check(oldham_pts)
    assert not seven_point_conic_check(oldham_pts[6:13])
