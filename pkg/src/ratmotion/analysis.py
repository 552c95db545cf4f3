"""Trajectory degree analysis of rational motions.

For a reduced monic motion polynomial ``P + eps*D`` of degree ``n`` write
``P = c*Q`` with ``c`` the maximal real polynomial factor of ``P``.  The
generic trajectory degree is ``2n - m - e`` where ``m = deg c`` and ``e`` is
the degree of ``gcd(c, content(Q*conj(D)))``.

Two certificates explain a positive ``e``:

* algebraic: a common right factor ``H`` of ``Q`` and ``D`` whose norm
  polynomial is that gcd;
* geometric: for every quadratic factor ``(t - z)(t - conj z)`` of the gcd,
  the points ``[Q(z)]`` and ``[D(z)]`` lie on a left ruling of the null
  quadric, i.e. ``Q(z)*conj(D(z)) = 0``.

All degrees and divisibility decisions are exact; complex evaluations at the
roots ``z`` are double precision cross-checks.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .motion import MotionPolynomial, generic_degree_oracle, inverse, normalize, validate
from .quat_poly import InconsistencyError, QuatPoly, extract_right_factor, gcrd, mrpf, norm_poly, right_divide
from .quat_algebra import Quaternion
from .scalar_poly import QuadraticFactor, RealPoly, factor_real, quadratic_roots, real_gcd

__all__ = [
    "DegreeReport",
    "RulingCertificate",
    "PlueckerLine",
    "DegreeModelViolation",
    "ordinary_reduction",
    "exceptional_reduction",
    "predicted_degree",
    "analyze_inverse",
    "algebraic_certificate",
    "geometric_certificate",
    "pluecker_line",
    "on_left_ruling_conic",
    "ruling_swap_check",
    "ruling_residual",
]

TOL = 1e-8


class DegreeModelViolation(InconsistencyError):
    """The sampled trajectory degree disagrees with ``2n - m - e``."""


def _normal_form(c):
    return normalize(c)[0]


def _divide_real(p, c):
    comps = [comp.exact_div(c) for comp in p.components()]
    return QuatPoly.from_components(*comps)


def ordinary_reduction(c):
    """``(c, Q, m)`` with ``P = c*Q``, ``c = mrpf(P)`` and ``m = deg c``."""
    c_motion = _normal_form(c)
    p = c_motion.primal
    real = mrpf(p)
    return real, _divide_real(p, real), real.degree


def _exceptional_content(q, d):
    if d.is_zero():
        return None
    return mrpf(q * d.conj())


def exceptional_reduction(c):
    """``(e, g)`` with ``g = gcd(c, content(Q*conj(D)))`` and ``e = deg g``."""
    motion = _normal_form(c)
    real, q, _ = ordinary_reduction(motion)
    cont = _exceptional_content(q, motion.dual)
    if cont is None:
        return 0, RealPoly.constant(1)
    g = real_gcd(real, cont)
    return g.degree, g


# -- numeric helpers ------------------------------------------------------------

def _unit(q):
    return q.normalized()


def _qabs(q):
    return sum(abs(c) ** 2 for c in q.components) ** 0.5


def _proportional(a, b, tol=TOL):
    a, b = _unit(a), _unit(b)
    ac, bc = a.components, b.components
    return all(abs(ac[i] * bc[j] - ac[j] * bc[i]) <= tol for i in range(4) for j in range(i + 1, 4))


def ruling_residual(q, d, z):
    """``|Q(z) * conj(D(z))|`` with both evaluations scaled to unit max-component."""
    qz, dz = q(complex(z)), d(complex(z))
    if qz.is_zero() or dz.is_zero():
        return 0.0
    return _qabs(_unit(qz) * _unit(dz).conj())


@dataclass(frozen=True)
class RulingCertificate:
    """Witness that ``[Q(z)]`` and ``[D(z)]`` lie on a left ruling of the null quadric."""

    quadratic: QuadraticFactor
    multiplicity: int
    z: complex
    left_ruling_residual: float
    coincident: bool
    q_point: Quaternion
    d_point: Quaternion

    def to_json(self):
        return {
            "quadratic": self.quadratic.to_json(),
            "multiplicity": self.multiplicity,
            "z": [self.z.real, self.z.imag],
            "left_ruling_residual": self.left_ruling_residual,
            "coincident": self.coincident,
        }


def _exact_multiplicity(q, real, comps):
    k = 0
    qk = q
    while qk.divides(real) and all(qk.divides(p) for p in comps):
        k += 1
        qk = qk * q
    return k


def geometric_certificate(c):
    """One :class:`RulingCertificate` per quadratic factor of the exceptional gcd."""
    motion = _normal_form(c)
    real, q, _ = ordinary_reduction(motion)
    d = motion.dual
    e, g = exceptional_reduction(motion)
    if e == 0:
        return []
    fac = factor_real(g)
    if fac.linear:
        raise InconsistencyError(f"exceptional gcd {g} has real roots")
    comps = (q * d.conj()).components()
    certs = []
    for quad in fac.quadratics:
        if quad.exact:
            mu = _exact_multiplicity(quad.poly(), real, comps)
            if mu != quad.multiplicity:
                raise InconsistencyError("multiplicity mismatch in exceptional gcd")
        else:
            # square-free level of g; exact by construction
            mu = quad.multiplicity
        z, _ = quadratic_roots(quad)
        qz, dz = q(z), d(z)
        residual = ruling_residual(q, d, z)
        if residual >= TOL:
            warnings.warn(f"ruling residual {residual:.3g} at z={z} exceeds {TOL}; "
                          "exact divisibility is authoritative", RuntimeWarning)
        certs.append(RulingCertificate(quad, mu, z, residual, _proportional(qz, dz), qz, dz))
    return certs


def _rational_remainders(fac):
    # rational factors of each square-free level not already split into exact quadratics
    for s, k in fac.squarefree:
        rest = s
        for quad in fac.quadratics:
            if quad.exact and quad.multiplicity == k:
                rest = rest.exact_div(quad.poly())
        if rest.degree > 0:
            yield rest, k


def algebraic_certificate(c):
    """Common right factor ``H`` of ``Q`` and ``D`` with ``norm(H) = g``, or None if ``e = 0``."""
    motion = _normal_form(c)
    real, q, _ = ordinary_reduction(motion)
    d = motion.dual
    e, g = exceptional_reduction(motion)
    if e == 0:
        return None
    cur = gcrd(q, d)
    h = QuatPoly(1)
    fac = factor_real(g)
    for quad in fac.quadratics:
        if not quad.exact:
            continue
        for _ in range(quad.multiplicity):
            lin = extract_right_factor(cur, quad)
            cur = right_divide(cur, lin)[0]
            h = lin * h
    for rest, k in _rational_remainders(fac):
        for _ in range(k):
            part = gcrd(cur, QuatPoly.from_real(rest))
            cur = right_divide(cur, part)[0]
            h = part * h
    if (right_divide(q, h)[1] or right_divide(d, h)[1] or norm_poly(h) != g):
        raise InconsistencyError("common right factor with norm g not found")
    return h


# -- Pluecker coordinates ------------------------------------------------------

@dataclass(frozen=True)
class PlueckerLine:
    """Line as dual quaternion ``x + eps*y`` with vanishing scalar parts."""

    x: Quaternion
    y: Quaternion

    def pluecker_defect(self):
        return self.x * self.y.conj() + self.y * self.x.conj()

    def satisfies_pluecker(self, tol=TOL):
        defect = self.pluecker_defect()
        if not defect.numeric:
            return defect.is_zero()
        scale = max(self.x.max_abs(), self.y.max_abs()) ** 2 or 1.0
        return defect.max_abs() <= tol * scale


def _is_proportional(a, b):
    if a.numeric or b.numeric:
        return _proportional(a, b)
    ac, bc = a.components, b.components
    return all(ac[i] * bc[j] == ac[j] * bc[i] for i in range(4) for j in range(i + 1, 4))


def pluecker_line(a, b):
    """Line through ``[a]`` and ``[b]``: ``a conj(b) - conj(a) b + eps (conj(a) b - b conj(a))``."""
    if a.is_zero() or b.is_zero() or _is_proportional(a, b):
        raise ValueError("line degenerate")
    ca, cb = a.conj(), b.conj()
    return PlueckerLine(a * cb - ca * b, ca * b - b * ca)


def on_left_ruling_conic(line, tol=TOL):
    """True if ``line`` is projectively ``x - eps*x`` with ``x + conj(x) = norm(x) = 0``."""
    x, y = line.x, line.y
    if not (x.numeric or y.numeric):
        return (not x.is_zero() and (x + y).is_zero() and not x.w and x.norm() == 0)
    scale = max(x.max_abs(), y.max_abs())
    if scale == 0:
        return False
    x, y = x / scale, y / scale
    return ((x + y).max_abs() <= tol and abs(x.w) <= tol and abs(x.norm()) <= tol
            and x.max_abs() > tol)


def ruling_swap_check(c):
    """Conjugation turns each certified left ruling into a right ruling.

    For every certificate at ``z``, with ``p = conj(Q)(z)`` and
    ``r = conj(D)(z)``, checks ``conj(p) * r = 0``.
    """
    motion = _normal_form(c)
    certs = geometric_certificate(motion)
    if not certs:
        raise ValueError("motion has no ruling certificate")
    _, q, _ = ordinary_reduction(motion)
    qc, dc = q.conj(), motion.dual.conj()
    for cert in certs:
        p, r = _unit(qc(cert.z)), _unit(dc(cert.z))
        if _qabs(p.conj() * r) >= TOL:
            return False
    return True


# -- report ----------------------------------------------------------------------

@dataclass
class DegreeReport:
    n: int
    m: int
    e: int
    predicted: int
    c: RealPoly
    common_gcd: RealPoly
    motion: MotionPolynomial
    certificates: list = field(default_factory=list)
    algebraic_factor: QuatPoly | None = None
    oracle_degree: int | None = None
    seed: int | None = None
    normalization: list = field(default_factory=list)

    def to_json(self):
        from .expr import format_motion
        out = {
            "n": self.n,
            "m": self.m,
            "e": self.e,
            "predicted": self.predicted,
            "c": self.c.to_json(),
            "common_gcd": self.common_gcd.to_json(),
            "certificates": [cert.to_json() for cert in self.certificates],
            "algebraic_factor": None if self.algebraic_factor is None else self.algebraic_factor.to_json(),
            "normal_form": format_motion(self.motion.poly),
            "normalization": list(self.normalization),
        }
        if self.oracle_degree is not None:
            out["oracle"] = self.oracle_degree
            out["seed"] = self.seed
        return out


def predicted_degree(c, oracle_trials=None, seed=0, check=True, certificates=True):
    """Assemble ``n, m, e`` and ``2n - m - e``; optionally compare with sampling.

    With ``oracle_trials`` set, the maximal trajectory degree over that many
    pseudorandom points is attached; ``check`` raises
    :class:`DegreeModelViolation` when it differs from the prediction.
    """
    motion, steps = normalize(c)
    real, _, m = ordinary_reduction(motion)
    e, g = exceptional_reduction(motion)
    n = motion.n
    report = DegreeReport(n=n, m=m, e=e, predicted=2 * n - m - e, c=real, common_gcd=g,
                          motion=motion, normalization=steps)
    if e % 2 or not 0 <= e <= m <= n:
        raise InconsistencyError(f"impossible reduction data n={n} m={m} e={e}")
    if certificates and e:
        report.certificates = geometric_certificate(motion)
        report.algebraic_factor = algebraic_certificate(motion)
        if sum(2 * cert.multiplicity for cert in report.certificates) != e:
            raise InconsistencyError("ruling multiplicities do not add up to e")
    if oracle_trials:
        report.oracle_degree = generic_degree_oracle(motion, oracle_trials, seed)
        report.seed = seed
        if check and report.oracle_degree != report.predicted:
            raise DegreeModelViolation(
                f"degree model violated: predicted {report.predicted}, sampled {report.oracle_degree}")
    return report


def analyze_inverse(c, **kwargs):
    """:func:`predicted_degree` of the inverse motion."""
    return predicted_degree(inverse(validate(c)), **kwargs)
