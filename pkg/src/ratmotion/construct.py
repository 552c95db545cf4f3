"""Motions with a prescribed exceptional degree reduction, and named examples.

Every constructor validates its output and returns it in reduced monic
normal form, ready for :func:`ratmotion.analysis.predicted_degree`.
"""
from __future__ import annotations

from .motion import MotionPolynomial, inverse, normalize, validate
from .quat_poly import DualQuatPoly, QuatPoly, norm_poly, right_divide
from .quat_algebra import QI, QJ, QK
from .scalar_poly import RealPoly

__all__ = [
    "exceptional",
    "planar",
    "darboux",
    "wunderlich",
    "cardan",
    "oldham",
    "darboux_example",
    "vertical_darboux",
    "wunderlich_example",
    "FAMILIES",
]

T = QuatPoly((0, 1))


def _qpoly(p):
    if isinstance(p, DualQuatPoly):
        if not p.dual.is_zero():
            raise ValueError("expected a quaternion polynomial without eps part")
        return p.primal
    coerced = QuatPoly._coerce(p)
    return coerced if coerced is not None else QuatPoly(p)


def _normal(poly):
    return normalize(MotionPolynomial(poly))[0]


def exceptional(R, E, H):
    """``norm(H)*R*H + eps*E*H``: the seed motion ``R + eps*E`` with right factor ``H``.

    The result has an exceptional reduction of at least ``2*deg H``.
    """
    R, E, H = _qpoly(R), _qpoly(E), _qpoly(H)
    if H.is_zero():
        raise ValueError("H must be nonzero")
    validate(DualQuatPoly(R, E))
    c = norm_poly(H)
    return _normal(DualQuatPoly(R * H * c, E * H))


def _in_span(p, allowed):
    return all(getattr(coef, a) == 0 for coef in p.coeffs for a in "wxyz" if a not in allowed)


def planar(R, D, F=1, H=None):
    """``norm(H)*R + eps*F*D`` for ``R, F`` in span{1, k} and ``D`` in span{i, j}.

    ``H`` must be a right factor of ``R``; it defaults to ``R`` itself.
    """
    R, D, F = _qpoly(R), _qpoly(D), _qpoly(F)
    H = R if H is None else _qpoly(H)
    if not (_in_span(R, "wz") and _in_span(F, "wz") and _in_span(D, "xy")):
        raise ValueError("not planar form")
    if H.is_zero() or right_divide(R, H)[1]:
        raise ValueError("H is not a right factor of R")
    c = norm_poly(H)
    if (F * D).degree > c.degree + R.degree:
        raise ValueError("deg(F*D) exceeds deg(c*R)")
    return _normal(DualQuatPoly(R * c, F * D))


def darboux(Q, D):
    """``norm(Q)*Q + eps*D*Q`` with ``deg Q = 1`` and ``deg D = 2``.

    The Study condition holds exactly when ``D`` has no scalar part.
    """
    Q, D = _qpoly(Q), _qpoly(D)
    if Q.degree != 1 or D.degree != 2:
        raise ValueError(f"need deg Q = 1 and deg D = 2, got {Q.degree} and {D.degree}")
    return _normal(DualQuatPoly(Q * norm_poly(Q), D * Q))


def wunderlich(f, G, C):
    """``(f + eps*G) * C``: a translation with real ``f`` of degree 1 composed with ``C``."""
    f = RealPoly(f) if not isinstance(f, (QuatPoly, DualQuatPoly)) else _qpoly(f)
    fq = QuatPoly.from_real(f) if isinstance(f, RealPoly) else f
    G = _qpoly(G)
    if not fq.is_real() or fq.degree != 1:
        raise ValueError("f must be a real polynomial of degree 1")
    if not G.is_vectorial() or G.degree > 1:
        raise ValueError("G must be a vector polynomial of degree at most 1")
    F = validate(DualQuatPoly(fq, G))
    return _normal(F.poly * validate(C).poly)


# -- named families --------------------------------------------------------------

def cardan():
    """``(t^2 + 1)*(t - k) + eps*(t*i + j)``: elliptic trajectories."""
    return planar(T - QK, T * QI + QJ)


def oldham():
    """Inverse of :func:`cardan`; its trajectories are quartic."""
    return normalize(inverse(cardan()))[0]


def darboux_example(D=None):
    """:func:`darboux` with ``Q = t - k`` and by default ``D = t^2*i + j``."""
    return darboux(T - QK, T * T * QI + QJ if D is None else D)


def vertical_darboux(a=None):
    """:func:`darboux` with ``Q = t - k`` and ``D = a(t)*k``; ``a`` defaults to ``t^2``."""
    a = RealPoly((0, 0, 1)) if a is None else a
    return darboux(T - QK, QuatPoly.from_real(RealPoly(a)) * QK
                   if not isinstance(a, QuatPoly) else a * QK)


def wunderlich_example(f=None, G=None):
    """:func:`wunderlich` applied to :func:`darboux_example` (default ``f = t``, ``G = i``)."""
    return wunderlich(RealPoly((0, 1)) if f is None else f, QI if G is None else G,
                      darboux_example())


FAMILIES = {
    "cardan": cardan,
    "oldham": oldham,
    "darboux": darboux_example,
    "vertical-darboux": vertical_darboux,
    "wunderlich": wunderlich_example,
    "exceptional": exceptional,
    "planar": planar,
}
