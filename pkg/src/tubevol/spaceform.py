"""Ambient geometry of the two constant-curvature model spaces.

The unit 3-sphere (curvature sign ``k = +1``) is realized as the quadric
``<x, x> = 1`` in Euclidean R^4, hyperbolic 3-space (``k = -1``) as the upper
sheet of ``<x, x> = -1`` in Minkowski R^(3,1) with signature ``(-,+,+,+)``.
With both models the quadratic constraint reads ``<x, x> = k``, so geodesics,
distances and normals share one linear-algebraic code path parameterized by
the bilinear form.

All functions broadcast over leading axes; 4-vectors live on the last axis.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, OffModelError, UndefinedDirectionError

CURVATURE_SIGNS = (1, -1)

POINT_TOL = 1e-12   # constraint tolerance for validated points
RENORM_TOL = 1e-8   # drift beyond this gets silently rescaled back
REJECT_TOL = 1e-4   # drift beyond this is an error

_FORM_PLUS = np.array([1.0, 1.0, 1.0, 1.0])
_FORM_MINUS = np.array([-1.0, 1.0, 1.0, 1.0])


def check_curvature_sign(k):
    if k not in CURVATURE_SIGNS:
        raise InvalidInputError(f"curvature sign must be +1 or -1, got {k!r}")
    return int(k)


@dataclass(frozen=True)
class SpaceForm:
    """Curvature sign selecting the sphere (+1) or hyperboloid (-1) model."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", check_curvature_sign(self.k))


def form_signs(k):
    """Diagonal of the model bilinear form."""
    return _FORM_PLUS if k == 1 else _FORM_MINUS


def form_dot(k, x, y):
    """Model inner product (Euclidean for k=+1, Lorentzian for k=-1)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.einsum("...i,...i->...", x * form_signs(k), y)


def _scale(c, x):
    """Multiply 4-vectors x by per-point scalars c, broadcasting over axes."""
    c = np.asarray(c, dtype=float)
    return c[..., None] * x


def sk(t, k):
    """sin t on the sphere, sinh t on the hyperboloid."""
    check_curvature_sign(k)
    t = np.asarray(t, dtype=float)
    out = np.sin(t) if k == 1 else np.sinh(t)
    return float(out) if out.ndim == 0 else out


def ck(t, k):
    """Derivative of ``sk``: cos t or cosh t."""
    check_curvature_sign(k)
    t = np.asarray(t, dtype=float)
    out = np.cos(t) if k == 1 else np.cosh(t)
    return float(out) if out.ndim == 0 else out


def constraint_residual(k, x):
    """|<x, x> - k|, the distance of x from its quadric in form units."""
    return np.abs(form_dot(k, x, x) - k)


def on_model(k, x, tol=POINT_TOL):
    res = constraint_residual(k, x) <= tol
    if k == -1:
        res = res & (np.asarray(x, dtype=float)[..., 0] > 0.0)
    return res


def validate_point(k, x, tol=POINT_TOL):
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 4:
        raise InvalidInputError("ambient points are 4-vectors")
    if not np.all(on_model(k, x, tol)):
        raise InvalidInputError(
            f"point off the k={k:+d} model by more than {tol:g}")
    return x


def validate_tangent(k, base, v, tol=POINT_TOL):
    v = np.asarray(v, dtype=float)
    if not np.all(np.abs(form_dot(k, base, v)) <= tol):
        raise InvalidInputError("vector is not tangent to the model at base")
    return v


def project_to_model(k, x):
    """Repair small constraint drift by rescaling; reject large drift.

    Drift up to RENORM_TOL is left untouched, up to REJECT_TOL it is rescaled
    (projective rescale on the sphere, Lorentz rescale on the hyperboloid),
    beyond that an OffModelError is raised.
    """
    check_curvature_sign(k)
    x = np.asarray(x, dtype=float)
    res = constraint_residual(k, x)
    if np.all(res <= RENORM_TOL):
        return x
    if np.any(res > REJECT_TOL):
        raise OffModelError(
            f"point drifted off the k={k:+d} model by {np.max(res):.3e}")
    q = form_dot(k, x, x)
    if k == -1 and (np.any(q >= 0.0) or np.any(x[..., 0] <= 0.0)):
        raise OffModelError("cannot Lorentz-rescale onto the upper sheet")
    return x / np.sqrt(np.abs(q))[..., None]


def geodesic(k, p, u, t, validate=True):
    """Unit-speed geodesic from p with initial direction u, evaluated at t.

    Closed form ``ck(t) p + sk(t) u``.  u must be a unit tangent at p.
    """
    check_curvature_sign(k)
    p = np.asarray(p, dtype=float)
    u = np.asarray(u, dtype=float)
    if validate:
        validate_point(k, p, tol=1e-9)
        if np.any(np.abs(form_dot(k, u, u) - 1.0) > 1e-9):
            raise InvalidInputError("geodesic direction must be a unit vector")
        validate_tangent(k, p, u, tol=1e-9)
    return _scale(ck(t, k), p) + _scale(sk(t, k), u)


def geodesic_tangent(k, p, u, t):
    """Velocity of the geodesic at time t: ``-k sk(t) p + ck(t) u``.

    This is the parallel transport of u along its own geodesic; it satisfies
    geodesic(p, u, s + t) == geodesic(geodesic(p, u, s), geodesic_tangent(s), t).
    """
    check_curvature_sign(k)
    p = np.asarray(p, dtype=float)
    u = np.asarray(u, dtype=float)
    return _scale(-k * np.asarray(sk(t, k)), p) + _scale(ck(t, k), u)


def dist(k, p, q):
    """Riemannian distance between model points.

    Inner products are clamped into the valid inverse-trig domain, so points
    with 1-ulp constraint drift do not produce NaNs.
    """
    check_curvature_sign(k)
    b = form_dot(k, p, q)
    if k == 1:
        out = np.arccos(np.clip(b, -1.0, 1.0))
    else:
        out = np.arccosh(np.maximum(-b, 1.0))
    return float(out) if np.ndim(out) == 0 else out


def initial_direction(k, q, p):
    """Unit tangent u at q with ``geodesic(q, u, dist(q, p)) == p``.

    Raises UndefinedDirectionError for coincident points and, on the sphere,
    for antipodal ones.
    """
    check_curvature_sign(k)
    q = validate_point(k, q, tol=1e-9)
    p = validate_point(k, p, tol=1e-9)
    d = dist(k, q, p)
    if np.any(np.asarray(d) < 1e-12):
        raise UndefinedDirectionError("coincident points have no direction")
    if k == 1 and np.any(np.asarray(d) > np.pi - 1e-9):
        raise UndefinedDirectionError("antipodal points have no unique direction")
    u = (p - _scale(ck(d, k), q)) / np.asarray(sk(d, k))[..., None]
    # kill residual base component, then renormalize (both are tiny fixes)
    u = u - _scale(form_dot(k, q, u) * k, q)
    return u / np.sqrt(form_dot(k, u, u))[..., None]
