"""Parametric surfaces in a space form with pointwise curvature data.

A surface is an atlas of rectangular charts declared to cover a closed
embedded surface (coverage is trusted, not computed).  Each chart supplies a
vectorized immersion into the ambient model and, optionally, analytic first
and second derivatives; missing derivatives fall back to central finite
differences.  From these the first/second fundamental forms, unit normal,
principal curvatures and area element are computed in one vectorized pass.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import spaceform as sf
from .errors import InvalidInputError, RegularityError

FD_STEP_FRACTION = 1e-5   # finite-difference step as a fraction of domain span
DETG_FLOOR = 1e-12        # below this the immersion counts as degenerate


@dataclass(frozen=True)
class KernelSpec:
    """Dispatch record for compiled closest-point kernels (catalog charts)."""

    code: int
    params: tuple


@dataclass(frozen=True)
class Chart:
    """One rectangular parameter patch of a surface.

    ``immersion(U, V)`` maps broadcastable parameter arrays to model points of
    shape ``(..., 4)``.  ``first_derivs`` returns ``(f_u, f_v)`` and
    ``second_derivs`` returns ``(f_uu, f_uv, f_vv)`` in the same layout.
    """

    domain: tuple
    periodic: tuple
    immersion: Callable
    first_derivs: Optional[Callable] = None
    second_derivs: Optional[Callable] = None
    kernel: Optional[KernelSpec] = None

    @property
    def spans(self):
        (u0, u1), (v0, v1) = self.domain
        return u1 - u0, v1 - v0


@dataclass(frozen=True)
class PointData:
    """Per-point geometric record.

    ``lambda1 <= lambda2`` are the principal curvatures with respect to the
    oriented unit normal; ``H = (lambda1 + lambda2) / 2`` and
    ``K = k + lambda1 * lambda2`` hold by construction.
    """

    position: np.ndarray
    normal: np.ndarray
    lambda1: float
    lambda2: float
    H: float
    K: float
    area_element: float


class Surface:
    """Oriented chart atlas of a compact embedded surface in a space form.

    Instances are immutable by convention after construction; the attached
    cache dict only memoizes pure derived data (quadrature fields, solver
    grids) and never changes observable behavior.
    """

    def __init__(self, spaceform, charts, orientation_sign=1, resolution=64,
                 name="custom", params=None, validate=True):
        if not isinstance(spaceform, sf.SpaceForm):
            spaceform = sf.SpaceForm(spaceform)
        self.spaceform = spaceform
        self.charts = tuple(charts)
        if not self.charts:
            raise InvalidInputError("a surface needs at least one chart")
        if orientation_sign not in (1, -1):
            raise InvalidInputError("orientation_sign must be +1 or -1")
        self.orientation_sign = int(orientation_sign)
        resolution = int(resolution)
        if resolution <= 0:
            raise InvalidInputError("resolution must be a positive integer")
        self.resolution = resolution
        self.name = name
        self.params = dict(params) if params else {}
        self._caches = {}
        if validate:
            for chart in self.charts:
                validate_chart(self.spaceform.k, chart)

    @property
    def k(self):
        return self.spaceform.k

    @property
    def supports_kernels(self):
        return all(c.kernel is not None for c in self.charts)

    def with_orientation(self, orientation_sign):
        return Surface(self.spaceform, self.charts, orientation_sign,
                       self.resolution, self.name, self.params, validate=False)

    def __repr__(self):
        return (f"Surface({self.name!r}, k={self.k:+d}, charts={len(self.charts)}, "
                f"orientation={self.orientation_sign:+d}, resolution={self.resolution})")


def cross_normal(k, p, a, b):
    """Unit model normal orthogonal (in the model form) to p, a and b.

    Built from the 4D cross product of the three vectors; for the hyperboloid
    the index is raised with the Lorentz form (time component flipped).  The
    result is tangent to the model at p and continuous wherever (a, b) spans a
    nondegenerate tangent plane.
    """
    p0, p1, p2, p3 = np.moveaxis(np.asarray(p, dtype=float), -1, 0)
    a0, a1, a2, a3 = np.moveaxis(np.asarray(a, dtype=float), -1, 0)
    b0, b1, b2, b3 = np.moveaxis(np.asarray(b, dtype=float), -1, 0)

    c01 = a0 * b1 - a1 * b0
    c02 = a0 * b2 - a2 * b0
    c03 = a0 * b3 - a3 * b0
    c12 = a1 * b2 - a2 * b1
    c13 = a1 * b3 - a3 * b1
    c23 = a2 * b3 - a3 * b2

    n0 = p1 * c23 - p2 * c13 + p3 * c12
    n1 = -(p0 * c23 - p2 * c03 + p3 * c02)
    n2 = p0 * c13 - p1 * c03 + p3 * c01
    n3 = -(p0 * c12 - p1 * c02 + p2 * c01)
    if k == -1:
        n0 = -n0
    eta = np.stack([n0, n1, n2, n3], axis=-1)
    nrm2 = sf.form_dot(k, eta, eta)
    return eta / np.sqrt(nrm2)[..., None]


def _fd_first_from_immersion(chart):
    hu = FD_STEP_FRACTION * chart.spans[0]
    hv = FD_STEP_FRACTION * chart.spans[1]
    f = chart.immersion

    def first(U, V):
        fu = (f(U + hu, V) - f(U - hu, V)) / (2.0 * hu)
        fv = (f(U, V + hv) - f(U, V - hv)) / (2.0 * hv)
        return fu, fv

    return first


def chart_first_derivs(chart):
    return chart.first_derivs if chart.first_derivs is not None \
        else _fd_first_from_immersion(chart)


def chart_second_derivs(chart):
    """Analytic second derivatives, or nested central differencing of the
    (analytic or finite-difference) first derivatives."""
    if chart.second_derivs is not None:
        return chart.second_derivs
    first = chart_first_derivs(chart)
    hu = FD_STEP_FRACTION * chart.spans[0]
    hv = FD_STEP_FRACTION * chart.spans[1]

    def second(U, V):
        fu_pu, _ = first(U + hu, V)
        fu_mu, _ = first(U - hu, V)
        fu_pv, fv_pv = first(U, V + hv)
        fu_mv, fv_mv = first(U, V - hv)
        fuu = (fu_pu - fu_mu) / (2.0 * hu)
        fuv = (fu_pv - fu_mv) / (2.0 * hv)
        fvv = (fv_pv - fv_mv) / (2.0 * hv)
        return fuu, fuv, fvv

    return second


@dataclass
class Frames:
    """Vectorized pointwise frame data over a batch of parameter points."""

    position: np.ndarray
    f_u: np.ndarray
    f_v: np.ndarray
    normal: np.ndarray
    lambda1: np.ndarray
    lambda2: np.ndarray
    H: np.ndarray
    K: np.ndarray
    area_element: np.ndarray
    det_g: np.ndarray


def frames(surface, chart_index, U, V, check_regularity=True):
    """Compute positions, normals and curvature fields at parameter points.

    The shape operator is assembled as g^{-1} h with h_ij = <d_i d_j f, eta>
    in the model form; its eigenvalues are the principal curvatures, ordered
    lambda1 <= lambda2.
    """
    chart = surface.charts[chart_index]
    k = surface.k
    U = np.asarray(U, dtype=float)
    V = np.asarray(V, dtype=float)
    U, V = np.broadcast_arrays(U, V)

    f = chart.immersion(U, V)
    fu, fv = chart_first_derivs(chart)(U, V)
    fuu, fuv, fvv = chart_second_derivs(chart)(U, V)

    g11 = sf.form_dot(k, fu, fu)
    g12 = sf.form_dot(k, fu, fv)
    g22 = sf.form_dot(k, fv, fv)
    det_g = g11 * g22 - g12 * g12
    if check_regularity and np.any(det_g <= DETG_FLOOR):
        raise RegularityError(
            f"degenerate first fundamental form (min det g = {np.min(det_g):.3e})")

    eta = cross_normal(k, f, fu, fv) * surface.orientation_sign

    h11 = sf.form_dot(k, fuu, eta)
    h12 = sf.form_dot(k, fuv, eta)
    h22 = sf.form_dot(k, fvv, eta)

    trace = (g22 * h11 - 2.0 * g12 * h12 + g11 * h22) / det_g
    det_shape = (h11 * h22 - h12 * h12) / det_g
    disc = np.sqrt(np.maximum(trace * trace - 4.0 * det_shape, 0.0))
    lam1 = 0.5 * (trace - disc)
    lam2 = 0.5 * (trace + disc)

    return Frames(
        position=f, f_u=fu, f_v=fv, normal=eta,
        lambda1=lam1, lambda2=lam2,
        H=0.5 * trace, K=k + det_shape,
        area_element=np.sqrt(det_g), det_g=det_g,
    )


def point_data(surface, chart_index, u, v):
    """Pointwise geometric record at one parameter location."""
    fr = frames(surface, chart_index, float(u), float(v))
    return PointData(
        position=fr.position, normal=fr.normal,
        lambda1=float(fr.lambda1), lambda2=float(fr.lambda2),
        H=float(fr.H), K=float(fr.K),
        area_element=float(fr.area_element),
    )


def validate_chart(k, chart, n=17):
    """Check the chart invariants on an interior validation grid.

    The immersion must stay on the model within 1e-10 and the first
    fundamental form must be positive definite (det g above the floor).
    Interior midpoint nodes are used so coordinate degeneracies on chart
    edges (e.g. polar caps) do not trip the check.
    """
    (u0, u1), (v0, v1) = chart.domain
    uu = u0 + (u1 - u0) * (np.arange(n) + 0.5) / n
    vv = v0 + (v1 - v0) * (np.arange(n) + 0.5) / n
    U, V = np.meshgrid(uu, vv, indexing="ij")
    f = chart.immersion(U, V)
    res = sf.constraint_residual(k, f)
    if np.max(res) > 1e-10:
        raise InvalidInputError(
            f"chart immersion off the model by {np.max(res):.3e} (> 1e-10)")
    if k == -1 and np.min(f[..., 0]) <= 0.0:
        raise InvalidInputError("chart immersion leaves the upper sheet")
    fu, fv = chart_first_derivs(chart)(U, V)
    g11 = sf.form_dot(k, fu, fu)
    g12 = sf.form_dot(k, fu, fv)
    g22 = sf.form_dot(k, fv, fv)
    det_g = g11 * g22 - g12 * g12
    if np.min(det_g) <= DETG_FLOOR:
        raise RegularityError(
            f"chart metric degenerate on validation grid (min det g = {np.min(det_g):.3e})")


def normalize_orientation(surface):
    """Flip the orientation if the total mean curvature is negative.

    The normal is chosen so that the integral of H over the surface is
    nonnegative; if that integral vanishes (within 1e-9 of the area) the
    given orientation is kept.  Flipping negates the normal and both
    principal curvatures pointwise.
    """
    from .integrate import surface_integrals
    ints = surface_integrals(surface)
    if ints.total_mean < -1e-9 * ints.area:
        return surface.with_orientation(-surface.orientation_sign)
    return surface
