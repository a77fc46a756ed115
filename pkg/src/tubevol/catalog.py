"""Catalog of analytically known closed surfaces in the model spaces.

Three families are provided:

* ``flat_torus(a, b)``: the product torus S^1(a) x S^1(b) in the 3-sphere,
  with ``a^2 + b^2 = 1``; ``clifford_torus()`` is the square case.
* ``geodesic_sphere(k, r)``: the distance sphere of radius r about the model
  basepoint, as a two-cap atlas split at the equator.
* ``perturbed_sphere(k, r0, eps, mode)``: a radial graph over the geodesic
  sphere with a smooth low-order mode, giving a non-umbilic genus-0 fixture.

All charts carry analytic first and second derivatives and a kernel spec so
the compiled closest-point path can evaluate them.
"""

import numpy as np

from . import spaceform as sf
from .errors import InvalidInputError
from .surface import Chart, KernelSpec, Surface

KERNEL_TORUS = 0
KERNEL_CAP = 1
KERNEL_PERTURBED = 2

BASEPOINT = np.array([1.0, 0.0, 0.0, 0.0])


def _torus_suppliers(a, b):
    def immersion(U, V):
        U, V = np.broadcast_arrays(np.asarray(U, float), np.asarray(V, float))
        A, B = U / a, V / b
        return np.stack([a * np.cos(A), a * np.sin(A),
                         b * np.cos(B), b * np.sin(B)], axis=-1)

    def first(U, V):
        U, V = np.broadcast_arrays(np.asarray(U, float), np.asarray(V, float))
        A, B = U / a, V / b
        zero = np.zeros_like(A)
        fu = np.stack([-np.sin(A), np.cos(A), zero, zero], axis=-1)
        fv = np.stack([zero, zero, -np.sin(B), np.cos(B)], axis=-1)
        return fu, fv

    def second(U, V):
        U, V = np.broadcast_arrays(np.asarray(U, float), np.asarray(V, float))
        A, B = U / a, V / b
        zero = np.zeros_like(A)
        fuu = np.stack([-np.cos(A) / a, -np.sin(A) / a, zero, zero], axis=-1)
        fuv = np.zeros(A.shape + (4,))
        fvv = np.stack([zero, zero, -np.cos(B) / b, -np.sin(B) / b], axis=-1)
        return fuu, fuv, fvv

    return immersion, first, second


def flat_torus(a, b, resolution=64):
    """Product torus in the 3-sphere with circle radii (a, b), a^2 + b^2 = 1.

    The default normal gives principal curvatures -a/b and b/a, so the total
    mean curvature is nonnegative whenever b >= a.
    """
    if not (a > 0.0 and b > 0.0):
        raise InvalidInputError("torus radii must be positive")
    if abs(a * a + b * b - 1.0) > 1e-9:
        raise InvalidInputError("torus radii must satisfy a^2 + b^2 = 1")
    scale = np.hypot(a, b)
    a, b = float(a / scale), float(b / scale)

    immersion, first, second = _torus_suppliers(a, b)
    chart = Chart(
        domain=((0.0, 2.0 * np.pi * a), (0.0, 2.0 * np.pi * b)),
        periodic=(True, True),
        immersion=immersion, first_derivs=first, second_derivs=second,
        kernel=KernelSpec(KERNEL_TORUS, (a, b)),
    )
    return Surface(sf.SpaceForm(1), [chart], resolution=resolution,
                   name="flat_torus", params={"a": a, "b": b})


def clifford_torus(resolution=64):
    """The square (minimal) product torus, both circle radii sqrt(2)/2."""
    s = np.sqrt(0.5)
    surf = flat_torus(s, s, resolution=resolution)
    surf.name = "clifford"
    return surf


def _sphere_dirs(TH, PH):
    """Unit 3-vector n(theta, phi) and its chart derivatives, shape (..., 3)."""
    st, ct = np.sin(TH), np.cos(TH)
    sp, cp = np.sin(PH), np.cos(PH)
    n = np.stack([ct, st * cp, st * sp], axis=-1)
    n_t = np.stack([-st, ct * cp, ct * sp], axis=-1)
    zero = np.zeros_like(TH)
    n_p = np.stack([zero, -st * sp, st * cp], axis=-1)
    n_tt = -n
    n_tp = np.stack([zero, -ct * sp, ct * cp], axis=-1)
    n_pp = np.stack([zero, -st * cp, -st * sp], axis=-1)
    return n, n_t, n_p, n_tt, n_tp, n_pp


def _embed(coef0, vec3):
    """Assemble (coef0, vec3) into ambient 4-vectors."""
    return np.concatenate([np.asarray(coef0)[..., None], vec3], axis=-1)


def _cap_suppliers(k, r):
    C, S = sf.ck(r, k), sf.sk(r, k)

    def immersion(TH, PH):
        TH, PH = np.broadcast_arrays(np.asarray(TH, float), np.asarray(PH, float))
        n = _sphere_dirs(TH, PH)[0]
        return _embed(np.full(TH.shape, C), S * n)

    def first(TH, PH):
        TH, PH = np.broadcast_arrays(np.asarray(TH, float), np.asarray(PH, float))
        _, n_t, n_p, _, _, _ = _sphere_dirs(TH, PH)
        zero = np.zeros_like(TH)
        return _embed(zero, S * n_t), _embed(zero, S * n_p)

    def second(TH, PH):
        TH, PH = np.broadcast_arrays(np.asarray(TH, float), np.asarray(PH, float))
        n, _, _, n_tt, n_tp, n_pp = _sphere_dirs(TH, PH)
        zero = np.zeros_like(TH)
        return _embed(zero, S * n_tt), _embed(zero, S * n_tp), _embed(zero, S * n_pp)

    return immersion, first, second


def _two_cap_charts(make_suppliers, kernel_spec):
    """Two theta sub-rectangles of one polar parameterization, split bit-exactly
    at the equator so the caps meet on a shared parameter circle."""
    immersion, first, second = make_suppliers
    charts = []
    for lo, hi in ((0.0, 0.5 * np.pi), (0.5 * np.pi, np.pi)):
        charts.append(Chart(
            domain=((lo, hi), (0.0, 2.0 * np.pi)),
            periodic=(False, True),
            immersion=immersion, first_derivs=first, second_derivs=second,
            kernel=kernel_spec,
        ))
    return charts


def geodesic_sphere(k, r, resolution=64):
    """Distance sphere of radius r about the basepoint, two-cap atlas.

    The default normal points toward the center, so both principal curvatures
    equal ck(r)/sk(r) and the total mean curvature is positive for radii below
    the equator (k = +1) and for every radius in the hyperbolic model.
    """
    k = sf.check_curvature_sign(k)
    if k == 1 and not (0.0 < r < np.pi):
        raise InvalidInputError("sphere radius must lie in (0, pi) for k=+1")
    if k == -1 and not r > 0.0:
        raise InvalidInputError("sphere radius must be positive for k=-1")
    charts = _two_cap_charts(_cap_suppliers(k, float(r)),
                             KernelSpec(KERNEL_CAP, (float(k), float(r))))
    return Surface(sf.SpaceForm(k), charts, resolution=resolution,
                   name="geodesic_sphere", params={"k": k, "r": float(r)})


def _perturbed_suppliers(k, r0, eps, ell):
    def radius(TH, PH):
        m = np.sin(ell * TH) * np.sin(PH)
        r = r0 * (1.0 + eps * m)
        r_t = r0 * eps * ell * np.cos(ell * TH) * np.sin(PH)
        r_p = r0 * eps * np.sin(ell * TH) * np.cos(PH)
        r_tt = -r0 * eps * ell * ell * np.sin(ell * TH) * np.sin(PH)
        r_tp = r0 * eps * ell * np.cos(ell * TH) * np.cos(PH)
        r_pp = -r0 * eps * np.sin(ell * TH) * np.sin(PH)
        return r, r_t, r_p, r_tt, r_tp, r_pp

    def immersion(TH, PH):
        TH, PH = np.broadcast_arrays(np.asarray(TH, float), np.asarray(PH, float))
        n = _sphere_dirs(TH, PH)[0]
        r = radius(TH, PH)[0]
        return _embed(sf.ck(r, k), sf.sk(r, k)[..., None] * n)

    def first(TH, PH):
        TH, PH = np.broadcast_arrays(np.asarray(TH, float), np.asarray(PH, float))
        n, n_t, n_p, _, _, _ = _sphere_dirs(TH, PH)
        r, r_t, r_p, _, _, _ = radius(TH, PH)
        C, S = sf.ck(r, k), sf.sk(r, k)
        ft = _embed(-k * S * r_t, (C * r_t)[..., None] * n + S[..., None] * n_t)
        fp = _embed(-k * S * r_p, (C * r_p)[..., None] * n + S[..., None] * n_p)
        return ft, fp

    def second(TH, PH):
        TH, PH = np.broadcast_arrays(np.asarray(TH, float), np.asarray(PH, float))
        n, n_t, n_p, n_tt, n_tp, n_pp = _sphere_dirs(TH, PH)
        r, r_t, r_p, r_tt, r_tp, r_pp = radius(TH, PH)
        C, S = sf.ck(r, k), sf.sk(r, k)
        ftt = _embed(-k * (C * r_t * r_t + S * r_tt),
                     (C * r_tt - k * S * r_t * r_t)[..., None] * n
                     + (2.0 * C * r_t)[..., None] * n_t + S[..., None] * n_tt)
        ftp = _embed(-k * (C * r_t * r_p + S * r_tp),
                     (C * r_tp - k * S * r_t * r_p)[..., None] * n
                     + (C * r_t)[..., None] * n_p + (C * r_p)[..., None] * n_t
                     + S[..., None] * n_tp)
        fpp = _embed(-k * (C * r_p * r_p + S * r_pp),
                     (C * r_pp - k * S * r_p * r_p)[..., None] * n
                     + (2.0 * C * r_p)[..., None] * n_p + S[..., None] * n_pp)
        return ftt, ftp, fpp

    return immersion, first, second


def perturbed_sphere(k, r0, eps, mode=2, resolution=64):
    """Radial graph r(theta, phi) = r0 (1 + eps sin(mode * theta) sin(phi)).

    The mode function is the restriction of a polynomial in the ambient
    coordinates, hence smooth across the poles, and the graph stays embedded
    for |eps| < 0.3.  Euler characteristic remains 2.
    """
    k = sf.check_curvature_sign(k)
    mode = int(mode)
    if mode < 1:
        raise InvalidInputError("mode must be a positive integer")
    if not abs(eps) < 0.3:
        raise InvalidInputError("perturbation amplitude must satisfy |eps| < 0.3")
    if not r0 > 0.0:
        raise InvalidInputError("base radius must be positive")
    if k == 1 and not r0 * (1.0 + abs(eps)) < np.pi:
        raise InvalidInputError("perturbed radius must stay below pi for k=+1")
    charts = _two_cap_charts(
        _perturbed_suppliers(k, float(r0), float(eps), mode),
        KernelSpec(KERNEL_PERTURBED, (float(k), float(r0), float(eps), float(mode))),
    )
    return Surface(sf.SpaceForm(k), charts, resolution=resolution,
                   name="perturbed_sphere",
                   params={"k": k, "r0": float(r0), "eps": float(eps), "mode": mode})


CATALOG = {
    "clifford": clifford_torus,
    "torus": flat_torus,
    "gsphere": geodesic_sphere,
    "psphere": perturbed_sphere,
}
