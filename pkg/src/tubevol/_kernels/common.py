"""Shared solver-grid container consumed by both kernel backends."""

from dataclasses import dataclass

import numpy as np

from .. import spaceform as sf


@dataclass
class SolverData:
    """Precomputed coarse grid and chart metadata for closest-point solving.

    Array fields are plain ndarrays so the compiled backend can consume them
    directly; ``charts`` keeps the Python chart objects for the generic path.
    """

    k: int
    orientation_sign: float
    charts: tuple
    supports_kernels: bool
    # flattened coarse grid over all charts
    grid_pos: np.ndarray      # (M, 4)
    node_chart: np.ndarray    # (M,) int64
    node_iu: np.ndarray       # (M,) int64
    node_iv: np.ndarray       # (M,) int64
    node_u: np.ndarray        # (M,) float64
    node_v: np.ndarray        # (M,) float64
    # per-chart metadata
    nu: np.ndarray            # grid dims, int64
    nv: np.ndarray
    ulo: np.ndarray
    uhi: np.ndarray
    vlo: np.ndarray
    vhi: np.ndarray
    per_u: np.ndarray         # uint8 periodicity flags
    per_v: np.ndarray
    cap_u: np.ndarray         # Newton step caps (~1.5 grid spacings)
    cap_v: np.ndarray
    pad_u: np.ndarray         # clamp inset keeping non-periodic axes off edges
    pad_v: np.ndarray
    codes: np.ndarray         # int64 kernel codes (-1 when absent)
    params: np.ndarray        # (C, 4) float64 kernel parameters
    cover: float              # covering-radius upper bound of the grid
    basins: int
    max_iter: int
    refine_tol: float


def _axis_nodes(lo, hi, n, periodic):
    span = hi - lo
    if periodic:
        return lo + span * np.arange(n) / n
    return lo + span * (np.arange(n) + 1.0) / (n + 1.0)


def build_solver(surface, grid, basins, max_iter, refine_tol):
    """Assemble the coarse solver grid and a covering-radius bound for it."""
    k = surface.k
    grid_pos, node_chart, node_iu, node_iv, node_u, node_v = [], [], [], [], [], []
    nu, nv, ulo, uhi, vlo, vhi = [], [], [], [], [], []
    per_u, per_v, cap_u, cap_v, pad_u, pad_v = [], [], [], [], [], []
    codes, params = [], []
    cover = 0.0

    for ci, chart in enumerate(surface.charts):
        (u0, u1), (v0, v1) = chart.domain
        uu = _axis_nodes(u0, u1, grid, chart.periodic[0])
        vv = _axis_nodes(v0, v1, grid, chart.periodic[1])
        U, V = np.meshgrid(uu, vv, indexing="ij")
        pos = chart.immersion(U, V)

        # neighbor and diagonal geodesic gaps, wrapping periodic axes
        du = sf.dist(k, pos, np.roll(pos, -1, axis=0))
        dv = sf.dist(k, pos, np.roll(pos, -1, axis=1))
        dd = sf.dist(k, pos, np.roll(np.roll(pos, -1, axis=0), -1, axis=1))
        if not chart.periodic[0]:
            du, dd = du[:-1], dd[:-1]
        if not chart.periodic[1]:
            dv = dv[:, :-1]
            dd = dd[:, :-1]
        gap = max(np.max(du), np.max(dv), np.max(dd))
        # uncovered margin beyond the first/last node rows of open axes
        if not chart.periodic[0]:
            edge = chart.immersion(np.full_like(vv, u0), vv)
            gap_lo = np.max(sf.dist(k, edge, pos[0]))
            edge = chart.immersion(np.full_like(vv, u1), vv)
            gap_hi = np.max(sf.dist(k, edge, pos[-1]))
            gap += max(gap_lo, gap_hi)
        if not chart.periodic[1]:
            edge = chart.immersion(uu, np.full_like(uu, v0))
            gap_lo = np.max(sf.dist(k, edge, pos[:, 0]))
            edge = chart.immersion(uu, np.full_like(uu, v1))
            gap_hi = np.max(sf.dist(k, edge, pos[:, -1]))
            gap += max(gap_lo, gap_hi)
        cover = max(cover, 1.25 * gap)

        IU, IV = np.meshgrid(np.arange(grid), np.arange(grid), indexing="ij")
        grid_pos.append(pos.reshape(-1, 4))
        node_chart.append(np.full(grid * grid, ci, dtype=np.int64))
        node_iu.append(IU.ravel().astype(np.int64))
        node_iv.append(IV.ravel().astype(np.int64))
        node_u.append(U.ravel())
        node_v.append(V.ravel())
        nu.append(grid)
        nv.append(grid)
        ulo.append(u0)
        uhi.append(u1)
        vlo.append(v0)
        vhi.append(v1)
        per_u.append(1 if chart.periodic[0] else 0)
        per_v.append(1 if chart.periodic[1] else 0)
        cap_u.append(1.5 * (u1 - u0) / grid)
        cap_v.append(1.5 * (v1 - v0) / grid)
        pad_u.append(0.0 if chart.periodic[0] else 1e-9 * (u1 - u0))
        pad_v.append(0.0 if chart.periodic[1] else 1e-9 * (v1 - v0))
        if chart.kernel is not None:
            codes.append(chart.kernel.code)
            par = np.zeros(4)
            par[:len(chart.kernel.params)] = chart.kernel.params
            params.append(par)
        else:
            codes.append(-1)
            params.append(np.zeros(4))

    return SolverData(
        k=k, orientation_sign=float(surface.orientation_sign),
        charts=surface.charts, supports_kernels=surface.supports_kernels,
        grid_pos=np.ascontiguousarray(np.concatenate(grid_pos)),
        node_chart=np.concatenate(node_chart),
        node_iu=np.concatenate(node_iu), node_iv=np.concatenate(node_iv),
        node_u=np.concatenate(node_u), node_v=np.concatenate(node_v),
        nu=np.array(nu, dtype=np.int64), nv=np.array(nv, dtype=np.int64),
        ulo=np.array(ulo), uhi=np.array(uhi),
        vlo=np.array(vlo), vhi=np.array(vhi),
        per_u=np.array(per_u, dtype=np.uint8),
        per_v=np.array(per_v, dtype=np.uint8),
        cap_u=np.array(cap_u), cap_v=np.array(cap_v),
        pad_u=np.array(pad_u), pad_v=np.array(pad_v),
        codes=np.array(codes, dtype=np.int64),
        params=np.ascontiguousarray(np.array(params)),
        cover=float(cover), basins=int(basins), max_iter=int(max_iter),
        refine_tol=float(refine_tol),
    )
