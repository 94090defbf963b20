"""
Embeddedness of closed polylines and the energy threshold below which the flow
keeps curves embedded.

Orientation signs are decided in floating point when the result is certified
by the error bound of the 2x2 determinant, and in exact rational arithmetic
otherwise.
"""
import logging
from fractions import Fraction
from typing import Tuple

import numpy as np

from elastica.common_exceptions import DegenerateEdge
from elastica.core.config import config
from elastica.geometry.curve import Curve
from elastica.schemas.model_params import ModelParams

logger = logging.getLogger(__name__)

# (3 + 16ε)ε for the orientation determinant, ε = 2^-53
ORIENTATION_ERROR_BOUND = (3.0 + 16.0 * 2.0**-53) * 2.0**-53
DEGENERATE_EDGE_FACTOR = 1e-14

Point = Tuple[float, float]


def _exact_orientation(a: Point, b: Point, c: Point) -> int:
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return (det > 0) - (det < 0)


def _orientations(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Sign of the orientation of (a, b, c) row by row"""
    detleft = (a[:, 0] - c[:, 0]) * (b[:, 1] - c[:, 1])
    detright = (a[:, 1] - c[:, 1]) * (b[:, 0] - c[:, 0])
    det = detleft - detright
    bound = ORIENTATION_ERROR_BOUND * (np.abs(detleft) + np.abs(detright))
    signs = np.where(det > bound, 1, np.where(det < -bound, -1, 0))
    for row in np.flatnonzero(np.abs(det) <= bound):
        signs[row] = _exact_orientation(tuple(a[row]), tuple(b[row]), tuple(c[row]))
    return signs


def _strictly_inside(a: Point, b: Point, c: Point) -> bool:
    """c collinear with the segment ab lies strictly between its endpoints"""
    ax, ay, bx, by, cx, cy = (Fraction(v) for v in (*a, *b, *c))
    return (cx - ax) * (bx - ax) + (cy - ay) * (by - ay) > 0 and (
        (cx - bx) * (ax - bx) + (cy - by) * (ay - by) > 0
    )


def _segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Exact test used once some orientation of the pair vanishes"""
    o1 = _exact_orientation(a, b, c)
    o2 = _exact_orientation(a, b, d)
    o3 = _exact_orientation(c, d, a)
    o4 = _exact_orientation(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if a in (c, d) or b in (c, d):
        return True
    return (
        (o1 == 0 and _strictly_inside(a, b, c))
        or (o2 == 0 and _strictly_inside(a, b, d))
        or (o3 == 0 and _strictly_inside(c, d, a))
        or (o4 == 0 and _strictly_inside(c, d, b))
    )


def is_embedded(curve: Curve) -> bool:
    """True iff the closed polyline through curve.vertices has no self contact.

    Non-adjacent edges may neither cross nor touch; a vertex lying in the
    interior of a non-incident edge, or coinciding with another vertex,
    counts as contact.
    """
    vertices = curve.vertices
    N = len(vertices)
    starts = vertices
    ends = np.roll(vertices, -1, axis=0)
    edge_lengths = np.linalg.norm(ends - starts, axis=1)
    length = float(np.sum(edge_lengths))
    if np.any(edge_lengths < DEGENERATE_EDGE_FACTOR * length):
        raise DegenerateEdge(
            f"Edge {int(np.argmin(edge_lengths))} has length {np.min(edge_lengths):.3e}"
        )

    lower = np.minimum(starts, ends)
    upper = np.maximum(starts, ends)
    for i in range(N - 2):
        # edge i is adjacent to i+1 and, cyclically, edge 0 to N-1
        last = N - 1 if i == 0 else N
        j = np.arange(i + 2, last)
        if j.size == 0:
            continue
        overlap = np.all(lower[j] <= upper[i], axis=1) & np.all(
            upper[j] >= lower[i], axis=1
        )
        j = j[overlap]
        if j.size == 0:
            continue
        a = np.broadcast_to(starts[i], (j.size, 2))
        b = np.broadcast_to(ends[i], (j.size, 2))
        c, d = starts[j], ends[j]
        o1 = _orientations(a, b, c)
        o2 = _orientations(a, b, d)
        o3 = _orientations(c, d, a)
        o4 = _orientations(c, d, b)
        if np.any((o1 * o2 < 0) & (o3 * o4 < 0)):
            return False
        for row in np.flatnonzero((o1 == 0) | (o2 == 0) | (o3 == 0) | (o4 == 0)):
            if _segments_touch(
                tuple(starts[i]), tuple(ends[i]), tuple(c[row]), tuple(d[row])
            ):
                return False
    return True


def embeddedness_threshold_from_infimum(inf_beta: float, L: float, c0: float) -> float:
    """ε = inf β / 2 · (C_2T/L - 4π c0 + L c0²)"""
    c_2t = config.diagnostics.C_2T
    return 0.5 * inf_beta * (c_2t / L - 4.0 * np.pi * c0 + L * c0**2)


def embeddedness_threshold(
    params: ModelParams, rho_interval: Tuple[float, float]
) -> float:
    """Energy threshold below which initially embedded curves stay embedded,
    with inf β taken over the closed density interval `rho_interval`."""
    lower, upper = rho_interval
    inf_beta = params.beta.infimum(lower, upper)
    return embeddedness_threshold_from_infimum(inf_beta, params.L, params.c0)
