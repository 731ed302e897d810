"""Convex planar geometry: areas, centroids, half-plane cuts, enclosing boxes.

Regions are convex polygons stored as counterclockwise vertex tuples.  An
empty tuple is a valid (empty) region, and one- or two-vertex tuples are
valid degenerate regions of zero area; they can show up when repeated cuts
shave a region down to a sliver.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateRegion

Point = tuple[float, float]

# Vertices closer than this are merged after a cut.
VERTEX_TOL = 1e-9
# Unit-normal validation slack.
_NORMAL_TOL = 1e-12
# Signed distances within this of zero are treated as "on the cut line".
_CLIP_EPS = 1e-12


def dist(a: Point, b: Point) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane ``{p : normal . (p - anchor) >= 0}``.

    ``normal`` must be a unit vector (checked to 1e-12); this keeps signed
    distances in length units so tolerances are comparable across uses.
    """

    anchor: Point
    normal: Point

    def __post_init__(self) -> None:
        norm = math.hypot(self.normal[0], self.normal[1])
        if not math.isfinite(norm) or abs(norm - 1.0) > _NORMAL_TOL:
            raise ValueError(f"normal must have unit length, got {norm!r}")

    def signed_distance(self, p: Point) -> float:
        return (self.normal[0] * (p[0] - self.anchor[0])
                + self.normal[1] * (p[1] - self.anchor[1]))

    def contains(self, p: Point, tol: float = 0.0) -> bool:
        return self.signed_distance(p) >= -tol

    def flipped(self) -> "HalfPlane":
        """The complementary half-plane (same boundary line)."""
        return HalfPlane(self.anchor, (-self.normal[0], -self.normal[1]))


@dataclass(frozen=True)
class ConvexRegion:
    """Convex polygon with counterclockwise vertices; possibly empty."""

    vertices: tuple[Point, ...] = ()

    @staticmethod
    def square(side: float, origin: Point = (0.0, 0.0)) -> "ConvexRegion":
        ox, oy = origin
        return ConvexRegion((
            (ox, oy), (ox + side, oy), (ox + side, oy + side), (ox, oy + side),
        ))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, p: Point, tol: float = VERTEX_TOL) -> bool:
        """True if ``p`` is inside or within ``tol`` of the boundary."""
        return self._min_signed_distance(p) >= -tol

    def strictly_contains(self, p: Point, tol: float = VERTEX_TOL) -> bool:
        """True if ``p`` is inside and more than ``tol`` from the boundary."""
        return self._min_signed_distance(p) > tol

    def _min_signed_distance(self, p: Point) -> float:
        vs = self.vertices
        if not vs:
            return -math.inf
        if len(vs) == 1:
            return -dist(p, vs[0])
        if len(vs) == 2:
            return -_segment_distance(p, vs[0], vs[1])
        best = math.inf
        for i, a in enumerate(vs):
            b = vs[(i + 1) % len(vs)]
            ex, ey = b[0] - a[0], b[1] - a[1]
            elen = math.hypot(ex, ey)
            if elen <= VERTEX_TOL:
                continue
            cross = ex * (p[1] - a[1]) - ey * (p[0] - a[0])
            best = min(best, cross / elen)
        if math.isinf(best):  # all edges shorter than the merge tolerance
            return -dist(p, vs[0])
        return best


def _segment_distance(p: Point, a: Point, b: Point) -> float:
    ex, ey = b[0] - a[0], b[1] - a[1]
    denom = ex * ex + ey * ey
    if denom <= 0.0:
        return dist(p, a)
    t = ((p[0] - a[0]) * ex + (p[1] - a[1]) * ey) / denom
    t = min(1.0, max(0.0, t))
    return dist(p, (a[0] + t * ex, a[1] + t * ey))


def area(region: ConvexRegion) -> float:
    """Shoelace area; zero for regions with fewer than three vertices."""
    vs = region.vertices
    if len(vs) < 3:
        return 0.0
    acc = 0.0
    for i, (x0, y0) in enumerate(vs):
        x1, y1 = vs[(i + 1) % len(vs)]
        acc += x0 * y1 - x1 * y0
    return 0.5 * acc


def centroid(region: ConvexRegion) -> Point:
    """Area centroid via a triangle fan from the first vertex."""
    total = area(region)
    if total <= 0.0:
        raise DegenerateRegion("centroid needs a region of positive area")
    vs = region.vertices
    ox, oy = vs[0]
    cx = cy = 0.0
    for i in range(1, len(vs) - 1):
        ax, ay = vs[i][0] - ox, vs[i][1] - oy
        bx, by = vs[i + 1][0] - ox, vs[i + 1][1] - oy
        tri = 0.5 * (ax * by - ay * bx)
        cx += tri * (ox + vs[i][0] + vs[i + 1][0]) / 3.0
        cy += tri * (oy + vs[i][1] + vs[i + 1][1]) / 3.0
    return (cx / total, cy / total)


def clip(region: ConvexRegion, half: HalfPlane) -> ConvexRegion:
    """Intersect a convex region with a closed half-plane.

    Output vertices stay counterclockwise; near-duplicate vertices (within
    1e-9) are merged.  The result may be empty or degenerate.
    """
    vs = region.vertices
    if not vs:
        return region
    if len(vs) == 1:
        return region if half.contains(vs[0], _CLIP_EPS) else ConvexRegion()

    ds = [half.signed_distance(v) for v in vs]
    out: list[Point] = []
    n = len(vs)
    for i in range(n):
        a, da = vs[i], ds[i]
        b, db = vs[(i + 1) % n], ds[(i + 1) % n]
        if da >= -_CLIP_EPS:
            out.append(a)
        if (da > _CLIP_EPS and db < -_CLIP_EPS) or (da < -_CLIP_EPS and db > _CLIP_EPS):
            t = da / (da - db)
            out.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))

    merged: list[Point] = []
    for p in out:
        if not merged or dist(merged[-1], p) > VERTEX_TOL:
            merged.append(p)
    while len(merged) > 1 and dist(merged[0], merged[-1]) <= VERTEX_TOL:
        merged.pop()
    return ConvexRegion(tuple(merged))


@dataclass(frozen=True)
class OrientedRectangle:
    """Rectangle given by center, unit axis along its longer side, half-sides."""

    center: Point
    axis: Point
    halfwidth: float   # along axis; halfwidth >= halfheight
    halfheight: float

    @property
    def area(self) -> float:
        return 4.0 * self.halfwidth * self.halfheight

    def corners(self) -> tuple[Point, Point, Point, Point]:
        cx, cy = self.center
        ux, uy = self.axis
        wx, wy = -uy, ux
        hw, hh = self.halfwidth, self.halfheight
        return (
            (cx - ux * hw - wx * hh, cy - uy * hw - wy * hh),
            (cx + ux * hw - wx * hh, cy + uy * hw - wy * hh),
            (cx + ux * hw + wx * hh, cy + uy * hw + wy * hh),
            (cx - ux * hw + wx * hh, cy - uy * hw + wy * hh),
        )

    def contains(self, p: Point, tol: float = VERTEX_TOL) -> bool:
        ux, uy = self.axis
        dx, dy = p[0] - self.center[0], p[1] - self.center[1]
        lu = ux * dx + uy * dy
        lw = -uy * dx + ux * dy
        return abs(lu) <= self.halfwidth + tol and abs(lw) <= self.halfheight + tol


def min_enclosing_rectangle(region: ConvexRegion) -> OrientedRectangle:
    """Minimum-area enclosing rectangle of a convex region.

    Some minimal rectangle has a side flush with a polygon edge, so trying
    every edge direction is exhaustive.  O(n^2) in the vertex count, which is
    plenty for the polygon sizes produced here.  Ties go to the earliest edge
    so results are deterministic.
    """
    if area(region) <= 0.0:
        raise DegenerateRegion("enclosing rectangle needs positive area")
    vs = region.vertices
    best: tuple[float, float, float, float, float, float, float] | None = None
    for i, a in enumerate(vs):
        b = vs[(i + 1) % len(vs)]
        ex, ey = b[0] - a[0], b[1] - a[1]
        elen = math.hypot(ex, ey)
        if elen <= VERTEX_TOL:
            continue
        ux, uy = ex / elen, ey / elen
        wx, wy = -uy, ux
        projs_u = [ux * x + uy * y for x, y in vs]
        projs_w = [wx * x + wy * y for x, y in vs]
        ulo, uhi = min(projs_u), max(projs_u)
        wlo, whi = min(projs_w), max(projs_w)
        rect_area = (uhi - ulo) * (whi - wlo)
        if best is None or rect_area < best[0]:
            best = (rect_area, ux, uy, (ulo + uhi) / 2, (wlo + whi) / 2,
                    (uhi - ulo) / 2, (whi - wlo) / 2)
    if best is None:
        raise DegenerateRegion("region has no usable edges")
    _, ux, uy, cu, cw, hu, hw = best
    center = (ux * cu - uy * cw, uy * cu + ux * cw)
    if hu >= hw:
        axis, halfwidth, halfheight = (ux, uy), hu, hw
    else:
        axis, halfwidth, halfheight = (-uy, ux), hw, hu
    # axis and -axis describe the same rectangle; pick a canonical sign
    if axis[0] < 0 or (axis[0] == 0 and axis[1] < 0):
        axis = (-axis[0], -axis[1])
    return OrientedRectangle(center, axis, halfwidth, halfheight)


def diameter(region: ConvexRegion) -> float:
    """Largest pairwise vertex distance (0 for empty or single-point regions)."""
    vs = region.vertices
    best = 0.0
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            best = max(best, dist(vs[i], vs[j]))
    return best
