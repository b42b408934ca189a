"""Exact rational planar geometry.

Everything here is computed with arbitrary-precision rationals; dyadic
tolerances enter only as exact values 2**-k and every comparison against a
distance is performed on squared quantities, so no square root is ever
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Fraction:
    """Coerce ints, 'p/q' strings or Fractions to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coercion of {value!r}")
    return Fraction(value)


def pow2(k: int) -> Fraction:
    """Exact 2**k for any integer k."""
    if k >= 0:
        return Fraction(1 << k)
    return Fraction(1, 1 << (-k))


class DyadicExp(NamedTuple):
    """The tolerance 2**-k for k >= 0."""

    k: int

    def value(self) -> Fraction:
        return pow2(-self.k)


def dyadic(k: int) -> DyadicExp:
    if k < 0:
        raise ValueError(f"dyadic exponent must be >= 0, got {k}")
    return DyadicExp(k)


class Point2(NamedTuple):
    x: Fraction
    y: Fraction


def pt(x: RationalLike, y: RationalLike) -> Point2:
    return Point2(rat(x), rat(y))


def p_add(a: Point2, b: Point2) -> Point2:
    return Point2(a.x + b.x, a.y + b.y)


def p_sub(a: Point2, b: Point2) -> Point2:
    return Point2(a.x - b.x, a.y - b.y)


def p_scale(a: Point2, s: Fraction) -> Point2:
    return Point2(a.x * s, a.y * s)


def dot(a: Point2, b: Point2) -> Fraction:
    return a.x * b.x + a.y * b.y


def cross(a: Point2, b: Point2) -> Fraction:
    return a.x * b.y - a.y * b.x


def dist2(a: Point2, b: Point2) -> Fraction:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


class Segment(NamedTuple):
    a: Point2
    b: Point2


def segment(a: Point2, b: Point2) -> Segment:
    if a == b:
        raise ValueError(f"degenerate segment at {a}")
    return Segment(a, b)


class Rect(NamedTuple):
    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction


def rect(xmin: RationalLike, xmax: RationalLike, ymin: RationalLike, ymax: RationalLike) -> Rect:
    r = Rect(rat(xmin), rat(xmax), rat(ymin), rat(ymax))
    if not (r.xmin < r.xmax and r.ymin < r.ymax):
        raise ValueError(f"empty rectangle {r}")
    return r


def rect_center(r: Rect) -> Point2:
    return Point2((r.xmin + r.xmax) / 2, (r.ymin + r.ymax) / 2)


def rect_diam2(r: Rect) -> Fraction:
    w = r.xmax - r.xmin
    h = r.ymax - r.ymin
    return w * w + h * h


def rect_contains(r: Rect, p: Point2, *, closed: bool = True) -> bool:
    if closed:
        return r.xmin <= p.x <= r.xmax and r.ymin <= p.y <= r.ymax
    return r.xmin < p.x < r.xmax and r.ymin < p.y < r.ymax


def rects_intersect(r: Rect, s: Rect) -> bool:
    return not (r.xmax < s.xmin or s.xmax < r.xmin or r.ymax < s.ymin or s.ymax < r.ymin)


class Disk(NamedTuple):
    center: Point2
    radius: Fraction


def disk(center: Point2, radius: RationalLike) -> Disk:
    r = rat(radius)
    if r <= 0:
        raise ValueError(f"disk radius must be positive, got {r}")
    return Disk(center, r)


def disk_contains(d: Disk, p: Point2, *, closed: bool = False) -> bool:
    q = dist2(p, d.center)
    rr = d.radius * d.radius
    return q <= rr if closed else q < rr


UNIT_DISK = Disk(Point2(Fraction(0), Fraction(0)), Fraction(1))


@dataclass(frozen=True)
class PolyCurve:
    """Rational polygonal curve with implied breakpoints t_j = j/k.

    Piece j is the segment from vertices[j] to vertices[j+1], traversed on
    the parameter interval [j/k, (j+1)/k].
    """

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a polygonal curve needs at least two vertices")
        for i in range(len(self.vertices) - 1):
            if self.vertices[i] == self.vertices[i + 1]:
                raise ValueError(f"repeated consecutive vertex {self.vertices[i]} at index {i}")

    @property
    def k(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> Point2:
        return self.vertices[0]

    @property
    def end(self) -> Point2:
        return self.vertices[-1]

    def segments(self) -> Iterable[Segment]:
        v = self.vertices
        for i in range(len(v) - 1):
            yield Segment(v[i], v[i + 1])


def polycurve(points: Sequence[Sequence[RationalLike] | Point2]) -> PolyCurve:
    verts = []
    for p in points:
        if isinstance(p, Point2):
            verts.append(p)
        else:
            x, y = p
            verts.append(pt(x, y))
    return PolyCurve(tuple(verts))


def poly_eval(P: PolyCurve, t: RationalLike) -> Point2:
    """Evaluate the standard parameterization at t in [0, 1]."""
    t = rat(t)
    if not (0 <= t <= 1):
        raise ValueError(f"parameter {t} outside [0, 1]")
    k = P.k
    u = t * k
    j = int(u)
    if j == k:
        j -= 1
    local = u - j
    a = P.vertices[j]
    b = P.vertices[j + 1]
    return Point2(a.x + (b.x - a.x) * local, a.y + (b.y - a.y) * local)


# -- segment/segment classification ------------------------------------------


@dataclass(frozen=True)
class Disjoint:
    pass


@dataclass(frozen=True)
class PointHit:
    p: Point2


@dataclass(frozen=True)
class OverlapHit:
    sub: Segment


SegStatus = Union[Disjoint, PointHit, OverlapHit]

DISJOINT = Disjoint()


def seg_status(s1: Segment, s2: Segment) -> SegStatus:
    """Exact classification of the intersection of two nondegenerate segments."""
    d1 = p_sub(s1.b, s1.a)
    d2 = p_sub(s2.b, s2.a)
    w = p_sub(s2.a, s1.a)
    denom = cross(d1, d2)
    if denom != 0:
        t = cross(w, d2) / denom
        u = cross(w, d1) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            return PointHit(p_add(s1.a, p_scale(d1, t)))
        return DISJOINT
    # parallel
    if cross(w, d1) != 0:
        return DISJOINT
    # collinear: express s2's endpoints as parameters along s1
    dd = dot(d1, d1)
    ta = dot(w, d1) / dd
    tb = dot(p_sub(s2.b, s1.a), d1) / dd
    lo, hi = (ta, tb) if ta <= tb else (tb, ta)
    lo = max(lo, Fraction(0))
    hi = min(hi, Fraction(1))
    if lo > hi:
        return DISJOINT
    pa = p_add(s1.a, p_scale(d1, lo))
    if lo == hi:
        return PointHit(pa)
    pb = p_add(s1.a, p_scale(d1, hi))
    return OverlapHit(Segment(pa, pb))


# -- squared distances --------------------------------------------------------


def dist2_point_seg(p: Point2, s: Segment) -> Fraction:
    d = p_sub(s.b, s.a)
    w = p_sub(p, s.a)
    dd = dot(d, d)
    t = dot(w, d)
    if t <= 0:
        return dot(w, w)
    if t >= dd:
        return dist2(p, s.b)
    c = cross(d, w)
    return c * c / dd


def dist2_point_poly(p: Point2, P: PolyCurve) -> Fraction:
    return min(dist2_point_seg(p, s) for s in P.segments())


def dist2_seg_seg(s1: Segment, s2: Segment) -> Fraction:
    if not isinstance(seg_status(s1, s2), Disjoint):
        return Fraction(0)
    return min(
        dist2_point_seg(s1.a, s2),
        dist2_point_seg(s1.b, s2),
        dist2_point_seg(s2.a, s1),
        dist2_point_seg(s2.b, s1),
    )


def dist2_poly_poly(P: PolyCurve, R: PolyCurve) -> Fraction:
    best = None
    for s in P.segments():
        for r in R.segments():
            d = dist2_seg_seg(s, r)
            if best is None or d < best:
                best = d
            if best == 0:
                return best
    return best


def sup_norm2(P: PolyCurve, R: PolyCurve) -> Fraction:
    """Exact squared sup-norm of P - R under the standard parameterizations.

    The squared pointwise distance is convex on every interval where both
    curves are linear, so the supremum is attained on the union of the two
    breakpoint sets.
    """
    if P.k == R.k:
        return max(dist2(a, b) for a, b in zip(P.vertices, R.vertices))
    params = sorted(
        {Fraction(i, P.k) for i in range(P.k + 1)} | {Fraction(i, R.k) for i in range(R.k + 1)}
    )
    return max(dist2(poly_eval(P, t), poly_eval(R, t)) for t in params)


def is_simple_polyarc(P: PolyCurve) -> bool:
    """True iff adjacent segments meet only at their shared vertex and
    non-adjacent segments are disjoint."""
    segs = list(P.segments())
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            st = seg_status(segs[i], segs[j])
            if j == i + 1:
                if not isinstance(st, PointHit):
                    return False
                if st.p != segs[i].b:
                    return False
            else:
                if not isinstance(st, Disjoint):
                    return False
    return True


def _param_on_seg(p: Point2, s: Segment) -> Fraction:
    """Parameter of a point known to lie on the segment."""
    d = p_sub(s.b, s.a)
    if abs(d.x) >= abs(d.y):
        return (p.x - s.a.x) / d.x
    return (p.y - s.a.y) / d.y


def first_hit_from(P: PolyCurve, R: PolyCurve, t_min: RationalLike = 0) -> tuple[Fraction, Point2] | None:
    """Least parameter t >= t_min on P with P(t) in the image of R."""
    t_min = rat(t_min)
    if not (0 <= t_min <= 1):
        raise ValueError(f"t_min {t_min} outside [0, 1]")
    k = P.k
    rsegs = list(R.segments())
    j0 = int(t_min * k)
    if j0 == k:
        j0 -= 1
    for j in range(j0, k):
        s = Segment(P.vertices[j], P.vertices[j + 1])
        floor_local = t_min * k - j if j == j0 else Fraction(0)
        best_local = None
        for r in rsegs:
            st = seg_status(s, r)
            if isinstance(st, PointHit):
                local = _param_on_seg(st.p, s)
            elif isinstance(st, OverlapHit):
                pa = _param_on_seg(st.sub.a, s)
                pb = _param_on_seg(st.sub.b, s)
                if max(pa, pb) < floor_local:
                    continue
                local = min(pa, pb)
                if local < floor_local:
                    local = floor_local
            else:
                continue
            if local < floor_local:
                continue
            if best_local is None or local < best_local:
                best_local = local
        if best_local is not None:
            t = (j + best_local) / Fraction(k)
            a, b = s
            p = Point2(a.x + (b.x - a.x) * best_local, a.y + (b.y - a.y) * best_local)
            return t, p
    return None


def first_hit(P: PolyCurve, R: PolyCurve) -> tuple[Fraction, Point2] | None:
    """Least parameter t on P with P(t) in the image of R, with the hit point."""
    return first_hit_from(P, R, 0)


def subarc(P: PolyCurve, t0: RationalLike, t1: RationalLike) -> PolyCurve:
    """The portion of P between parameters t0 < t1, as a fresh curve."""
    t0 = rat(t0)
    t1 = rat(t1)
    if not (0 <= t0 < t1 <= 1):
        raise ValueError(f"need 0 <= t0 < t1 <= 1, got ({t0}, {t1})")
    k = P.k
    verts = [poly_eval(P, t0)]
    j_lo = int(t0 * k) + 1
    j_hi = int(t1 * k)
    if Fraction(j_hi, k) == t1:
        j_hi -= 1
    for j in range(j_lo, j_hi + 1):
        v = P.vertices[j]
        if v != verts[-1]:
            verts.append(v)
    endp = poly_eval(P, t1)
    if endp != verts[-1]:
        verts.append(endp)
    if len(verts) == 1:
        raise ValueError("subarc degenerated to a point")
    return PolyCurve(tuple(verts))


def reverse_polycurve(P: PolyCurve) -> PolyCurve:
    return PolyCurve(tuple(reversed(P.vertices)))


def diameter2(points: Sequence[Point2]) -> Fraction:
    best = Fraction(0)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = dist2(points[i], points[j])
            if d > best:
                best = d
    return best


def poly_bbox(P: PolyCurve) -> Rect:
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    return Rect(min(xs), max(xs), min(ys), max(ys))


# -- comparisons against square roots -----------------------------------------
#
# Strict inequalities mixing one or two square roots with rationals reduce to
# polynomial inequalities in the squared quantities; these helpers keep that
# algebra in one place.


def sqrt_lt(a: Fraction, r: Fraction) -> bool:
    """sqrt(a) < r for a >= 0."""
    return r > 0 and a < r * r


def sqrt_le(a: Fraction, r: Fraction) -> bool:
    return r >= 0 and a <= r * r


def lt_sqrt(r: Fraction, a: Fraction) -> bool:
    """r < sqrt(a) for a >= 0."""
    return r < 0 or r * r < a


def le_sqrt(r: Fraction, a: Fraction) -> bool:
    return r <= 0 or r * r <= a


def sqrt_sum_le(a: Fraction, b: Fraction, r: Fraction) -> bool:
    """sqrt(a) + sqrt(b) <= r for a, b >= 0."""
    if r < 0:
        return False
    s = r * r - a - b
    return s >= 0 and 4 * a * b <= s * s


def sqrt_sum_lt(a: Fraction, b: Fraction, r: Fraction) -> bool:
    if r <= 0:
        return False
    s = r * r - a - b
    return s > 0 and 4 * a * b < s * s


# -- scheduled concatenation ---------------------------------------------------


def scheduled_polycurve(pieces: Sequence[tuple[PolyCurve, Fraction, Fraction]]) -> PolyCurve:
    """Concatenate pieces, the i-th traversed uniformly on [lo_i, hi_i].

    The intervals must tile [0, 1] in order and consecutive pieces must chain
    geometrically.  The result is a single PolyCurve whose uniform breakpoints
    refine every piece's schedule exactly, so its standard parameterization
    restricted to [lo_i, hi_i] coincides with the uniform traversal of piece i.
    """
    if not pieces:
        raise ValueError("no pieces")
    if pieces[0][1] != 0 or pieces[-1][2] != 1:
        raise ValueError("schedule must start at 0 and end at 1")
    divisors = []
    prev_hi = None
    prev_curve = None
    for curve, lo, hi in pieces:
        if lo >= hi:
            raise ValueError(f"empty schedule interval [{lo}, {hi}]")
        if prev_hi is not None:
            if lo != prev_hi:
                raise ValueError("schedule intervals must tile [0,1] without gaps")
            if curve.start != prev_curve.end:
                raise ValueError("consecutive pieces do not chain")
        step = (hi - lo) / curve.k
        divisors.append(lcm(lo.denominator, step.denominator))
        prev_hi = hi
        prev_curve = curve
    n_total = lcm(*divisors)
    verts: list[Point2] = [pieces[0][0].start]
    for curve, lo, hi in pieces:
        per_seg = int((hi - lo) / curve.k * n_total)
        for s in curve.segments():
            d = p_sub(s.b, s.a)
            for r in range(1, per_seg + 1):
                verts.append(p_add(s.a, p_scale(d, Fraction(r, per_seg))))
    return PolyCurve(tuple(verts))
