"""Pure-Python clearance kernel.

Marks grid cells whose closed rectangle comes within a threshold of a
segment.  All inputs are pre-scaled integers, so every test below is exact
integer arithmetic; this is the reference implementation the compiled kernel
in _gridkernel.pyx must agree with bit-for-bit.
"""

from __future__ import annotations


def _pt_seg_within(px, py, ax, ay, bx, by, thr2):
    """Squared distance from point to segment <= thr2, exactly."""
    dx = bx - ax
    dy = by - ay
    wx = px - ax
    wy = py - ay
    dd = dx * dx + dy * dy
    t = wx * dx + wy * dy
    if t <= 0:
        return wx * wx + wy * wy <= thr2
    if t >= dd:
        ex = px - bx
        ey = py - by
        return ex * ex + ey * ey <= thr2
    c = dx * wy - dy * wx
    return c * c <= thr2 * dd


def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _segs_meet(ax, ay, bx, by, cx, cy, dx, dy):
    o1 = _orient(ax, ay, bx, by, cx, cy)
    o2 = _orient(ax, ay, bx, by, dx, dy)
    o3 = _orient(cx, cy, dx, dy, ax, ay)
    o4 = _orient(cx, cy, dx, dy, bx, by)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and (
        (o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)
    ):
        return True
    if o1 == 0 and min(ax, bx) <= cx <= max(ax, bx) and min(ay, by) <= cy <= max(ay, by):
        return True
    if o2 == 0 and min(ax, bx) <= dx <= max(ax, bx) and min(ay, by) <= dy <= max(ay, by):
        return True
    if o3 == 0 and min(cx, dx) <= ax <= max(cx, dx) and min(cy, dy) <= ay <= max(cy, dy):
        return True
    if o4 == 0 and min(cx, dx) <= bx <= max(cx, dx) and min(cy, dy) <= by <= max(cy, dy):
        return True
    return False


def _rect_seg_within(ax, ay, bx, by, rx0, ry0, rx1, ry1, thr2):
    """Solid closed rect within distance sqrt(thr2) of segment ab."""
    # gap between the segment's bounding box and the rect, componentwise;
    # for axis-parallel segments this is already the exact distance
    gx = max(rx0 - max(ax, bx), min(ax, bx) - rx1, 0)
    gy = max(ry0 - max(ay, by), min(ay, by) - ry1, 0)
    if gx * gx + gy * gy > thr2:
        return False
    if ax == bx or ay == by:
        return True
    if rx0 <= ax <= rx1 and ry0 <= ay <= ry1:
        return True
    if rx0 <= bx <= rx1 and ry0 <= by <= ry1:
        return True
    corners = ((rx0, ry0), (rx1, ry0), (rx1, ry1), (rx0, ry1))
    for i in range(4):
        cx, cy = corners[i]
        ex, ey = corners[(i + 1) % 4]
        if _segs_meet(ax, ay, bx, by, cx, cy, ex, ey):
            return True
    for cx, cy in corners:
        if _pt_seg_within(cx, cy, ax, ay, bx, by, thr2):
            return True
    for px, py in ((ax, ay), (bx, by)):
        for i in range(4):
            cx, cy = corners[i]
            ex, ey = corners[(i + 1) % 4]
            if _pt_seg_within(px, py, cx, cy, ex, ey, thr2):
                return True
    return False


def mark_blocked(mask, ax, ay, bx, by, x0, y0, h, thr, nx, ny):
    """Set mask[j, i] = 1 for every cell within thr of segment ab.

    Cell (i, j) is the closed square [x0+i*h, x0+(i+1)*h] x [y0+j*h, y0+(j+1)*h].
    """
    thr2 = thr * thr
    i_lo = max(0, (min(ax, bx) - thr - x0) // h - 1)
    i_hi = min(nx - 1, (max(ax, bx) + thr - x0) // h + 1)
    j_lo = max(0, (min(ay, by) - thr - y0) // h - 1)
    j_hi = min(ny - 1, (max(ay, by) + thr - y0) // h + 1)
    for j in range(j_lo, j_hi + 1):
        ry0 = y0 + j * h
        ry1 = ry0 + h
        row = mask[j]
        for i in range(i_lo, i_hi + 1):
            if row[i]:
                continue
            rx0 = x0 + i * h
            if _rect_seg_within(ax, ay, bx, by, rx0, ry0, rx0 + h, ry1, thr2):
                row[i] = 1
