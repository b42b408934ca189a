# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled clearance kernel.

Same cell-marking algorithm as _kernel_py.mark_blocked, restricted to inputs
whose magnitudes the caller has checked against the int64 guard; with
coordinates below 2**27 every intermediate fits comfortably in __int128, so
the arithmetic stays exact.
"""

import numpy as np

cdef extern from *:
    ctypedef long long i128 "__int128"

ctypedef long long i64


cdef inline i64 _imax(i64 a, i64 b):
    return a if a > b else b


cdef inline i64 _imin(i64 a, i64 b):
    return a if a < b else b


cdef inline i64 _fdiv(i64 a, i64 b):
    # floor division for b > 0 (cdivision truncates toward zero)
    cdef i64 q = a / b
    if a % b != 0 and a < 0:
        q -= 1
    return q


cdef inline bint _pt_seg_within(i64 px, i64 py, i64 ax, i64 ay, i64 bx, i64 by, i128 thr2):
    cdef i64 dx = bx - ax
    cdef i64 dy = by - ay
    cdef i64 wx = px - ax
    cdef i64 wy = py - ay
    cdef i128 dd = <i128> dx * dx + <i128> dy * dy
    cdef i128 t = <i128> wx * dx + <i128> wy * dy
    cdef i128 c
    cdef i64 ex, ey
    if t <= 0:
        return <i128> wx * wx + <i128> wy * wy <= thr2
    if t >= dd:
        ex = px - bx
        ey = py - by
        return <i128> ex * ex + <i128> ey * ey <= thr2
    c = <i128> dx * wy - <i128> dy * wx
    if c < 0:
        c = -c
    # c <= 2**57 here, so c*c fits in int128 only when split carefully;
    # with the 2**27 coordinate guard c*c <= 2**114 which is safe directly
    return c * c <= thr2 * dd


cdef inline i128 _orient(i64 ax, i64 ay, i64 bx, i64 by, i64 cx, i64 cy):
    return <i128> (bx - ax) * (cy - ay) - <i128> (by - ay) * (cx - ax)


cdef inline bint _segs_meet(i64 ax, i64 ay, i64 bx, i64 by, i64 cx, i64 cy, i64 dx, i64 dy):
    cdef i128 o1 = _orient(ax, ay, bx, by, cx, cy)
    cdef i128 o2 = _orient(ax, ay, bx, by, dx, dy)
    cdef i128 o3 = _orient(cx, cy, dx, dy, ax, ay)
    cdef i128 o4 = _orient(cx, cy, dx, dy, bx, by)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and ((o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)):
        return True
    if o1 == 0 and _imin(ax, bx) <= cx <= _imax(ax, bx) and _imin(ay, by) <= cy <= _imax(ay, by):
        return True
    if o2 == 0 and _imin(ax, bx) <= dx <= _imax(ax, bx) and _imin(ay, by) <= dy <= _imax(ay, by):
        return True
    if o3 == 0 and _imin(cx, dx) <= ax <= _imax(cx, dx) and _imin(cy, dy) <= ay <= _imax(cy, dy):
        return True
    if o4 == 0 and _imin(cx, dx) <= bx <= _imax(cx, dx) and _imin(cy, dy) <= by <= _imax(cy, dy):
        return True
    return False


cdef bint _rect_seg_within(i64 ax, i64 ay, i64 bx, i64 by,
                           i64 rx0, i64 ry0, i64 rx1, i64 ry1, i128 thr2):
    cdef i64 gx = _imax(_imax(rx0 - _imax(ax, bx), _imin(ax, bx) - rx1), 0)
    cdef i64 gy = _imax(_imax(ry0 - _imax(ay, by), _imin(ay, by) - ry1), 0)
    cdef i64 cxs[4]
    cdef i64 cys[4]
    cdef int i, k
    if <i128> gx * gx + <i128> gy * gy > thr2:
        return False
    if ax == bx or ay == by:
        return True
    if rx0 <= ax <= rx1 and ry0 <= ay <= ry1:
        return True
    if rx0 <= bx <= rx1 and ry0 <= by <= ry1:
        return True
    cxs[0] = rx0; cys[0] = ry0
    cxs[1] = rx1; cys[1] = ry0
    cxs[2] = rx1; cys[2] = ry1
    cxs[3] = rx0; cys[3] = ry1
    for i in range(4):
        k = (i + 1) % 4
        if _segs_meet(ax, ay, bx, by, cxs[i], cys[i], cxs[k], cys[k]):
            return True
    for i in range(4):
        if _pt_seg_within(cxs[i], cys[i], ax, ay, bx, by, thr2):
            return True
    for i in range(4):
        k = (i + 1) % 4
        if _pt_seg_within(ax, ay, cxs[i], cys[i], cxs[k], cys[k], thr2):
            return True
        if _pt_seg_within(bx, by, cxs[i], cys[i], cxs[k], cys[k], thr2):
            return True
    return False


def mark_blocked(unsigned char[:, ::1] mask, i64 ax, i64 ay, i64 bx, i64 by,
                 i64 x0, i64 y0, i64 h, i64 thr, Py_ssize_t nx, Py_ssize_t ny):
    cdef i128 thr2 = <i128> thr * thr
    cdef i64 flo
    cdef Py_ssize_t i_lo, i_hi, j_lo, j_hi, i, j
    cdef i64 rx0, ry0, ry1

    flo = _imin(ax, bx) - thr - x0
    i_lo = _fdiv(flo, h) - 1
    if i_lo < 0:
        i_lo = 0
    flo = _imax(ax, bx) + thr - x0
    i_hi = _fdiv(flo, h) + 1
    if i_hi > nx - 1:
        i_hi = nx - 1
    flo = _imin(ay, by) - thr - y0
    j_lo = _fdiv(flo, h) - 1
    if j_lo < 0:
        j_lo = 0
    flo = _imax(ay, by) + thr - y0
    j_hi = _fdiv(flo, h) + 1
    if j_hi > ny - 1:
        j_hi = ny - 1

    for j in range(j_lo, j_hi + 1):
        ry0 = y0 + j * h
        ry1 = ry0 + h
        for i in range(i_lo, i_hi + 1):
            if mask[j, i]:
                continue
            rx0 = x0 + i * h
            if _rect_seg_within(ax, ay, bx, by, rx0, ry0, rx0 + h, ry1, thr2):
                mask[j, i] = 1
