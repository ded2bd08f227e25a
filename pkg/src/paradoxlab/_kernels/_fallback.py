"""Pure-Python kernel implementations.

Mirrors paradoxlab._kernels._native function by function; the table layout
(7 doubles per primitive) is documented in the package __init__.  Loops are
written against plain floats so results match the compiled kernels to the
last bit on IEEE-754 hardware (same operations in the same order).
"""

from array import array
from math import cos, sin, sqrt

_STRIDE = 7


def curve_length(tab) -> float:
    """Total length of a primitive table (Neumaier-compensated sum)."""
    total = 0.0
    comp = 0.0
    for i in range(0, len(tab), _STRIDE):
        if tab[i] == 0.0:
            dx = tab[i + 3] - tab[i + 1]
            dy = tab[i + 4] - tab[i + 2]
            term = sqrt(dx * dx + dy * dy)
        else:
            term = tab[i + 3] * abs(tab[i + 5])
        fresh = total + term
        if abs(total) >= abs(term):
            comp += (total - fresh) + term
        else:
            comp += (term - fresh) + total
        total = fresh
    return total + comp


def _start_point(tab, i):
    if tab[i] == 0.0:
        return tab[i + 1], tab[i + 2]
    theta = tab[i + 4]
    return tab[i + 1] + tab[i + 3] * cos(theta), tab[i + 2] + tab[i + 3] * sin(theta)


def _end_point(tab, i):
    if tab[i] == 0.0:
        return tab[i + 3], tab[i + 4]
    theta = tab[i + 4] + tab[i + 5]
    return tab[i + 1] + tab[i + 3] * cos(theta), tab[i + 2] + tab[i + 3] * sin(theta)


def max_chain_gap(tab) -> float:
    """Largest distance between one primitive's end and the next one's start."""
    worst = 0.0
    prev = None
    for i in range(0, len(tab), _STRIDE):
        sx, sy = _start_point(tab, i)
        if prev is not None:
            gap = sqrt((sx - prev[0]) ** 2 + (sy - prev[1]) ** 2)
            if gap > worst:
                worst = gap
        prev = _end_point(tab, i)
    return worst


def sup_distance(tab, ax, ay, bx, by, samples) -> float:
    """Max distance from uniformly sampled curve points to segment (a, b)."""
    vx = bx - ax
    vy = by - ay
    vv = vx * vx + vy * vy
    step = 1.0 / (samples - 1)
    worst = 0.0
    for i in range(0, len(tab), _STRIDE):
        seg = tab[i] == 0.0
        for j in range(samples):
            t = j * step
            if seg:
                px = tab[i + 1] + t * (tab[i + 3] - tab[i + 1])
                py = tab[i + 2] + t * (tab[i + 4] - tab[i + 2])
            else:
                theta = tab[i + 4] + t * tab[i + 5]
                px = tab[i + 1] + tab[i + 3] * cos(theta)
                py = tab[i + 2] + tab[i + 3] * sin(theta)
            u = ((px - ax) * vx + (py - ay) * vy) / vv
            if u < 0.0:
                u = 0.0
            elif u > 1.0:
                u = 1.0
            dx = px - (ax + u * vx)
            dy = py - (ay + u * vy)
            d = sqrt(dx * dx + dy * dy)
            if d > worst:
                worst = d
    return worst


def shoelace(xs, ys) -> float:
    """Signed polygon area; positive for counterclockwise vertex order."""
    m = len(xs)
    twice = 0.0
    comp = 0.0
    for i in range(m):
        j = i + 1
        if j == m:
            j = 0
        term = xs[i] * ys[j] - xs[j] * ys[i]
        fresh = twice + term
        if abs(twice) >= abs(term):
            comp += (twice - fresh) + term
        else:
            comp += (term - fresh) + twice
        twice = fresh
    return 0.5 * (twice + comp)


# cos/sin of -60 degrees: the outward bump for counterclockwise polygons.
_COS60 = 0.5
_SIN60 = 0.8660254037844386


def koch_refine(xs, ys):
    """One Koch subdivision of a closed polygon (no repeated last vertex).

    Every edge p->q is replaced by p, s1, tip, s2 where s1/s2 trisect the
    edge and tip is s1 + (the middle third rotated -60 degrees), which
    points outward when the polygon is counterclockwise.
    """
    m = len(xs)
    out_x = array("d", bytes(8 * 4 * m))
    out_y = array("d", bytes(8 * 4 * m))
    k = 0
    for i in range(m):
        j = i + 1
        if j == m:
            j = 0
        px, py = xs[i], ys[i]
        ex = (xs[j] - px) / 3.0
        ey = (ys[j] - py) / 3.0
        s1x = px + ex
        s1y = py + ey
        out_x[k] = px
        out_y[k] = py
        out_x[k + 1] = s1x
        out_y[k + 1] = s1y
        out_x[k + 2] = s1x + _COS60 * ex + _SIN60 * ey
        out_y[k + 2] = s1y - _SIN60 * ex + _COS60 * ey
        out_x[k + 3] = px + 2.0 * ex
        out_y[k + 3] = py + 2.0 * ey
        k += 4
    return out_x, out_y


def simpson_inv_power(power, upper, subdivisions) -> float:
    """Composite Simpson rule for the integral of x**-power over [1, upper]."""
    n = subdivisions + (subdivisions & 1)
    h = (upper - 1.0) / n
    if power == 1:
        acc = 1.0 + 1.0 / upper
        for i in range(1, n, 2):
            acc += 4.0 / (1.0 + i * h)
        for i in range(2, n, 2):
            acc += 2.0 / (1.0 + i * h)
    else:
        acc = 1.0 + 1.0 / (upper * upper)
        for i in range(1, n, 2):
            x = 1.0 + i * h
            acc += 4.0 / (x * x)
        for i in range(2, n, 2):
            x = 1.0 + i * h
            acc += 2.0 / (x * x)
    return acc * h / 3.0
