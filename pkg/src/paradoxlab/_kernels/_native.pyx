# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel implementations (see _fallback.py for the reference)."""

from cpython cimport array
import array

from libc.math cimport cos, fabs, sin, sqrt

cdef Py_ssize_t STRIDE = 7

cdef array.array _DOUBLE_TEMPLATE = array.array("d", [])


def curve_length(const double[::1] tab):
    """Total length of a primitive table (Neumaier-compensated sum)."""
    cdef double total = 0.0, comp = 0.0, term, fresh, dx, dy
    cdef Py_ssize_t i
    for i in range(0, tab.shape[0], STRIDE):
        if tab[i] == 0.0:
            dx = tab[i + 3] - tab[i + 1]
            dy = tab[i + 4] - tab[i + 2]
            term = sqrt(dx * dx + dy * dy)
        else:
            term = tab[i + 3] * fabs(tab[i + 5])
        fresh = total + term
        if fabs(total) >= fabs(term):
            comp += (total - fresh) + term
        else:
            comp += (term - fresh) + total
        total = fresh
    return total + comp


cdef inline void _start_point(const double[::1] tab, Py_ssize_t i,
                              double* x, double* y):
    cdef double theta
    if tab[i] == 0.0:
        x[0] = tab[i + 1]
        y[0] = tab[i + 2]
    else:
        theta = tab[i + 4]
        x[0] = tab[i + 1] + tab[i + 3] * cos(theta)
        y[0] = tab[i + 2] + tab[i + 3] * sin(theta)


cdef inline void _end_point(const double[::1] tab, Py_ssize_t i,
                            double* x, double* y):
    cdef double theta
    if tab[i] == 0.0:
        x[0] = tab[i + 3]
        y[0] = tab[i + 4]
    else:
        theta = tab[i + 4] + tab[i + 5]
        x[0] = tab[i + 1] + tab[i + 3] * cos(theta)
        y[0] = tab[i + 2] + tab[i + 3] * sin(theta)


def max_chain_gap(const double[::1] tab):
    """Largest distance between one primitive's end and the next one's start."""
    cdef double worst = 0.0, gap, sx, sy
    cdef double px = 0.0, py = 0.0
    cdef bint have_prev = False
    cdef Py_ssize_t i
    for i in range(0, tab.shape[0], STRIDE):
        _start_point(tab, i, &sx, &sy)
        if have_prev:
            gap = sqrt((sx - px) * (sx - px) + (sy - py) * (sy - py))
            if gap > worst:
                worst = gap
        _end_point(tab, i, &px, &py)
        have_prev = True
    return worst


def sup_distance(const double[::1] tab, double ax, double ay,
                 double bx, double by, Py_ssize_t samples):
    """Max distance from uniformly sampled curve points to segment (a, b)."""
    cdef double vx = bx - ax, vy = by - ay
    cdef double vv = vx * vx + vy * vy
    cdef double step = 1.0 / (samples - 1)
    cdef double worst = 0.0, t, px, py, u, dx, dy, d, theta
    cdef bint seg
    cdef Py_ssize_t i, j
    for i in range(0, tab.shape[0], STRIDE):
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


def shoelace(const double[::1] xs, const double[::1] ys):
    """Signed polygon area; positive for counterclockwise vertex order."""
    cdef Py_ssize_t m = xs.shape[0]
    cdef double twice = 0.0, comp = 0.0, term, fresh
    cdef Py_ssize_t i, j
    for i in range(m):
        j = i + 1
        if j == m:
            j = 0
        term = xs[i] * ys[j] - xs[j] * ys[i]
        fresh = twice + term
        if fabs(twice) >= fabs(term):
            comp += (twice - fresh) + term
        else:
            comp += (term - fresh) + twice
        twice = fresh
    return 0.5 * (twice + comp)


cdef double COS60 = 0.5
cdef double SIN60 = 0.8660254037844386


def koch_refine(const double[::1] xs, const double[::1] ys):
    """One outward Koch subdivision of a closed counterclockwise polygon."""
    cdef Py_ssize_t m = xs.shape[0]
    cdef array.array out_x = array.clone(_DOUBLE_TEMPLATE, 4 * m, zero=False)
    cdef array.array out_y = array.clone(_DOUBLE_TEMPLATE, 4 * m, zero=False)
    cdef double[::1] ox = out_x
    cdef double[::1] oy = out_y
    cdef double px, py, ex, ey, s1x, s1y
    cdef Py_ssize_t i, j, k = 0
    for i in range(m):
        j = i + 1
        if j == m:
            j = 0
        px = xs[i]
        py = ys[i]
        ex = (xs[j] - px) / 3.0
        ey = (ys[j] - py) / 3.0
        s1x = px + ex
        s1y = py + ey
        ox[k] = px
        oy[k] = py
        ox[k + 1] = s1x
        oy[k + 1] = s1y
        ox[k + 2] = s1x + COS60 * ex + SIN60 * ey
        oy[k + 2] = s1y - SIN60 * ex + COS60 * ey
        ox[k + 3] = px + 2.0 * ex
        oy[k + 3] = py + 2.0 * ey
        k += 4
    return out_x, out_y


def simpson_inv_power(int power, double upper, long subdivisions):
    """Composite Simpson rule for the integral of x**-power over [1, upper]."""
    cdef long n = subdivisions + (subdivisions & 1)
    cdef double h = (upper - 1.0) / n
    cdef double acc, x
    cdef long i
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
