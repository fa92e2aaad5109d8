"""Numba-compiled kernels: explicit loops, one pass per row, no fastmath.

Mirrors :mod:`pauliq._kernels_numpy` exactly (same formulas, same evaluation
order per component) so the two backends agree to the last few ulps.  The
algebraic kernels take complex128 arrays of shape (n,) / (n, 3); the
kinematic kernels take float64 arrays.  ``cache=True`` keeps the compiled
artifacts across processes, so only the first ever run pays the JIT cost.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def dot(u, v):
    n = u.shape[0]
    out = np.empty(n, np.complex128)
    for i in range(n):
        out[i] = u[i, 0] * v[i, 0] + u[i, 1] * v[i, 1] + u[i, 2] * v[i, 2]
    return out


@njit(cache=True)
def cross(u, v):
    n = u.shape[0]
    out = np.empty((n, 3), np.complex128)
    for i in range(n):
        out[i, 0] = u[i, 1] * v[i, 2] - u[i, 2] * v[i, 1]
        out[i, 1] = u[i, 2] * v[i, 0] - u[i, 0] * v[i, 2]
        out[i, 2] = u[i, 0] * v[i, 1] - u[i, 1] * v[i, 0]
    return out


@njit(cache=True)
def qmul(sa, va, sb, vb):
    n = sa.shape[0]
    s = np.empty(n, np.complex128)
    v = np.empty((n, 3), np.complex128)
    for i in range(n):
        a0 = sa[i]
        b0 = sb[i]
        ax, ay, az = va[i, 0], va[i, 1], va[i, 2]
        bx, by, bz = vb[i, 0], vb[i, 1], vb[i, 2]
        s[i] = a0 * b0 + (ax * bx + ay * by + az * bz)
        v[i, 0] = a0 * bx + b0 * ax + 1j * (ay * bz - az * by)
        v[i, 1] = a0 * by + b0 * ay + 1j * (az * bx - ax * bz)
        v[i, 2] = a0 * bz + b0 * az + 1j * (ax * by - ay * bx)
    return s, v


@njit(cache=True)
def square_norm(s, v):
    n = s.shape[0]
    out = np.empty(n, np.complex128)
    for i in range(n):
        out[i] = s[i] * s[i] - (
            v[i, 0] * v[i, 0] + v[i, 1] * v[i, 1] + v[i, 2] * v[i, 2]
        )
    return out


@njit(cache=True)
def inverse(s, v):
    n = s.shape[0]
    si = np.empty(n, np.complex128)
    vi = np.empty((n, 3), np.complex128)
    for i in range(n):
        nrm = s[i] * s[i] - (
            v[i, 0] * v[i, 0] + v[i, 1] * v[i, 1] + v[i, 2] * v[i, 2]
        )
        si[i] = s[i] / nrm
        vi[i, 0] = -v[i, 0] / nrm
        vi[i, 1] = -v[i, 1] / nrm
        vi[i, 2] = -v[i, 2] / nrm
    return si, vi


@njit(cache=True)
def refl_sum(a, b):
    n = a.shape[0]
    value = np.empty((n, 3), np.complex128)
    denom = np.empty(n, np.complex128)
    for i in range(n):
        ax, ay, az = a[i, 0], a[i, 1], a[i, 2]
        bx, by, bz = b[i, 0], b[i, 1], b[i, 2]
        d = 1.0 + (ax * bx + ay * by + az * bz)
        denom[i] = d
        value[i, 0] = (ax + bx + 1j * (ay * bz - az * by)) / d
        value[i, 1] = (ay + by + 1j * (az * bx - ax * bz)) / d
        value[i, 2] = (az + bz + 1j * (ax * by - ay * bx)) / d
    return value, denom


@njit(cache=True)
def einstein_add(v, u, c):
    n = v.shape[0]
    out = np.empty((n, 3), np.float64)
    c2 = c * c
    for i in range(n):
        vv = v[i, 0] * v[i, 0] + v[i, 1] * v[i, 1] + v[i, 2] * v[i, 2]
        uv = u[i, 0] * v[i, 0] + u[i, 1] * v[i, 1] + u[i, 2] * v[i, 2]
        g = 1.0 / np.sqrt(1.0 - vv / c2)
        denom = 1.0 + uv / c2
        f = uv / vv
        for k in range(3):
            u_par = f * v[i, k]
            u_perp = u[i, k] - u_par
            out[i, k] = (v[i, k] + u_par + u_perp / g) / denom
    return out


@njit(cache=True)
def boost(t, x, v, c):
    n = t.shape[0]
    t_prime = np.empty(n, np.float64)
    x_prime = np.empty((n, 3), np.complex128)
    c2 = c * c
    for i in range(n):
        vv = v[i, 0] * v[i, 0] + v[i, 1] * v[i, 1] + v[i, 2] * v[i, 2]
        xv = x[i, 0] * v[i, 0] + x[i, 1] * v[i, 1] + x[i, 2] * v[i, 2]
        g = 1.0 / np.sqrt(1.0 - vv / c2)
        t_prime[i] = g * (t[i] - xv / c2)
        gc = g / c
        cx = v[i, 1] * x[i, 2] - v[i, 2] * x[i, 1]
        cy = v[i, 2] * x[i, 0] - v[i, 0] * x[i, 2]
        cz = v[i, 0] * x[i, 1] - v[i, 1] * x[i, 0]
        x_prime[i, 0] = g * (x[i, 0] - t[i] * v[i, 0]) - 1j * (gc * cx)
        x_prime[i, 1] = g * (x[i, 1] - t[i] * v[i, 1]) - 1j * (gc * cy)
        x_prime[i, 2] = g * (x[i, 2] - t[i] * v[i, 2]) - 1j * (gc * cz)
    return t_prime, x_prime


@njit(cache=True)
def le_boost(t, x, v, c):
    n = t.shape[0]
    t_prime = np.empty(n, np.float64)
    x_prime = np.empty((n, 3), np.float64)
    c2 = c * c
    for i in range(n):
        vv = v[i, 0] * v[i, 0] + v[i, 1] * v[i, 1] + v[i, 2] * v[i, 2]
        xv = x[i, 0] * v[i, 0] + x[i, 1] * v[i, 1] + x[i, 2] * v[i, 2]
        g = 1.0 / np.sqrt(1.0 - vv / c2)
        t_prime[i] = g * (t[i] - xv / c2)
        f = (g - 1.0) * xv / vv - g * t[i]
        x_prime[i, 0] = x[i, 0] + f * v[i, 0]
        x_prime[i, 1] = x[i, 1] + f * v[i, 1]
        x_prime[i, 2] = x[i, 2] + f * v[i, 2]
    return t_prime, x_prime
