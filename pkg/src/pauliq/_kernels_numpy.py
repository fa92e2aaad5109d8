"""Pure-numpy vectorized kernels for the batched hot paths.

This is the fallback backend (and the reference for the compiled one).  The
algebraic kernels (qmul, square_norm, inverse, refl_sum, dot, cross) take
complex128 arrays of shape (n,) / (n, 3); the kinematic kernels
(einstein_add, boost, le_boost) take float64 arrays.  Callers are expected
to keep inputs inside the validity domains; kernels do not raise.
"""

import numpy as np


def dot(u, v):
    """Rowwise unconjugated dot product, shape (n,)."""
    return u[:, 0] * v[:, 0] + u[:, 1] * v[:, 1] + u[:, 2] * v[:, 2]


def cross(u, v):
    """Rowwise right-handed cross product, shape (n, 3)."""
    return np.cross(u, v)


def qmul(sa, va, sb, vb):
    """Rowwise quaternion product; returns (scalar parts, vector parts)."""
    s = sa * sb + dot(va, vb)
    v = sa[:, None] * vb + sb[:, None] * va + 1j * np.cross(va, vb)
    return s, v


def square_norm(s, v):
    """Rowwise s^2 - v.v."""
    return s * s - dot(v, v)


def inverse(s, v):
    """Rowwise conjugate over square norm; caller keeps norms away from 0."""
    n = square_norm(s, v)
    return s / n, -v / n[:, None]


def refl_sum(a, b):
    """Rowwise (a + b + i a x b) / (1 + a.b); returns (values, denominators)."""
    denom = 1.0 + dot(a, b)
    value = (a + b + 1j * np.cross(a, b)) / denom[:, None]
    return value, denom


def einstein_add(v, u, c):
    """Rowwise relativistic velocity addition v (+) u via the
    parallel/perpendicular split; requires |v| strictly inside (0, c)."""
    vv = dot(v, v)
    uv = dot(u, v)
    g = 1.0 / np.sqrt(1.0 - vv / (c * c))
    denom = 1.0 + uv / (c * c)
    u_par = (uv / vv)[:, None] * v
    u_perp = u - u_par
    return (v + u_par + u_perp / g[:, None]) / denom[:, None]


def boost(t, x, v, c):
    """Rowwise quaternionic boost of real events; returns (t', complex x')
    with x' = g (x - t v) - i g (v x x) / c."""
    vv = dot(v, v)
    g = 1.0 / np.sqrt(1.0 - vv / (c * c))
    xv = dot(x, v)
    t_prime = g * (t - xv / (c * c))
    x_prime = g[:, None] * (x - t[:, None] * v) - 1j * (g / c)[:, None] * np.cross(v, x)
    return t_prime, x_prime


def le_boost(t, x, v, c):
    """Rowwise standard real boost; requires |v| strictly inside (0, c)."""
    vv = dot(v, v)
    xv = dot(x, v)
    g = 1.0 / np.sqrt(1.0 - vv / (c * c))
    t_prime = g * (t - xv / (c * c))
    x_prime = x + ((g - 1.0) * xv / vv - g * t)[:, None] * v
    return t_prime, x_prime
