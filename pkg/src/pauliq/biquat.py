"""Complexified quaternion algebra over a Pauli-type vector basis.

An element is a complex scalar part plus a complex Cartesian 3-vector part.
Unlike Hamilton's quaternions, each basis vector squares to +1, and the
antisymmetric part of a product contributes +i times the cross product:

    (a0, A) (b0, B) = (a0*b0 + A.B,  a0*B + b0*A + i A x B)

where A.B is the unconjugated (bilinear) dot product.  Conjugation negates
the vector part only; components are never complex-conjugated.  The square
norm a0^2 - A.A is multiplicative but complex-valued in general, so the
algebra has genuine null elements (invertibility is not automatic).

Two numeric guards are shared across the package: ``EPS_NULL`` bounds the
square-norm magnitude below which inversion is refused, and ``EPS_DEG``
bounds denominators (1 + a.b, a.g, |v x x|) below which quotient
constructions are treated as degenerate.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NullQuaternion

# square norms with |n| at or below this are treated as null (non-invertible)
EPS_NULL = 1e-12

# scalar denominators with magnitude at or below this are treated as degenerate
EPS_DEG = 1e-9


def as_cvec(v) -> np.ndarray:
    """Coerce ``v`` to an immutable finite complex 3-vector (the algebra's
    working dtype)."""
    arr = np.array(v, dtype=np.complex128)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    arr.flags.writeable = False
    return arr


def as_rvec(v) -> np.ndarray:
    """Coerce ``v`` to an immutable finite real 3-vector.  Rejects complex
    input rather than silently dropping imaginary parts."""
    arr = np.array(v)
    if np.iscomplexobj(arr):
        raise ValueError("expected a real 3-vector, got complex components")
    arr = arr.astype(np.float64)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    arr.flags.writeable = False
    return arr


def dot_u(u, v) -> complex:
    """Unconjugated bilinear dot product u.v.

    No Hermitian conjugation takes place, so e.g. (0,0,i).(0,0,i) == -1.
    This is the pairing under which the square norm is multiplicative.
    """
    u = np.asarray(u)
    v = np.asarray(v)
    return complex(u[0] * v[0] + u[1] * v[1] + u[2] * v[2])


def cross(u, v) -> np.ndarray:
    """Right-handed cross product, bilinear in complex components."""
    u = np.asarray(u)
    v = np.asarray(v)
    return np.array([
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ])


class BiQuaternion:
    """Immutable element of the algebra: complex scalar part ``s`` plus
    complex 3-vector part ``v``.

    ``a * b`` multiplies two elements, ``k * a`` scales by a complex number.
    """

    __slots__ = ("s", "v")

    def __init__(self, s, v):
        s = complex(s)
        if not (math.isfinite(s.real) and math.isfinite(s.imag)):
            raise ValueError("scalar part must be finite")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "v", as_cvec(v))

    def __setattr__(self, name, value):
        raise AttributeError("BiQuaternion is immutable")

    def __repr__(self):
        return f"BiQuaternion(s={self.s!r}, v={self.v.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, BiQuaternion):
            return NotImplemented
        return self.s == other.s and bool(np.all(self.v == other.v))

    def __hash__(self):
        return hash((self.s, tuple(self.v.tolist())))

    def __mul__(self, other):
        if isinstance(other, BiQuaternion):
            return qmul(self, other)
        if isinstance(other, (int, float, complex, np.number)):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return scalar_mul(other, self)
        return NotImplemented

    def __neg__(self):
        return BiQuaternion(-self.s, -self.v)

    def isclose(self, other: "BiQuaternion", tol: float = 1e-12) -> bool:
        """True when every component differs by at most ``tol`` in modulus."""
        return max_abs_diff(self, other) <= tol


def qmul(a: BiQuaternion, b: BiQuaternion) -> BiQuaternion:
    """Product of two elements:
    scalar a.s*b.s + a.v.b.v, vector a.s*b.v + b.s*a.v + i (a.v x b.v)."""
    s = a.s * b.s + dot_u(a.v, b.v)
    v = a.s * b.v + b.s * a.v + 1j * cross(a.v, b.v)
    return BiQuaternion(s, v)


def scalar_mul(k, a: BiQuaternion) -> BiQuaternion:
    """Scale every component by the complex number ``k``."""
    k = complex(k)
    return BiQuaternion(k * a.s, k * a.v)


def conj(a: BiQuaternion) -> BiQuaternion:
    """Quaternionic conjugate: the vector part flips sign, components are
    left untouched (no complex conjugation)."""
    return BiQuaternion(a.s, -a.v)


def square_norm(a: BiQuaternion) -> complex:
    """a.s^2 - a.v.a.v, equal to a * conj(a).  Complex in general; it is
    multiplicative over products and vanishes exactly on null elements."""
    return a.s * a.s - dot_u(a.v, a.v)


def inverse(a: BiQuaternion) -> BiQuaternion:
    """conj(a) / square_norm(a).

    Raises :class:`NullQuaternion` when |square_norm| <= ``EPS_NULL``, since
    elements on the null cone have no inverse and nearby ones cannot be
    inverted stably.
    """
    n = square_norm(a)
    if abs(n) <= EPS_NULL:
        raise NullQuaternion(
            f"square norm {n} has magnitude <= {EPS_NULL}; element is not invertible"
        )
    return BiQuaternion(a.s / n, -a.v / n)


def max_abs_diff(a: BiQuaternion, b: BiQuaternion) -> float:
    """Largest componentwise modulus of the difference a - b."""
    return max(abs(a.s - b.s), float(np.max(np.abs(a.v - b.v))))


def basis() -> tuple[BiQuaternion, BiQuaternion, BiQuaternion, BiQuaternion]:
    """The four basis elements (unit, x, y, z)."""
    return (
        BiQuaternion(1, (0, 0, 0)),
        BiQuaternion(0, (1, 0, 0)),
        BiQuaternion(0, (0, 1, 0)),
        BiQuaternion(0, (0, 0, 1)),
    )


# Ordered basis products: PRODUCT_TABLE[i, j] = (coef, k) means
# basis()[i] * basis()[j] == coef * basis()[k].  The unit is central, each
# vector squares to the unit, and distinct vectors anticommute through the
# +i cross term.
PRODUCT_TABLE: dict[tuple[int, int], tuple[complex, int]] = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
    (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
    (1, 2): (1j, 3), (2, 1): (-1j, 3),
    (2, 3): (1j, 1), (3, 2): (-1j, 1),
    (3, 1): (1j, 2), (1, 3): (-1j, 2),
}
