"""2x2 complex matrix representation of the quaternion algebra.

The element (s, (vx, vy, vz)) maps to

    [[s + vz,  vx - i vy],
     [vx + i vy,  s - vz]],

a faithful representation: quaternion products become matrix products, the
quaternionic conjugate becomes the adjugate, and the square norm becomes the
determinant.  This module is a verifier for the quaternion engine rather
than an alternative compute path; it goes through plain matrix arithmetic so
representation tests reach the same numbers by an independent route.
"""

from __future__ import annotations

import numpy as np

from . import lorentz
from .biquat import BiQuaternion


def _const(rows) -> np.ndarray:
    m = np.array(rows, dtype=np.complex128)
    m.flags.writeable = False
    return m


SIGMA_0 = _const([[1, 0], [0, 1]])
SIGMA_X = _const([[0, 1], [1, 0]])
SIGMA_Y = _const([[0, -1j], [1j, 0]])
SIGMA_Z = _const([[1, 0], [0, -1]])

SIGMA = (SIGMA_0, SIGMA_X, SIGMA_Y, SIGMA_Z)


def to_matrix(a: BiQuaternion) -> np.ndarray:
    """Represent the element as s*SIGMA_0 + vx*SIGMA_X + vy*SIGMA_Y + vz*SIGMA_Z."""
    vx, vy, vz = a.v
    m = np.array(
        [[a.s + vz, vx - 1j * vy],
         [vx + 1j * vy, a.s - vz]],
        dtype=np.complex128,
    )
    m.flags.writeable = False
    return m


def from_matrix(m) -> BiQuaternion:
    """Invert :func:`to_matrix`; every complex 2x2 matrix decomposes uniquely."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    s = (m[0, 0] + m[1, 1]) / 2
    vz = (m[0, 0] - m[1, 1]) / 2
    vx = (m[0, 1] + m[1, 0]) / 2
    vy = 1j * (m[0, 1] - m[1, 0]) / 2
    return BiQuaternion(s, (vx, vy, vz))


def det(m) -> complex:
    """Determinant m00*m11 - m01*m10; equals the square norm of the
    represented element."""
    m = np.asarray(m)
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def adjugate(m) -> np.ndarray:
    """[[m11, -m01], [-m10, m00]]: the matrix image of the quaternionic
    conjugate, satisfying m @ adjugate(m) == det(m) * identity."""
    m = np.asarray(m, dtype=np.complex128)
    out = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])
    out.flags.writeable = False
    return out


def spin_term(r: "lorentz.BoostRotor", e: "lorentz.Event") -> np.ndarray:
    """The purely imaginary vector i * Im(x') a boost adds beyond the real
    transform: equals -i g (v x x) / c, and vanishes when v and x are parallel."""
    te = lorentz.boost_event(r, e)
    out = 1j * np.imag(te.x_prime)
    out.flags.writeable = False
    return out
