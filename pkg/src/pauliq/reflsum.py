"""Reflection-symmetric vector sums, their reciprocal vectors, and the
relativistic velocity composition they induce.

The sum of two 3-vectors is defined through the quaternion product of the
elements (1, a) and (1, b): dividing the vector part by the scalar part gives

    a (+) b = (a + b + i a x b) / (1 + a.b),

which is associative and nonsingular wherever 1 + a.b stays away from zero,
but not commutative (the i a x b term flips sign).  Composing with the
reciprocal vectors (g +/- i a x g) / (a.g) reflects this sum back onto itself,
and normalizing the product of a boost rotor with a velocity element yields
Einstein velocity composition with an extra imaginary out-of-plane component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import lorentz
from .biquat import EPS_DEG, BiQuaternion, as_cvec, as_rvec, cross, dot_u, qmul
from .errors import DegenerateDenominator, SuperluminalInput


@dataclass(frozen=True)
class ReflSumResult:
    """Value of a reflection-symmetric sum together with the denominator
    1 + a.b it was divided by (useful for conditioning diagnostics)."""

    value: np.ndarray
    denom: complex

    def __post_init__(self):
        object.__setattr__(self, "value", as_cvec(self.value))
        object.__setattr__(self, "denom", complex(self.denom))


def refl_sum(a, b) -> ReflSumResult:
    """(a + b + i a x b) / (1 + a.b), the reflection-symmetric sum.

    Raises :class:`DegenerateDenominator` when |1 + a.b| <= EPS_DEG.
    """
    a = as_cvec(a)
    b = as_cvec(b)
    denom = 1.0 + dot_u(a, b)
    if abs(denom) <= EPS_DEG:
        raise DegenerateDenominator(
            f"1 + a.b = {denom} has magnitude <= {EPS_DEG}; sum is degenerate"
        )
    value = (a + b + 1j * cross(a, b)) / denom
    return ReflSumResult(value=value, denom=denom)


def _sign_factor(sign) -> float:
    if sign in (1, 1.0, "+", "plus"):
        return 1.0
    if sign in (-1, -1.0, "-", "minus"):
        return -1.0
    raise ValueError(f"sign must be +1/-1 or '+'/'-', got {sign!r}")


def reciprocal(a, g, sign="+") -> np.ndarray:
    """Reciprocal vector (g + sign * i a x g) / (a.g).

    Both signs satisfy reciprocal(a, g, sign).a == 1 and reduce the sum with
    ``a`` on the matching side to a value independent of |g|'s scale.  Raises
    :class:`DegenerateDenominator` when |a.g| <= EPS_DEG.
    """
    a = as_cvec(a)
    g = as_cvec(g)
    s = _sign_factor(sign)
    denom = dot_u(a, g)
    if abs(denom) <= EPS_DEG:
        raise DegenerateDenominator(
            f"a.g = {denom} has magnitude <= {EPS_DEG}; no reciprocal exists"
        )
    value = (g + s * 1j * cross(a, g)) / denom
    value.flags.writeable = False
    return value


def refl_sum_limit(a, g_dir, scale: float) -> np.ndarray:
    """refl_sum(a, scale * g_dir): as ``scale`` grows this approaches
    reciprocal(a, g_dir, '+') with error falling off like 1/scale."""
    a = as_rvec(a)
    g_dir = as_rvec(g_dir)
    scale = float(scale)
    if not (math.isfinite(scale) and scale > 0.0):
        raise ValueError(f"scale must be positive and finite, got {scale}")
    if abs(float(np.dot(a, g_dir))) <= EPS_DEG:
        raise DegenerateDenominator(
            "a.g_dir is degenerate; the large-scale limit has no reciprocal target"
        )
    return refl_sum(a, scale * g_dir).value


def mag_sq(w) -> complex:
    """Unconjugated squared magnitude w.w; real for compositions of real
    velocities, where the imaginary component is null against itself."""
    w = as_cvec(w)
    return dot_u(w, w)


def compose_velocities(v, u, c: float = 1.0) -> np.ndarray:
    """Velocity of an object moving at u as seen from the frame moving at v:

        w = (-v + u - (i/c) v x u) / (1 - v.u / c^2),

    i.e. c times the reflection-symmetric sum (-v/c) (+) (u/c).  The result
    may carry an imaginary component perpendicular to the v-u plane; its
    unconjugated magnitude matches the Einstein composition of -v and u.

    Requires |v| < c strictly; |u| may reach c (up to rounding), where the
    composed magnitude closes on c exactly.
    """
    c = lorentz._check_c(c)
    v = as_rvec(v)
    u = as_rvec(u)
    vmag = float(np.linalg.norm(v))
    if vmag >= c:
        raise SuperluminalInput(f"|v| = {vmag} must be strictly below c = {c}")
    umag = float(np.linalg.norm(u))
    # one-ulp grace: a computed unit speed may land just above c
    if umag > c * (1.0 + 1e-12):
        raise SuperluminalInput(f"|u| = {umag} exceeds c = {c}")
    denom = 1.0 - float(np.dot(v, u)) / (c * c)
    if abs(denom) <= EPS_DEG:
        raise DegenerateDenominator(
            f"1 - v.u/c^2 = {denom} has magnitude <= {EPS_DEG}"
        )
    w = (-v + u - (1j / c) * cross(v, u)) / denom
    w.flags.writeable = False
    return w


def normalized_boost_product(v, u, c: float = 1.0) -> tuple[complex, BiQuaternion]:
    """Product of the boost rotor for v with the velocity element (c, u),
    split as prefactor * (c, w).

    The prefactor is the product's scalar part over c (= g*(1 - v.u/c^2));
    the returned element has scalar part exactly c and vector part
    compose_velocities(v, u, c) up to rounding.
    """
    c = lorentz._check_c(c)
    rotor = lorentz.make_boost(v, c)
    product = qmul(rotor.quat, BiQuaternion(c, as_rvec(u)))
    prefactor = product.s / c
    if abs(prefactor) <= EPS_DEG:
        raise DegenerateDenominator(
            "scalar part of the boost product vanishes; cannot normalize"
        )
    w = BiQuaternion(c, product.v / prefactor)
    return prefactor, w
