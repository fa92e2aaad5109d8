"""Quaternionic Lorentz boosts of events, the standard real boost for
comparison, and the rotational limits both products approach as c -> 0.

An event (t, X) becomes the element (c*t, X); a boost to velocity V is the
unit-norm rotor (g, -g*V/c) with g the Lorentz factor.  Left-multiplying the
event element by the rotor reproduces the boosted time exactly and the
boosted position up to an extra imaginary vector -i g (V x X) / c out of the
time-slice, the algebra's built-in spin analogue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .biquat import EPS_DEG, BiQuaternion, as_rvec, cross, dot_u, qmul
from .errors import CollinearInput, MismatchedC, NonpositiveC, SuperluminalInput

LIMIT_KINDS = ("reflection", "lorentz_einstein")


def _check_c(c) -> float:
    c = float(c)
    if not (math.isfinite(c) and c > 0.0):
        raise NonpositiveC(f"speed constant c = {c} must be positive and finite")
    return c


@dataclass(frozen=True)
class Event:
    """A time and position carrying the speed constant they were expressed
    with, so mixed-unit boosts fail loudly."""

    t: float
    x: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        t = float(self.t)
        if not math.isfinite(t):
            raise ValueError("event time must be finite")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "x", as_rvec(self.x))
        object.__setattr__(self, "c", _check_c(self.c))


@dataclass(frozen=True)
class BoostRotor:
    """Unit-norm boost element (g, -g v / c); build via :func:`make_boost`."""

    g: float
    v: np.ndarray
    c: float
    quat: BiQuaternion

    def __post_init__(self):
        object.__setattr__(self, "g", float(self.g))
        object.__setattr__(self, "v", as_rvec(self.v))
        object.__setattr__(self, "c", _check_c(self.c))


@dataclass(frozen=True)
class TransformedEvent:
    """Boosted time plus the boosted position, whose imaginary part is the
    spin-like vector the quaternion product adds on top of the real boost."""

    t_prime: float
    x_prime: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t_prime", float(self.t_prime))
        x = np.array(self.x_prime, dtype=np.complex128)
        if x.shape != (3,):
            raise ValueError(f"expected a 3-vector, got shape {x.shape}")
        x.flags.writeable = False
        object.__setattr__(self, "x_prime", x)


@dataclass(frozen=True)
class RotationalLimitValue:
    """Scaled boost product at one small c, plus the rotation data it should
    approach: cos(theta) for the scalar and i*sin(theta)*axis for the vector."""

    scalar: complex
    vector: np.ndarray
    cos_theta: float
    axis: np.ndarray
    sin_theta: float

    @property
    def target_vector(self) -> np.ndarray:
        return 1j * self.sin_theta * self.axis

    def deviation(self) -> float:
        """Largest componentwise distance from the limiting rotation value."""
        dv = float(np.max(np.abs(self.vector - self.target_vector)))
        return max(abs(self.scalar - self.cos_theta), dv)


def gamma(v, c: float = 1.0) -> float:
    """Lorentz factor 1 / sqrt(1 - |v|^2 / c^2) for a subluminal velocity."""
    c = _check_c(c)
    v = as_rvec(v)
    beta_sq = float(np.dot(v, v)) / (c * c)
    if beta_sq >= 1.0:
        raise SuperluminalInput(
            f"|v| = {math.sqrt(float(np.dot(v, v)))} must be strictly below c = {c}"
        )
    return 1.0 / math.sqrt(1.0 - beta_sq)


def event_quat(e: Event) -> BiQuaternion:
    """The element (c*t, X) representing an event; its square norm is the
    invariant interval."""
    return BiQuaternion(e.c * e.t, e.x)


def make_boost(v, c: float = 1.0) -> BoostRotor:
    """Rotor (g, -g v / c) boosting into the frame moving at velocity v.

    The rotor has unit square norm: g^2 (1 - |v|^2/c^2) == 1.
    """
    c = _check_c(c)
    v = as_rvec(v)
    g = gamma(v, c)
    quat = BiQuaternion(g, (-g / c) * v)
    return BoostRotor(g=g, v=v, c=c, quat=quat)


def boost_event(r: BoostRotor, e: Event) -> TransformedEvent:
    """Left-multiply the event element by the rotor.

    Componentwise: t' = g*t - g*(x.v)/c^2 and
    x' = g*(x - t*v) - i*g*(v x x)/c.  The real parts are the standard boost;
    the imaginary vector is the extra spin-like term.
    """
    if r.c != e.c:
        raise MismatchedC(f"rotor c = {r.c} differs from event c = {e.c}")
    product = qmul(r.quat, event_quat(e))
    return TransformedEvent(t_prime=product.s.real / e.c, x_prime=product.v)


def interval(e: Event) -> float:
    """(c t)^2 - x.x, the invariant quadratic form of an event."""
    return (e.c * e.t) ** 2 - float(np.dot(e.x, e.x))


def interval_of(te: TransformedEvent, c: float = 1.0) -> complex:
    """(c t')^2 - x'.x' with the unconjugated dot product.

    For transforms of real events the imaginary part cancels to rounding:
    the spin term contributes -(i g (v x x)/c)^2 plus a vanishing cross term.
    """
    c = _check_c(c)
    return (c * te.t_prime) ** 2 - dot_u(te.x_prime, te.x_prime)


def le_boost(r: BoostRotor, e: Event) -> tuple[float, np.ndarray]:
    """Standard real Lorentz boost of the event, for comparison against
    :func:`boost_event`: t' = g*(t - x.v/c^2) and
    x' = x + ((g - 1)*(x.v)/|v|^2 - g*t) * v.  Identity at v = 0."""
    if r.c != e.c:
        raise MismatchedC(f"rotor c = {r.c} differs from event c = {e.c}")
    v = r.v
    c = e.c
    vv = float(np.dot(v, v))
    if vv == 0.0:
        return e.t, np.array(e.x)
    xv = float(np.dot(e.x, v))
    t_prime = r.g * (e.t - xv / (c * c))
    x_prime = e.x + ((r.g - 1.0) * xv / vv - r.g * e.t) * v
    return t_prime, x_prime


def einstein_add(v, u, c: float = 1.0) -> np.ndarray:
    """Relativistic velocity addition v (+) u by parallel/perpendicular
    decomposition: (v + u_par + u_perp/g) / (1 + v.u/c^2).

    Exact passthrough at v = 0.  Raises on |v| >= c and on a vanishing
    denominator (only reachable for |u| > c).
    """
    c = _check_c(c)
    v = as_rvec(v)
    u = as_rvec(u)
    g = gamma(v, c)
    vv = float(np.dot(v, v))
    if vv == 0.0:
        return np.array(u)
    uv = float(np.dot(u, v))
    denom = 1.0 + uv / (c * c)
    if abs(denom) <= EPS_DEG:
        raise SuperluminalInput(
            f"velocity-addition denominator 1 + v.u/c^2 = {denom} is degenerate"
        )
    u_par = (uv / vv) * v
    u_perp = u - u_par
    return (v + u_par + u_perp / g) / denom


def _plane_or_raise(x, v) -> tuple[np.ndarray, np.ndarray, float, float, np.ndarray, float]:
    x = as_rvec(x)
    v = as_rvec(v)
    xmag = float(np.linalg.norm(x))
    vmag = float(np.linalg.norm(v))
    cr = cross(v, x)
    crn = float(np.linalg.norm(cr))
    if crn <= EPS_DEG:
        raise CollinearInput(
            f"|v x x| = {crn} <= {EPS_DEG}: x and v define no rotation plane"
        )
    return x, v, xmag, vmag, cr, crn


def m_vector(x, v) -> np.ndarray:
    """Unit vector along (x.v) v/|v|^2 - x: the in-plane axis the real-boost
    product rotates about in the small-c limit.  Orthogonal to n_vector."""
    x, v, _, _, _, _ = _plane_or_raise(x, v)
    b = (float(np.dot(x, v)) / float(np.dot(v, v))) * v - x
    out = b / np.linalg.norm(b)
    out.flags.writeable = False
    return out


def n_vector(x, v) -> np.ndarray:
    """Unit normal of the v-x plane, along v x x: the quaternion product's
    rotation axis in the small-c limit."""
    _, _, _, _, cr, crn = _plane_or_raise(x, v)
    out = cr / crn
    out.flags.writeable = False
    return out


def rotational_limit(kind: str, x, v, t: float = 1.0, c: float = 1.0) -> RotationalLimitValue:
    """Evaluate -c * (product) / (g |x| |v|) at one value of c, where the
    product pairs the boost element for v with the event (t, x).

    Here |v| > c is the intended regime, so the Lorentz factor is complex;
    the principal square-root branch makes 1/g -> +i |v|/c as c -> 0.  With
    kind="reflection" the quaternion product is used and the value approaches
    cos(theta) + i sin(theta) n (n the plane normal); with
    kind="lorentz_einstein" the real-boost pairing is used and the vector
    part approaches i sin(theta) m instead (m the in-plane axis).  Either
    way the deviation from its limit falls off like c.
    """
    if kind not in LIMIT_KINDS:
        raise ValueError(f"kind must be one of {LIMIT_KINDS}, got {kind!r}")
    c = _check_c(c)
    t = float(t)
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    x, v, xmag, vmag, cr, crn = _plane_or_raise(x, v)

    xv = float(np.dot(x, v))
    g = 1.0 / np.sqrt(np.complex128(1.0 - (vmag / c) ** 2))
    prefac = -c / (g * xmag * vmag)

    if kind == "reflection":
        rotor = BiQuaternion(g, (-g / c) * v)
        product = qmul(rotor, BiQuaternion(c * t, x))
        scalar = prefac * product.s
        vector = prefac * product.v
        axis = cr / crn
    else:
        vv = vmag * vmag
        scalar = prefac * (c * g * (t - xv / (c * c)))
        vector = prefac * (x + ((g - 1.0) * xv / vv - g * t) * v)
        axis = ((xv / vv) * v - x)
        axis = axis / np.linalg.norm(axis)

    cos_theta = max(-1.0, min(1.0, xv / (xmag * vmag)))
    sin_theta = min(1.0, crn / (xmag * vmag))
    vector = np.asarray(vector, dtype=np.complex128)
    vector.flags.writeable = False
    axis = np.asarray(axis, dtype=np.float64)
    axis.flags.writeable = False
    return RotationalLimitValue(
        scalar=complex(scalar),
        vector=vector,
        cos_theta=cos_theta,
        axis=axis,
        sin_theta=sin_theta,
    )
