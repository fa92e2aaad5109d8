"""Exception types raised on invalid algebraic or kinematic input.

Every error below derives from :class:`PauliqError`, so callers (including the
command-line front end) can catch one base class and report the violated
precondition by name.
"""


class PauliqError(ValueError):
    """Base class for all domain errors raised by this package."""


class NullQuaternion(PauliqError):
    """Inversion was requested for an element on (or numerically near) the
    null cone, where the square norm vanishes and no inverse exists."""


class DegenerateDenominator(PauliqError):
    """A reflection-symmetric sum or reciprocal hit a vanishing denominator
    (1 + a.b or a.g too close to zero)."""


class SuperluminalInput(PauliqError):
    """A velocity argument met or exceeded the speed constant c where a
    strictly subluminal (or at most luminal) speed is required."""


class MismatchedC(PauliqError):
    """A boost rotor and an event were built with different speed constants;
    mixing them would silently change units."""


class CollinearInput(PauliqError):
    """The position and velocity are (numerically) parallel, so no rotation
    plane, axis, or angle is defined."""


class NonpositiveC(PauliqError):
    """The speed constant c must be positive and finite."""
