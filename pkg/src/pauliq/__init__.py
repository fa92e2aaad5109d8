"""Complexified Pauli-quaternion kinematics.

A small algebra/kinematics library built around quaternions whose basis
vectors square to +1 (realized by the standard 2x2 spin matrices): the
reflection-symmetric velocity sum, quaternionic Lorentz boosts with their
built-in spin-like imaginary term, the small-c rotational limits, a 2x2
matrix verifier, and seeded property campaigns for every exact identity.
"""

from .backend import BACKEND_NAME
from .biquat import (
    EPS_DEG,
    EPS_NULL,
    PRODUCT_TABLE,
    BiQuaternion,
    as_cvec,
    as_rvec,
    basis,
    conj,
    cross,
    dot_u,
    inverse,
    max_abs_diff,
    qmul,
    scalar_mul,
    square_norm,
)
from .checks import (
    CheckReport,
    PropertyResult,
    RunConfig,
    format_report,
    run_suite,
)
from .errors import (
    CollinearInput,
    DegenerateDenominator,
    MismatchedC,
    NonpositiveC,
    NullQuaternion,
    PauliqError,
    SuperluminalInput,
)
from .lorentz import (
    BoostRotor,
    Event,
    RotationalLimitValue,
    TransformedEvent,
    boost_event,
    einstein_add,
    event_quat,
    gamma,
    interval,
    interval_of,
    le_boost,
    m_vector,
    make_boost,
    n_vector,
    rotational_limit,
)
from .pauli_matrix import (
    SIGMA,
    SIGMA_0,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    adjugate,
    det,
    from_matrix,
    spin_term,
    to_matrix,
)
from .reflsum import (
    ReflSumResult,
    compose_velocities,
    mag_sq,
    normalized_boost_product,
    reciprocal,
    refl_sum,
    refl_sum_limit,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "BiQuaternion",
    "BoostRotor",
    "CheckReport",
    "CollinearInput",
    "DegenerateDenominator",
    "EPS_DEG",
    "EPS_NULL",
    "Event",
    "MismatchedC",
    "NonpositiveC",
    "NullQuaternion",
    "PRODUCT_TABLE",
    "PauliqError",
    "PropertyResult",
    "ReflSumResult",
    "RotationalLimitValue",
    "RunConfig",
    "SIGMA",
    "SIGMA_0",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SuperluminalInput",
    "TransformedEvent",
    "adjugate",
    "as_cvec",
    "as_rvec",
    "basis",
    "boost_event",
    "compose_velocities",
    "conj",
    "cross",
    "det",
    "dot_u",
    "einstein_add",
    "event_quat",
    "format_report",
    "from_matrix",
    "gamma",
    "interval",
    "interval_of",
    "inverse",
    "le_boost",
    "m_vector",
    "mag_sq",
    "make_boost",
    "max_abs_diff",
    "n_vector",
    "normalized_boost_product",
    "qmul",
    "reciprocal",
    "refl_sum",
    "refl_sum_limit",
    "rotational_limit",
    "run_suite",
    "scalar_mul",
    "spin_term",
    "square_norm",
    "to_matrix",
    "__version__",
]
