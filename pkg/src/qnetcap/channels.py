"""Closed-form two-way capacities of distillable point-to-point channels.

For the channel families handled here (pure-loss, quantum-limited amplifier,
qudit dephasing, qudit erasure, multiband pure-loss) the two-way quantum,
entanglement-distribution and secret-key capacities coincide, so a single
number in bits per channel use describes all three tasks.  All functions are
pure and operate on immutable values; they are safe to call concurrently.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import InvalidParameter, ParameterRegimeWarning

LOSSY = "lossy"
AMPLIFIER = "amplifier"
DEPHASING = "dephasing"
ERASURE = "erasure"
MULTIBAND_LOSSY = "multiband_lossy"

CHANNEL_KINDS = (LOSSY, AMPLIFIER, DEPHASING, ERASURE, MULTIBAND_LOSSY)

#: Absolute tolerance for capacity comparisons everywhere in the package.
#: Far above accumulated rounding of the few transcendental calls involved,
#: far below any physically meaningful distinction.
CAPACITY_TOL = 1e-9

_PROB_SUM_TOL = 1e-12


def _require_finite(field, value):
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise InvalidParameter(field, value, "must be a real number")
    if not math.isfinite(value):
        raise InvalidParameter(field, value, "must be finite")
    return float(value)


def _require_int(field, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidParameter(field, value, "must be an integer")
    if value < minimum:
        raise InvalidParameter(field, value, f"must be >= {minimum}")
    return value


@dataclass(frozen=True)
class ChannelSpec:
    """Tagged description of one distillable channel.

    Exactly the fields belonging to ``kind`` may be set; use the module
    constructors (:func:`lossy`, :func:`amplifier`, ...) rather than filling
    fields by hand.  Instances are immutable and validated on construction.
    """

    kind: str
    eta: float | None = None
    gain: float | None = None
    probs: tuple[float, ...] | None = None
    p_erase: float | None = None
    dim: int | None = None
    bands: int | None = None

    def __post_init__(self):
        if self.kind not in CHANNEL_KINDS:
            raise InvalidParameter(
                "kind", self.kind, f"must be one of {', '.join(CHANNEL_KINDS)}"
            )
        validator = _VALIDATORS[self.kind]
        validator(self)

    def _forbid(self, *fields):
        for field in fields:
            if getattr(self, field) is not None:
                raise InvalidParameter(
                    field, getattr(self, field),
                    f"does not apply to a {self.kind} channel",
                )


def _validate_lossy(spec: ChannelSpec):
    spec._forbid("gain", "probs", "p_erase", "dim", "bands")
    eta = _require_finite("eta", spec.eta)
    if not 0.0 < eta < 1.0:
        raise InvalidParameter("eta", eta, "must lie strictly inside (0, 1)")
    object.__setattr__(spec, "eta", eta)


def _validate_amplifier(spec: ChannelSpec):
    spec._forbid("eta", "probs", "p_erase", "dim", "bands")
    gain = _require_finite("gain", spec.gain)
    if not gain > 1.0:
        raise InvalidParameter("gain", gain, "must be strictly greater than 1")
    object.__setattr__(spec, "gain", gain)


def _validate_dephasing(spec: ChannelSpec):
    spec._forbid("eta", "gain", "p_erase", "bands")
    if spec.probs is None:
        raise InvalidParameter("probs", None, "required for a dephasing channel")
    probs = tuple(_require_finite("probs", p) for p in spec.probs)
    if len(probs) < 2:
        raise InvalidParameter("probs", probs, "needs at least two entries")
    for p in probs:
        if not 0.0 <= p <= 1.0:
            raise InvalidParameter("probs", p, "entries must lie in [0, 1]")
    total = math.fsum(probs)
    if abs(total - 1.0) > _PROB_SUM_TOL:
        raise InvalidParameter("probs", probs, f"must sum to 1 (got {total!r})")
    dim = len(probs) if spec.dim is None else _require_int("dim", spec.dim, 2)
    if dim != len(probs):
        raise InvalidParameter(
            "dim", dim, f"must equal the number of probabilities ({len(probs)})"
        )
    object.__setattr__(spec, "probs", probs)
    object.__setattr__(spec, "dim", dim)
    if max(probs[1:]) > 0.5:
        # The qubit formula is usually quoted for flip probability <= 1/2;
        # the general entropy form is valid anyway, so accept but flag.
        warnings.warn(
            f"dephasing distribution {probs} puts more than 1/2 on a phase rotation",
            ParameterRegimeWarning,
            stacklevel=4,
        )


def _validate_erasure(spec: ChannelSpec):
    spec._forbid("eta", "gain", "probs", "bands")
    p = _require_finite("p_erase", spec.p_erase)
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter("p_erase", p, "must lie in [0, 1]")
    dim = 2 if spec.dim is None else _require_int("dim", spec.dim, 2)
    object.__setattr__(spec, "p_erase", p)
    object.__setattr__(spec, "dim", dim)


def _validate_multiband(spec: ChannelSpec):
    spec._forbid("gain", "probs", "p_erase", "dim")
    eta = _require_finite("eta", spec.eta)
    if not 0.0 < eta < 1.0:
        raise InvalidParameter("eta", eta, "must lie strictly inside (0, 1)")
    bands = _require_int("bands", spec.bands, 1)
    object.__setattr__(spec, "eta", eta)
    object.__setattr__(spec, "bands", bands)


_VALIDATORS = {
    LOSSY: _validate_lossy,
    AMPLIFIER: _validate_amplifier,
    DEPHASING: _validate_dephasing,
    ERASURE: _validate_erasure,
    MULTIBAND_LOSSY: _validate_multiband,
}


def lossy(eta: float) -> ChannelSpec:
    """Pure-loss bosonic channel with transmissivity ``eta`` in (0, 1)."""
    return ChannelSpec(LOSSY, eta=eta)


def amplifier(gain: float) -> ChannelSpec:
    """Quantum-limited amplifier with gain strictly above 1."""
    return ChannelSpec(AMPLIFIER, gain=gain)


def dephasing(probs, dim: int | None = None) -> ChannelSpec:
    """Qudit dephasing channel with phase-flip distribution ``probs``.

    ``probs[k]`` is the probability of k phase rotations; the dimension is
    the length of the vector (``dim``, when given, must match it).
    """
    return ChannelSpec(DEPHASING, probs=tuple(probs), dim=dim)


def erasure(p: float, dim: int = 2) -> ChannelSpec:
    """Qudit erasure channel with erasure probability ``p`` in [0, 1].

    The full range of ``p`` is accepted even though the closed form is often
    quoted for p <= 1/2; the formula (1 - p) log2 d is stated without that
    restriction and stays non-negative on all of [0, 1].
    """
    return ChannelSpec(ERASURE, p_erase=p, dim=dim)


def multiband_lossy(eta: float, bands: int) -> ChannelSpec:
    """``bands`` independent pure-loss channels of equal transmissivity.

    Heterogeneous bands are modeled as parallel edges at the graph level,
    not here.
    """
    return ChannelSpec(MULTIBAND_LOSSY, eta=eta, bands=bands)


def binary_entropy(p: float) -> float:
    """Binary Shannon entropy in bits, with H2(0) = H2(1) = 0 exactly."""
    p = _require_finite("p", p)
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter("p", p, "must lie in [0, 1]")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def shannon_entropy(probs) -> float:
    """Shannon entropy in bits of a probability vector (0 log 0 := 0)."""
    values = [_require_finite("probs", p) for p in probs]
    for p in values:
        if p < 0.0:
            raise InvalidParameter("probs", p, "entries must be non-negative")
    total = math.fsum(values)
    if abs(total - 1.0) > _PROB_SUM_TOL:
        raise InvalidParameter("probs", tuple(values), f"must sum to 1 (got {total!r})")
    return -math.fsum(p * math.log2(p) for p in values if p > 0.0)


def capacity(spec: ChannelSpec) -> float:
    """Two-way capacity of ``spec`` in bits per channel use.

    Finite and non-negative for every valid spec; the open-interval
    constraints on eta and gain keep the lossy/amplifier formulas away from
    their divergence at zero effective loss.
    """
    if spec.kind == LOSSY:
        return -math.log2(1.0 - spec.eta)
    if spec.kind == AMPLIFIER:
        return -math.log2(1.0 - 1.0 / spec.gain)
    if spec.kind == DEPHASING:
        # H({p_k}) <= log2 d mathematically; clamp the few-ulp rounding dip.
        return max(0.0, math.log2(spec.dim) - shannon_entropy(spec.probs))
    if spec.kind == ERASURE:
        return (1.0 - spec.p_erase) * math.log2(spec.dim)
    if spec.kind == MULTIBAND_LOSSY:
        return -spec.bands * math.log2(1.0 - spec.eta)
    raise InvalidParameter("kind", spec.kind, "unhandled channel kind")


def db_to_transmissivity(loss_db: float) -> float:
    """Convert a non-negative loss in dB to a transmissivity."""
    loss_db = _require_finite("loss_db", loss_db)
    if loss_db < 0.0:
        raise InvalidParameter("loss_db", loss_db, "must be non-negative")
    return 10.0 ** (-loss_db / 10.0)


def transmissivity_to_db(eta: float) -> float:
    """Convert a transmissivity in (0, 1] to its loss in dB."""
    eta = _require_finite("eta", eta)
    if not 0.0 < eta <= 1.0:
        raise InvalidParameter("eta", eta, "must lie in (0, 1]")
    return -10.0 * math.log10(eta)


def fiber_transmissivity(length_km: float, rate_db_per_km: float = 0.2) -> float:
    """Transmissivity of a fiber span at the given attenuation rate."""
    length_km = _require_finite("length_km", length_km)
    if length_km < 0.0:
        raise InvalidParameter("length_km", length_km, "must be non-negative")
    rate_db_per_km = _require_finite("rate_db_per_km", rate_db_per_km)
    if rate_db_per_km <= 0.0:
        raise InvalidParameter("rate_db_per_km", rate_db_per_km, "must be positive")
    return db_to_transmissivity(length_km * rate_db_per_km)
