"""Two-atom laws and the parameter pair (law of p, law of q)."""

import math
from dataclasses import dataclass

from freebrown.errors import InvalidLawError, NormalOperatorError


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidLawError(f"{name} must be finite, got {value}")
    return value


@dataclass(frozen=True)
class TwoAtomLaw:
    """Real probability law weight_low * delta(pos_low) + (1 - weight_low) * delta(pos_high).

    Instances are canonical: pos_low <= pos_high. Use make_two_atom to build
    one from arbitrary input.
    """

    pos_low: float
    pos_high: float
    weight_low: float

    def __post_init__(self):
        _check_finite("pos_low", self.pos_low)
        _check_finite("pos_high", self.pos_high)
        weight = _check_finite("weight_low", self.weight_low)
        if not 0.0 <= weight <= 1.0:
            raise InvalidLawError(f"weight_low must lie in [0, 1], got {weight}")
        if self.pos_low > self.pos_high:
            raise InvalidLawError("positions are not canonical, build the law with make_two_atom")
        if 0.0 < weight < 1.0 and self.pos_low == self.pos_high:
            raise InvalidLawError("atom positions must differ when both atoms carry mass")

    @property
    def weight_high(self) -> float:
        return 1.0 - self.weight_low

    @property
    def is_degenerate(self) -> bool:
        """True when the law is a point mass (p is a constant)."""
        return self.weight_low in (0.0, 1.0) or self.pos_low == self.pos_high

    @property
    def gap(self) -> float:
        return self.pos_high - self.pos_low

    @property
    def mean(self) -> float:
        return self.weight_low * self.pos_low + self.weight_high * self.pos_high

    def atoms(self) -> list[tuple[float, float]]:
        """(position, mass) pairs with positive mass."""
        pairs = [(self.pos_low, self.weight_low), (self.pos_high, self.weight_high)]
        return [(pos, mass) for pos, mass in pairs if mass > 0.0]

    def to_dict(self) -> dict:
        return {
            "pos_low": self.pos_low,
            "pos_high": self.pos_high,
            "weight_low": self.weight_low,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TwoAtomLaw":
        return make_two_atom(data["pos_low"], data["pos_high"], data["weight_low"])


def make_two_atom(pos_low: float, pos_high: float, weight_low: float) -> TwoAtomLaw:
    """Validate and canonicalize a two-atom law.

    Reversed positions are swapped and the weight replaced by its complement,
    so (1, 0, 0.8) and (0, 1, 0.2) describe the same law.
    """
    pos_low = _check_finite("pos_low", pos_low)
    pos_high = _check_finite("pos_high", pos_high)
    weight_low = _check_finite("weight_low", weight_low)
    if not 0.0 <= weight_low <= 1.0:
        raise InvalidLawError(f"weight_low must lie in [0, 1], got {weight_low}")
    if pos_low > pos_high:
        pos_low, pos_high = pos_high, pos_low
        weight_low = 1.0 - weight_low
    return TwoAtomLaw(pos_low=pos_low, pos_high=pos_high, weight_low=weight_low)


@dataclass(frozen=True)
class ModelParams:
    """Laws of the free pair p, q defining X = p + iq."""

    law_p: TwoAtomLaw
    law_q: TwoAtomLaw

    # Names used throughout: a, alpha, alpha' for p and b, beta, beta' for q.

    @property
    def a(self) -> float:
        return self.law_p.weight_low

    @property
    def b(self) -> float:
        return self.law_q.weight_low

    @property
    def alpha(self) -> float:
        return self.law_p.pos_low

    @property
    def alpha_prime(self) -> float:
        return self.law_p.pos_high

    @property
    def beta(self) -> float:
        return self.law_q.pos_low

    @property
    def beta_prime(self) -> float:
        return self.law_q.pos_high

    @property
    def is_degenerate(self) -> bool:
        return self.law_p.is_degenerate or self.law_q.is_degenerate

    def require_non_degenerate(self) -> "ModelParams":
        """Return self, or raise NormalOperatorError when X is normal."""
        if self.law_p.is_degenerate:
            raise NormalOperatorError("law of p is a point mass")
        if self.law_q.is_degenerate:
            raise NormalOperatorError("law of q is a point mass")
        return self

    def swapped(self) -> "ModelParams":
        """Parameters of q + ip (roles of p and q exchanged)."""
        return ModelParams(law_p=self.law_q, law_q=self.law_p)

    def isclose(self, other: "ModelParams", tol: float = 1e-12) -> bool:
        ours = self.to_flat()
        theirs = other.to_flat()
        return all(math.isclose(x, y, rel_tol=0.0, abs_tol=tol) for x, y in zip(ours, theirs))

    def to_flat(self) -> tuple[float, ...]:
        return (self.alpha, self.alpha_prime, self.a, self.beta, self.beta_prime, self.b)

    def to_dict(self) -> dict:
        return {"law_p": self.law_p.to_dict(), "law_q": self.law_q.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> "ModelParams":
        return cls(
            law_p=TwoAtomLaw.from_dict(data["law_p"]),
            law_q=TwoAtomLaw.from_dict(data["law_q"]),
        )


def make_params(
    p_low: float,
    p_high: float,
    p_weight: float,
    q_low: float,
    q_high: float,
    q_weight: float,
) -> ModelParams:
    """Build ModelParams from the six law numbers."""
    return ModelParams(
        law_p=make_two_atom(p_low, p_high, p_weight),
        law_q=make_two_atom(q_low, q_high, q_weight),
    )


def reflect_params(params: ModelParams, flip_p: bool = True, flip_q: bool = False) -> ModelParams:
    """Parameters after p -> alpha + alpha' - p and/or q -> beta + beta' - q.

    The atom positions are unchanged; the masses trade places.
    """
    law_p, law_q = params.law_p, params.law_q
    if flip_p:
        law_p = make_two_atom(law_p.pos_low, law_p.pos_high, 1.0 - law_p.weight_low)
    if flip_q:
        law_q = make_two_atom(law_q.pos_low, law_q.pos_high, 1.0 - law_q.weight_low)
    return ModelParams(law_p=law_p, law_q=law_q)
