"""Three-valued results and certification verdicts."""

from __future__ import annotations

from enum import Enum


class UnknownReason(str, Enum):
    SCHANUEL_CONDITIONAL = "schanuel_conditional"
    MULTIPLICATIVE_RELATION_POSSIBLE = "multiplicative_relation_possible"
    PRECISION_LIMIT = "precision_limit"


class TriBool:
    """True / False / Unknown(reason, evidence).

    Unknown always carries a reason tag and, when a numeric relation
    search contributed evidence, the height bound it reached.
    """

    __slots__ = ("value", "reason", "evidence", "height")

    def __init__(self, value, reason=None, evidence=None, height=None):
        if value not in ("true", "false", "unknown"):
            raise ValueError(value)
        if value == "unknown" and reason is None:
            raise ValueError("Unknown requires a reason tag")
        self.value = value
        self.reason = reason
        self.evidence = evidence
        self.height = height

    @classmethod
    def true(cls) -> "TriBool":
        return _TRUE

    @classmethod
    def false(cls) -> "TriBool":
        return _FALSE

    @classmethod
    def from_bool(cls, b: bool) -> "TriBool":
        return _TRUE if b else _FALSE

    @classmethod
    def unknown(cls, reason: UnknownReason, evidence=None, height=None) -> "TriBool":
        return cls("unknown", reason=reason, evidence=evidence, height=height)

    def is_true(self) -> bool:
        return self.value == "true"

    def is_false(self) -> bool:
        return self.value == "false"

    def is_unknown(self) -> bool:
        return self.value == "unknown"

    def __eq__(self, other):
        if isinstance(other, bool):
            return (self.value == "true") if other else (self.value == "false")
        if isinstance(other, TriBool):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        if self.is_unknown():
            return f"TriBool(unknown, {self.reason.value})"
        return f"TriBool({self.value})"


_TRUE = TriBool("true")
_FALSE = TriBool("false")


class TranscendenceVerdict:
    """Per-element certification outcome."""

    CERTIFIED = "certified_transcendental"
    REFUTED = "refuted_algebraic"
    UNKNOWN = "unknown"

    __slots__ = ("tag", "value", "reason", "evidence")

    def __init__(self, tag, value=None, reason=None, evidence=None):
        self.tag = tag
        self.value = value  # AlgebraicNumber for refutations
        self.reason = reason
        self.evidence = evidence

    def is_certified(self) -> bool:
        return self.tag == self.CERTIFIED

    def is_refuted(self) -> bool:
        return self.tag == self.REFUTED

    def is_unknown(self) -> bool:
        return self.tag == self.UNKNOWN

    def __repr__(self):
        if self.is_refuted():
            return f"TranscendenceVerdict(refuted, value={self.value!r})"
        if self.is_unknown():
            return f"TranscendenceVerdict(unknown, {self.reason.value})"
        return "TranscendenceVerdict(certified)"
