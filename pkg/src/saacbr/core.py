"""Domain types: characterisations, cases and casebases.

A characterisation is anything carrying a partial order of exceptionality
and an irrelevance test. ``FeatureSet`` is the reference instantiation:
finite sets of feature names ordered by superset.
"""

from __future__ import annotations

import abc
import enum
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

logger = logging.getLogger(__name__)

NEW_CASE_ID = "N"
DEFAULT_ID = "default"


class ConfigurationError(ValueError):
    """Inconsistent model configuration or mixed characterisation types."""


class CasebaseError(ValueError):
    """A casebase that cannot be used with the requested configuration."""


class OrderRelation(enum.Enum):
    MORE_EXCEPTIONAL = "more_exceptional"
    LESS_EXCEPTIONAL = "less_exceptional"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class Characterisation(abc.ABC):
    """Abstract characterisation.

    Subclasses supply the strict exceptionality order and the irrelevance
    relation; equality must coincide with the order's equality.
    """

    @abc.abstractmethod
    def exceeds(self, other: "Characterisation") -> bool:
        """Strict order: True iff ``self`` is more exceptional than ``other``."""

    @abc.abstractmethod
    def deems_irrelevant(self, past: "Characterisation") -> bool:
        """True iff a past case with characterisation ``past`` is irrelevant
        to a new case characterised by ``self``."""

    @classmethod
    def least(cls) -> Optional["Characterisation"]:
        """The least element of the order, if the instantiation has one."""
        return None


@dataclass(frozen=True, order=False)
class FeatureSet(Characterisation):
    features: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.features, frozenset):
            object.__setattr__(self, "features", frozenset(self.features))
        for f in self.features:
            if not isinstance(f, str):
                raise TypeError(f"feature names must be strings, got {f!r}")

    @classmethod
    def of(cls, *features: str) -> "FeatureSet":
        return cls(frozenset(features))

    @classmethod
    def parse(cls, text: str) -> "FeatureSet":
        """Parse a comma separated list such as ``"A,B,C"``."""
        return cls(frozenset(t.strip() for t in text.split(",") if t.strip()))

    @classmethod
    def least(cls) -> "FeatureSet":
        return cls()

    def exceeds(self, other: Characterisation) -> bool:
        _check_same_kind(self, other)
        return self.features > other.features

    def deems_irrelevant(self, past: Characterisation) -> bool:
        _check_same_kind(self, past)
        return not self.features >= past.features

    def sorted(self) -> list[str]:
        return sorted(self.features)

    def __len__(self) -> int:
        return len(self.features)

    def __str__(self) -> str:
        return "{" + ",".join(self.sorted()) + "}"


def _check_same_kind(a: Characterisation, b: Characterisation) -> None:
    if type(a) is not type(b):
        raise ConfigurationError(
            f"cannot compare {type(a).__name__} with {type(b).__name__}"
        )


def compare(a: Characterisation, b: Characterisation) -> OrderRelation:
    _check_same_kind(a, b)
    if a == b:
        return OrderRelation.EQUAL
    if a.exceeds(b):
        return OrderRelation.MORE_EXCEPTIONAL
    if b.exceeds(a):
        return OrderRelation.LESS_EXCEPTIONAL
    return OrderRelation.INCOMPARABLE


def is_irrelevant(x_new: Characterisation, x_past: Characterisation) -> bool:
    return x_new.deems_irrelevant(x_past)


@dataclass(frozen=True)
class Case:
    id: str
    characterisation: Characterisation
    outcome: str
    is_default: bool = False

    def __str__(self) -> str:
        return f"{self.id}: {self.characterisation} / {self.outcome}"


@dataclass(frozen=True)
class NewCase:
    characterisation: Characterisation
    id: str = NEW_CASE_ID

    outcome = None

    def __str__(self) -> str:
        return f"{self.id}: {self.characterisation} / ?"


def default_case(characterisation: Characterisation, outcome: str,
                 id: str = DEFAULT_ID) -> Case:
    return Case(id, characterisation, outcome, is_default=True)


@dataclass(frozen=True)
class OutcomeSpace:
    """The two outcome tokens of a run: the default and its complement."""

    default: str
    other: str

    def __post_init__(self):
        if self.default == self.other:
            raise ConfigurationError("the two outcomes must be distinct")

    def complement(self, y: str) -> str:
        if y == self.default:
            return self.other
        if y == self.other:
            return self.default
        raise ConfigurationError(f"unknown outcome {y!r}")

    def __contains__(self, y: object) -> bool:
        return y == self.default or y == self.other


_SIGN_PAIRS = {"+": "-", "-": "+", "−": "+"}


def infer_outcomes(labels: Iterable[str], default_outcome: str,
                   other_outcome: Optional[str] = None) -> OutcomeSpace:
    """Build the outcome pair from the labels seen in data.

    The complement is the unique label other than ``default_outcome``. If the
    data holds no such label it falls back to ``other_outcome`` or, for the
    sign tokens, to the opposite sign.
    """
    labels = set(labels)
    others = labels - {default_outcome}
    if other_outcome is not None:
        others |= {other_outcome} - {default_outcome}
    if len(others) > 1:
        raise CasebaseError(
            "expected exactly two outcome labels, found "
            + ", ".join(sorted(labels | {default_outcome}))
        )
    if others:
        return OutcomeSpace(default_outcome, others.pop())
    if default_outcome in _SIGN_PAIRS:
        return OutcomeSpace(default_outcome, _SIGN_PAIRS[default_outcome])
    return OutcomeSpace(default_outcome, f"not {default_outcome}")


@dataclass(frozen=True)
class Casebase:
    """A finite set of labelled cases with unique ids.

    Use :meth:`build` to construct one from raw cases: it applies the set
    semantics (duplicate characterisation/outcome pairs collapse, cases that
    duplicate the default argument are dropped).
    """

    cases: tuple = ()
    duplicates_dropped: int = field(default=0, compare=False)
    default_duplicates_dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        cases = tuple(sorted(self.cases, key=lambda c: c.id))
        object.__setattr__(self, "cases", cases)
        ids = [c.id for c in cases]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise CasebaseError(f"duplicate case ids: {', '.join(dupes)}")
        for c in cases:
            if c.id == NEW_CASE_ID:
                raise CasebaseError(f"case id {NEW_CASE_ID!r} is reserved for the new case")
            if c.is_default:
                raise CasebaseError(f"case {c.id} is flagged as a default argument")

    @classmethod
    def build(cls, cases: Iterable[Case], default: Optional[Case] = None) -> "Casebase":
        kept = []
        seen = set()
        dropped = 0
        dropped_default = 0
        for case in cases:
            key = (case.characterisation, case.outcome)
            if default is not None and key == (default.characterisation, default.outcome):
                logger.warning("case %s duplicates the default argument; merged into it", case.id)
                dropped_default += 1
                continue
            if key in seen:
                dropped += 1
                continue
            seen.add(key)
            kept.append(case)
        return cls(tuple(kept), dropped, dropped_default)

    def __len__(self) -> int:
        return len(self.cases)

    def __iter__(self):
        return iter(self.cases)

    def labels(self) -> set:
        return {c.outcome for c in self.cases}

    def get(self, case_id: str) -> Case:
        for c in self.cases:
            if c.id == case_id:
                return c
        raise KeyError(case_id)

    def without(self, case_id: str) -> "Casebase":
        return Casebase(tuple(c for c in self.cases if c.id != case_id))

    def with_cases(self, extra: Iterable[Case]) -> "Casebase":
        return Casebase(self.cases + tuple(extra))
