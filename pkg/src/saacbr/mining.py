"""Mining the bipolar debate from a casebase and a new case."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .config import ModelConfig
from .core import Case, Casebase, CasebaseError, Characterisation, NewCase, infer_outcomes, is_irrelevant


class EdgeKind(str, enum.Enum):
    DIRECT = "direct"
    EQUAL = "equal"
    IRRELEVANCE = "irrelevance"
    SUPPORTED = "supported"
    SECONDARY = "secondary"


class Attack(NamedTuple):
    source: str
    target: str
    kind: EdgeKind


Argument = Union[Case, NewCase]


@dataclass(frozen=True)
class BipolarFramework:
    arguments: dict
    attacks: frozenset
    supports: frozenset
    default_id: str
    new_id: str

    @property
    def default(self) -> Case:
        return self.arguments[self.default_id]

    @property
    def new_case(self) -> NewCase:
        return self.arguments[self.new_id]

    def argument_ids(self) -> list[str]:
        return sorted(self.arguments)

    def attack_pairs(self) -> set:
        return {(a.source, a.target) for a in self.attacks}

    def attacks_of_kind(self, *kinds: EdgeKind) -> set:
        return {(a.source, a.target) for a in self.attacks if a.kind in kinds}


def _strictly_between(pool: Iterable[Case], upper: Characterisation, lower: Characterisation,
                      outcome=None) -> bool:
    for g in pool:
        if outcome is not None and g.outcome != outcome:
            continue
        if upper.exceeds(g.characterisation) and g.characterisation.exceeds(lower):
            return True
    return False


def attack_kind(a: Case, b: Case, pool: Iterable[Case]):
    """Kind of the attack from ``a`` on ``b`` (``None`` when there is none)."""
    if a.outcome == b.outcome:
        return None
    xa, xb = a.characterisation, b.characterisation
    if xa == xb:
        return EdgeKind.EQUAL
    if xa.exceeds(xb) and not _strictly_between(pool, xa, xb, outcome=a.outcome):
        return EdgeKind.DIRECT
    return None


def attacks_def(a: Case, b: Case, pool: Iterable[Case]) -> bool:
    return attack_kind(a, b, pool) is not None


def supports_def(a: Case, b: Case, pool: Iterable[Case]) -> bool:
    # Unlike attacks, a witness of either outcome blocks a support.
    if a.outcome != b.outcome:
        return False
    xa, xb = a.characterisation, b.characterisation
    return xa.exceeds(xb) and not _strictly_between(pool, xa, xb)


def argument_pool(casebase: Casebase, default: Case) -> list:
    """Casebase plus default, as a set: default duplicates are merged away."""
    pool = [default]
    for c in casebase:
        if c.id == default.id:
            raise CasebaseError(f"case id {c.id!r} clashes with the default argument")
        if (c.characterisation, c.outcome) == (default.characterisation, default.outcome):
            continue
        pool.append(c)
    return pool


def mine_framework(casebase: Casebase, default: Case, x_new: Characterisation,
                   config: ModelConfig) -> BipolarFramework:
    infer_outcomes(casebase.labels(), default.outcome, config.other_outcome)
    pool = argument_pool(casebase, default)
    new = NewCase(x_new)
    if any(c.id == new.id for c in pool):
        raise CasebaseError(f"case id {new.id!r} is reserved for the new case")

    attacks = set()
    supports = set()
    for a in pool:
        for b in pool:
            if a is b:
                continue
            kind = attack_kind(a, b, pool)
            if kind is not None:
                attacks.add(Attack(a.id, b.id, kind))
            elif config.uses_supports and supports_def(a, b, pool):
                supports.add((a.id, b.id))
    for a in pool:
        if is_irrelevant(x_new, a.characterisation):
            attacks.add(Attack(new.id, a.id, EdgeKind.IRRELEVANCE))

    arguments = {c.id: c for c in pool}
    arguments[new.id] = new
    return BipolarFramework(arguments, frozenset(attacks), frozenset(supports),
                            default.id, new.id)
