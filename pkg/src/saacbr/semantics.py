"""Grounded semantics for attack-only frameworks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .translation import AttackFramework

ORACLE_LIMIT = 16


class Label(str, enum.Enum):
    IN = "in"
    OUT = "out"
    UNDECIDED = "undec"


@dataclass(frozen=True)
class GroundedResult:
    extension: frozenset
    labelling: dict
    iterations: int
    rounds: tuple = ()  # the G_i sets, in order

    def label(self, arg: str) -> Label:
        return self.labelling[arg]


def defends(extension, b, af: AttackFramework, attackers=None) -> bool:
    if attackers is None:
        attackers = af.attackers()
    return all(attackers[c] & extension for c in attackers[b])


def grounded_extension(af: AttackFramework) -> GroundedResult:
    """Iterate from the unattacked arguments until the defended set is stable."""
    attackers = af.attackers()
    order = af.argument_ids()
    current = frozenset(a for a in order if not attackers[a])
    rounds = [current]
    while True:
        nxt = frozenset(b for b in order if defends(current, b, af, attackers))
        if nxt == current:
            break
        current = nxt
        rounds.append(current)

    labelling = {}
    for a in order:
        if a in current:
            labelling[a] = Label.IN
        elif attackers[a] & current:
            labelling[a] = Label.OUT
        else:
            labelling[a] = Label.UNDECIDED
    return GroundedResult(current, labelling, len(rounds), tuple(rounds))


def _bitmasks(af: AttackFramework):
    ids = af.argument_ids()
    index = {a: i for i, a in enumerate(ids)}
    attackers = [0] * len(ids)
    targets = [0] * len(ids)
    for s, t in af.attacks:
        attackers[index[t]] |= 1 << index[s]
        targets[index[s]] |= 1 << index[t]
    return ids, attackers, targets


def _members(ids, mask) -> frozenset:
    return frozenset(a for i, a in enumerate(ids) if mask >> i & 1)


def _characteristic(mask, attackers, targets) -> int:
    hit = 0
    for i, t in enumerate(targets):
        if mask >> i & 1:
            hit |= t
    out = 0
    for i, att in enumerate(attackers):
        if att & ~hit == 0:
            out |= 1 << i
    return out


def least_fixpoint(af: AttackFramework) -> frozenset:
    """Least fixpoint of the characteristic function, iterated from the empty set."""
    ids, attackers, targets = _bitmasks(af)
    mask = 0
    while True:
        nxt = _characteristic(mask, attackers, targets)
        if nxt == mask:
            return _members(ids, mask)
        mask = nxt


def complete_extensions(af: AttackFramework, limit: int = ORACLE_LIMIT) -> list:
    """All complete extensions, by exhaustive subset enumeration."""
    ids, attackers, targets = _bitmasks(af)
    n = len(ids)
    if n > limit:
        raise ValueError(f"{n} arguments is too many for exhaustive enumeration (limit {limit})")
    found = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(targets[i] & mask for i in combo):
                continue
            if _characteristic(mask, attackers, targets) == mask:
                found.append(_members(ids, mask))
    return found


def grounded_oracle(af: AttackFramework, limit: int = ORACLE_LIMIT) -> frozenset:
    """The subset-minimal complete extension, found by brute force."""
    complete = complete_extensions(af, limit)
    minimal = [e for e in complete if all(e <= other for other in complete)]
    if len(minimal) != 1:
        raise AssertionError("no unique least complete extension")
    return minimal[0]
