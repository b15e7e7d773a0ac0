"""Flattening a bipolar framework into an attack-only one.

Supports are replaced by complex attacks computed in one pass over the
mined relations:

* supported attack: ``a`` supports ... supports ``c``, and ``c`` attacks ``b``;
* secondary attack: ``a`` attacks ``c``, and ``c`` supports ... supports ``b``.

Mediated attacks are never generated.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .config import ModelConfig
from .mining import Attack, BipolarFramework, EdgeKind


@dataclass(frozen=True)
class AttackFramework:
    arguments: dict
    edges: frozenset  # of Attack; one entry per (source, target, provenance)
    default_id: str
    new_id: str

    @classmethod
    def from_pairs(cls, arguments, attacks) -> "AttackFramework":
        """Plain framework over bare ids; every edge counts as a direct attack."""
        args = {a: a for a in arguments}
        attacks = list(attacks)
        for s, t in attacks:
            if s not in args or t not in args:
                raise ValueError(f"attack ({s}, {t}) mentions an unknown argument")
        edges = frozenset(Attack(s, t, EdgeKind.DIRECT) for s, t in attacks)
        return cls(args, edges, None, None)

    @property
    def attacks(self) -> set:
        return {(e.source, e.target) for e in self.edges}

    def argument_ids(self) -> list[str]:
        return sorted(self.arguments)

    def provenance(self) -> dict:
        prov = defaultdict(set)
        for e in self.edges:
            prov[(e.source, e.target)].add(e.kind)
        return {k: frozenset(v) for k, v in prov.items()}

    def attackers(self) -> dict:
        out = {a: set() for a in self.arguments}
        for s, t in self.attacks:
            out[t].add(s)
        return out

    def edges_of_kind(self, *kinds: EdgeKind) -> set:
        return {(e.source, e.target) for e in self.edges if e.kind in kinds}


def _support_reach(baf: BipolarFramework) -> dict:
    """Map each argument to the arguments reachable by a non-empty support chain."""
    succ = defaultdict(set)
    for s, t in baf.supports:
        succ[s].add(t)
    reach = {}
    for start in baf.arguments:
        seen = set()
        stack = list(succ[start])
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(succ[node])
        reach[start] = seen
    return reach


def supported_attacks(baf: BipolarFramework) -> set:
    reach = _support_reach(baf)
    attacked_by = defaultdict(set)
    for s, t in baf.attack_pairs():
        attacked_by[s].add(t)
    edges = set()
    for a, ends in reach.items():
        for c in ends:
            for b in attacked_by[c]:
                edges.add((a, b))
    return edges


def secondary_attacks(baf: BipolarFramework) -> set:
    reach = _support_reach(baf)
    edges = set()
    for s, c in baf.attack_pairs():
        # the new case only removes irrelevant cases; it never propagates
        if s == baf.new_id:
            continue
        for b in reach[c]:
            edges.add((s, b))
    return edges


def translate(baf: BipolarFramework, config: ModelConfig) -> AttackFramework:
    edges = set(baf.attacks)
    edges.update(Attack(s, t, EdgeKind.SUPPORTED) for s, t in supported_attacks(baf))
    if config.secondary_attacks:
        edges.update(Attack(s, t, EdgeKind.SECONDARY) for s, t in secondary_attacks(baf))
    return AttackFramework(dict(baf.arguments), frozenset(edges), baf.default_id, baf.new_id)
