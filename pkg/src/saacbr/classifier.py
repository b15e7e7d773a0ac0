"""End-to-end prediction, spike detection and evaluation."""

from __future__ import annotations

import random
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field, replace
from typing import Optional

from .config import Mode, ModelConfig
from .core import Case, Casebase, CasebaseError, Characterisation, OrderRelation, compare, infer_outcomes
from .mining import BipolarFramework, mine_framework
from .semantics import GroundedResult, grounded_extension
from .translation import AttackFramework, translate

__all__ = [
    "EvalReport", "Mode", "ModelConfig", "Prediction", "default_is_least",
    "evaluate_loo", "evaluate_split", "find_spikes", "predict",
]


@dataclass(frozen=True)
class Prediction:
    outcome: str
    grounded: GroundedResult
    framework: AttackFramework
    bipolar: BipolarFramework
    spikes: frozenset

    @property
    def default_accepted(self) -> bool:
        return self.framework.default_id in self.grounded.extension

    @property
    def provenance(self) -> dict:
        return self.framework.provenance()

    def to_dict(self) -> dict:
        af = self.framework
        return {
            "outcome": self.outcome,
            "default": af.default_id,
            "default_accepted": self.default_accepted,
            "extension": sorted(self.grounded.extension),
            "labelling": {a: self.grounded.labelling[a].value for a in af.argument_ids()},
            "iterations": self.grounded.iterations,
            "spikes": sorted(self.spikes),
            "attacks": [
                {"source": s, "target": t, "provenance": sorted(k.value for k in kinds)}
                for (s, t), kinds in sorted(af.provenance().items())
            ],
            "supports": [{"source": s, "target": t} for s, t in sorted(self.bipolar.supports)],
        }


def find_spikes(baf: BipolarFramework, default: Optional[Case] = None) -> frozenset:
    """Casebase arguments with no directed path to the default.

    Paths run over attacks and supports of the mined (untranslated) framework.
    """
    target = default.id if default is not None else baf.default_id
    preds = defaultdict(set)
    for s, t in baf.attack_pairs() | set(baf.supports):
        preds[t].add(s)
    reached = {target}
    queue = deque([target])
    while queue:
        node = queue.popleft()
        for p in preds[node]:
            if p not in reached:
                reached.add(p)
                queue.append(p)
    return frozenset(a for a in baf.arguments
                     if a not in reached and a not in (baf.new_id, target))


def default_is_least(casebase: Casebase, config: ModelConfig) -> bool:
    """True if no case is below or beside the default characterisation."""
    x_d = config.default_characterisation
    return all(compare(c.characterisation, x_d) in (OrderRelation.MORE_EXCEPTIONAL, OrderRelation.EQUAL)
               for c in casebase)


def predict(casebase: Casebase, config: ModelConfig, x_new: Characterisation) -> Prediction:
    outcomes = infer_outcomes(casebase.labels(), config.default_outcome, config.other_outcome)
    default = config.default_argument()
    baf = mine_framework(casebase, default, x_new, config)
    af = translate(baf, config)
    grounded = grounded_extension(af)
    outcome = outcomes.default if default.id in grounded.extension else outcomes.other
    return Prediction(outcome, grounded, af, baf, find_spikes(baf, default))


@dataclass
class EvalReport:
    rows: list = field(default_factory=list)  # (case id, actual, predicted, spike count)
    outcomes: tuple = ()

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def correct(self) -> int:
        return sum(1 for _, actual, predicted, _ in self.rows if actual == predicted)

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.rows else 0.0

    @property
    def confusion(self) -> dict:
        """Counts keyed by ``(actual, predicted)``, zero-filled over both outcomes."""
        counts = Counter((actual, predicted) for _, actual, predicted, _ in self.rows)
        return {(a, p): counts.get((a, p), 0) for a in self.outcomes for p in self.outcomes}

    @property
    def spike_counts(self) -> list:
        return [n for *_, n in self.rows]


def _fold(train: Casebase, held_out: Case, config: ModelConfig, outcomes) -> tuple:
    cfg = config if config.other_outcome else replace(config, other_outcome=outcomes.other)
    p = predict(train, cfg, held_out.characterisation)
    return (held_out.id, held_out.outcome, p.outcome, len(p.spikes))


def evaluate_loo(casebase: Casebase, config: ModelConfig) -> EvalReport:
    """Leave-one-out: each case is predicted from all the others."""
    if len(casebase) < 2:
        raise CasebaseError("leave-one-out needs at least two cases")
    outcomes = infer_outcomes(casebase.labels(), config.default_outcome, config.other_outcome)
    rows = [_fold(casebase.without(c.id), c, config, outcomes) for c in casebase]
    return EvalReport(rows, (outcomes.default, outcomes.other))


def evaluate_split(casebase: Casebase, config: ModelConfig, ratio: float = 0.8,
                   seed: int = 0) -> EvalReport:
    """Single random train/test split; ``ratio`` is the training fraction."""
    if not 0 < ratio < 1:
        raise ValueError("split ratio must lie strictly between 0 and 1")
    if len(casebase) < 2:
        raise CasebaseError("a split needs at least two cases")
    outcomes = infer_outcomes(casebase.labels(), config.default_outcome, config.other_outcome)
    cases = list(casebase)
    random.Random(seed).shuffle(cases)
    n_train = min(max(1, round(ratio * len(cases))), len(cases) - 1)
    train = Casebase(tuple(cases[:n_train]))
    test = sorted(cases[n_train:], key=lambda c: c.id)
    rows = [_fold(train, c, config, outcomes) for c in test]
    return EvalReport(rows, (outcomes.default, outcomes.other))
