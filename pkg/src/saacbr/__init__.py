"""Case-based binary classification with bipolar argumentation.

Past cases argue for their labels, attacking more general cases with the
opposite label and supporting those that agree. A new case is classified by
whether the default argument survives under grounded semantics.
"""

__version__ = "0.1.0"

from .classifier import EvalReport, Prediction, evaluate_loo, evaluate_split, find_spikes, predict
from .config import Mode, ModelConfig
from .core import (
    Case,
    Casebase,
    CasebaseError,
    Characterisation,
    ConfigurationError,
    FeatureSet,
    NewCase,
    OrderRelation,
    OutcomeSpace,
    compare,
    default_case,
    is_irrelevant,
)
from .mining import Attack, BipolarFramework, EdgeKind, attacks_def, mine_framework, supports_def
from .semantics import GroundedResult, Label, defends, grounded_extension, grounded_oracle, least_fixpoint
from .translation import AttackFramework, secondary_attacks, supported_attacks, translate
