from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .core import DEFAULT_ID, Case, Characterisation, ConfigurationError, FeatureSet, default_case


class Mode(str, enum.Enum):
    AACBR = "aacbr"
    SAACBR = "saacbr"


@dataclass(frozen=True)
class ModelConfig:
    """How to build and read the debate for a new case.

    ``mode`` selects attacks-only (``aacbr``) or attacks plus supports
    (``saacbr``). Secondary attacks exist only when supports do.
    """

    mode: Mode = Mode.SAACBR
    secondary_attacks: bool = False
    default_outcome: str = "-"
    default_characterisation: Characterisation = field(default_factory=FeatureSet)
    other_outcome: Optional[str] = None
    default_id: str = DEFAULT_ID

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.secondary_attacks and self.mode is not Mode.SAACBR:
            raise ConfigurationError("secondary attacks require mode 'saacbr'")

    @property
    def uses_supports(self) -> bool:
        return self.mode is Mode.SAACBR

    def default_argument(self) -> Case:
        return default_case(self.default_characterisation, self.default_outcome, self.default_id)
