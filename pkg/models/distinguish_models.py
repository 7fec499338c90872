from pydantic import BaseModel, Field, ConfigDict, model_validator
from typing import List, Optional, Sequence, Tuple
from enum import Enum


class MinimalityProof(str, Enum):
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budget-exceeded"


class Coloring(BaseModel):
    """Colors 1..d on points 0..len(colors)-1; not every color has to occur"""
    model_config = ConfigDict(frozen=True)

    colors: Tuple[int, ...]
    d: int = Field(..., ge=1)

    @model_validator(mode="after")
    def check_range(self):
        for c in self.colors:
            if not 1 <= c <= self.d:
                raise ValueError(f"color {c} outside 1..{self.d}")
        return self

    @classmethod
    def from_classes(cls, classes: Sequence[int], d: Optional[int] = None) -> "Coloring":
        """From 0-based color classes"""
        d = d if d is not None else max(classes, default=0) + 1
        return cls(colors=tuple(c + 1 for c in classes), d=max(d, 1))

    def classes(self) -> Tuple[int, ...]:
        return tuple(c - 1 for c in self.colors)

    @property
    def degree(self) -> int:
        return len(self.colors)


class DistinguishingVerdict(BaseModel):
    action: str = "group"
    degree: int
    group_order: int
    value: Optional[int] = None
    witness: Optional[Coloring] = None
    certificate_checked: bool = False
    proof_of_minimality: MinimalityProof = MinimalityProof.EXHAUSTED
    lower_bound: int = 1
    upper_bound: Optional[int] = None
    nodes_expanded: int = 0
    kernel_order: int = 1
    notes: List[str] = []
    elapsed_seconds: float = 0.0

    @property
    def kernel_nontrivial(self) -> bool:
        return self.kernel_order > 1

    def summary(self) -> dict:
        """CLI-facing JSON without timing"""
        return {
            "value": self.value,
            "witness": list(self.witness.colors) if self.witness else None,
            "nodes_expanded": self.nodes_expanded,
            "proof_of_minimality": self.proof_of_minimality.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "kernel_order": self.kernel_order,
        }
