from pydantic import BaseModel, Field, ConfigDict
from typing import List, Dict, Optional, Tuple
from enum import Enum

from groups.permutation import Permutation
from groups.perm_group import PermutationGroup


class SearchVerdict(str, Enum):
    EXISTS = "exists"
    ABSENT = "absent"
    UNKNOWN = "unknown"


class IsomorphismSpec(BaseModel):
    """An abstract isomorphism given by the images of the source generators"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    source: PermutationGroup
    target: PermutationGroup
    generator_images: Tuple[Permutation, ...]


class IsomorphismCheck(BaseModel):
    verified: bool
    method: str  # "enumeration" or "generator-words"
    notes: List[str] = []


class SubgroupSearchBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_group_order: int = Field(10_000, gt=0)
    max_subgroups_explored: int = Field(200_000, gt=0)
    time_limit: float = Field(600.0, gt=0)


class DivisorVerdict(BaseModel):
    divisor: int
    subgroup_order: int
    verdict: SearchVerdict
    expected: Optional[SearchVerdict] = None
    agrees: bool = True
    explored: int = 0


class LemmaDivisorReport(BaseModel):
    operation: str = "lemma_divisor_check"
    group: str
    group_order: int
    orbit_size: int
    divisors: List[DivisorVerdict] = []
    holds: Optional[bool] = None
    elapsed_seconds: float = 0.0


class IndexConditionTrace(BaseModel):
    n: int
    index: int
    hypothesis_holds: bool
    r_max: int
    condition_i: bool
    condition_i_detail: List[Dict[str, int]] = []
    condition_ii: bool
    condition_ii_value: Optional[int] = None
    condition_iii: bool
    feasible: bool


class CatalogEntry(BaseModel):
    model_config = ConfigDict(extra="ignore")

    name: str
    degree: int
    order: int
    construction: str = "generators"
    base: Optional[str] = None
    generators: List[str] = []
    params: Dict[str, int] = {}
    simple: bool = True
    family: Optional[str] = None
    d_value: Optional[int] = None
    d_verified: bool = True
    extended: bool = False
    orbit_size: Optional[int] = None
    notes: str = ""
