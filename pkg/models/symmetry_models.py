from pydantic import BaseModel, ConfigDict
from typing import List, Optional, Tuple

from groups.perm_group import PermutationGroup

Edge = Tuple[int, int]


class EdgeAction(BaseModel):
    """Aut(graph) acting on edge indices; edge i is ``edge_index[i]``"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    group: PermutationGroup
    kernel_order: int
    vertex_group_order: int
    edge_index: List[Edge]

    @property
    def faithful(self) -> bool:
        return self.kernel_order == 1


class OrbitStructure(BaseModel):
    vertex_orbits: List[List[int]]
    edge_orbits: List[List[Edge]] = []
    orbitals: List[List[Edge]] = []
    fixed_vertices: List[int] = []

    @property
    def nontrivial_orbits(self) -> List[List[int]]:
        return [o for o in self.vertex_orbits if len(o) > 1]

    def orbital_sizes(self) -> List[int]:
        return sorted(len(o) for o in self.orbitals)

    def edge_orbit_sizes(self) -> List[int]:
        return sorted(len(o) for o in self.edge_orbits)


class UniformityReport(BaseModel):
    """Both readings of n-uniformity: every edge-orbit counts, or fixed edges are exempt"""
    strict: Optional[int] = None
    essential: Optional[int] = None
    fixed_edges: List[Edge] = []

    @property
    def discrepancy(self) -> bool:
        return self.strict != self.essential


class UniformDecomposition(BaseModel):
    """Shape S_n^(r_1) + ... + S_n^(r_s) + I_m of a uniform graph's group"""
    applicable: bool
    reason: str = ""
    n: Optional[int] = None
    multiplicities: List[int] = []
    fixed_count: int = 0
    components: List[List[List[int]]] = []
    bijections_ok: bool = False
    matches_prediction: bool = False
    group_order: int = 0

    def shape(self) -> str:
        parts = [f"S_{self.n}^({r})" if r > 1 else f"S_{self.n}" for r in self.multiplicities]
        if self.fixed_count:
            parts.append(f"I_{self.fixed_count}")
        return " + ".join(parts)
