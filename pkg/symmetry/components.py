"""Automorphisms of disconnected graphs"""
from typing import Dict, Optional

from graphs.graph import connected_components, induced_subgraph
from groups.constructions import fixed_points
from groups.perm_group import PermutationGroup
from models.graph_models import Graph
from symmetry.automorphisms import automorphism_group


def lemma_disconnected_check(graph: Graph, aut: Optional[PermutationGroup] = None) -> Dict[str, object]:
    """Which way a disconnected graph with simple Aut can look.

    Either only one component moves, and Aut is that component's group plus
    fixed points, or Aut has order 2.
    """
    aut = aut or automorphism_group(graph)
    components = connected_components(graph)
    if len(components) < 2:
        return {"applies": False, "case": "connected", "holds": True}
    fixed = set(fixed_points(aut))
    moving = [c for c in components if any(v not in fixed for v in c)]
    if len(moving) == 1:
        component = moving[0]
        inner = automorphism_group(induced_subgraph(graph, component))
        holds = inner.order() == aut.order()
        return {"applies": True, "case": "single-component", "holds": holds,
                "component_size": len(component), "fixed_points": len(fixed)}
    holds = aut.order() == 2
    return {"applies": True, "case": "order-two", "holds": holds,
            "moving_components": len(moving)}
