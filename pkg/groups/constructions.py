"""Direct sums, parallel sums, fixed points and permutation isomorphism"""
import logging
from collections import Counter, deque
from typing import Dict, List, Optional, Sequence, Tuple

from groups.permutation import Permutation, compose_images
from groups.perm_group import PermutationGroup, Images
from models.group_models import IsomorphismSpec, IsomorphismCheck
from utils.errors import (
    BudgetExceededError, ConstructionError, DegreeMismatchError, IsomorphismSpecError,
)

logger = logging.getLogger(__name__)

ISOMORPHISM_ENUMERATION_LIMIT = 10_000


def _juxtapose(g: Images, h: Images) -> Permutation:
    offset = len(g)
    return Permutation(g + tuple(y + offset for y in h), check=False)


def direct_sum(G: PermutationGroup, H: PermutationGroup) -> PermutationGroup:
    """G ⊕ H on the disjoint union, G's points first"""
    degree = G.degree + H.degree
    gens = [g.shifted(0, degree) for g in G.nontrivial_generators()]
    gens += [h.shifted(G.degree, degree) for h in H.nontrivial_generators()]
    name = f"{G.name}+{H.name}" if G.name and H.name else None
    return PermutationGroup(gens, degree=degree, name=name)


def direct_sum_all(groups: Sequence[PermutationGroup]) -> PermutationGroup:
    result = groups[0]
    for G in groups[1:]:
        result = direct_sum(result, G)
    return result


def trivial_group(n: int) -> PermutationGroup:
    return PermutationGroup([], degree=n, name=f"I_{n}")


def validate_isomorphism(spec: IsomorphismSpec,
                         limit: int = ISOMORPHISM_ENUMERATION_LIMIT) -> IsomorphismCheck:
    """Check that the generator images define an isomorphism.

    Groups up to ``limit`` elements are checked completely by walking the
    Cayley graph of the source. Larger groups only get order checks on
    generators and products of two generators, and the result is marked
    unverified.
    """
    G, H, images = spec.source, spec.target, spec.generator_images
    if len(images) != len(G.generators):
        raise IsomorphismSpecError(
            f"{len(G.generators)} source generators but {len(images)} images")
    for h in images:
        if h.degree != H.degree:
            raise DegreeMismatchError(H.degree, h.degree)
        if not H.contains(h):
            raise IsomorphismSpecError(f"image {h.cycle_string()} is not in the target group")
    if G.order() != H.order():
        raise IsomorphismSpecError(f"orders differ: {G.order()} vs {H.order()}")

    if G.order() <= limit:
        src_gens = [g.images for g in G.generators]
        tgt_gens = [h.images for h in images]
        start = tuple(range(G.degree))
        mapping: Dict[Images, Images] = {start: tuple(range(H.degree))}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            fx = mapping[x]
            for g, h in zip(src_gens, tgt_gens):
                y = compose_images(x, g)
                fy = compose_images(fx, h)
                known = mapping.get(y)
                if known is None:
                    mapping[y] = fy
                    queue.append(y)
                elif known != fy:
                    raise IsomorphismSpecError("generator images violate the homomorphism property")
        if len(set(mapping.values())) != len(mapping) or len(mapping) != H.order():
            raise IsomorphismSpecError("generator images do not induce a bijection")
        return IsomorphismCheck(verified=True, method="enumeration")

    notes = []
    for i, (g, h) in enumerate(zip(G.generators, images)):
        if g.order() != h.order():
            raise IsomorphismSpecError(f"generator {i}: element orders {g.order()} vs {h.order()}")
        for j, (g2, h2) in enumerate(zip(G.generators, images)):
            if (g * g2).order() != (h * h2).order():
                raise IsomorphismSpecError(f"product of generators {i},{j}: element orders differ")
    notes.append(f"order {G.order()} above {limit}: only words of length <= 2 were checked")
    logger.warning("Isomorphism between groups of order %d left unverified", G.order())
    return IsomorphismCheck(verified=False, method="generator-words", notes=notes)


def parallel_sum(spec: IsomorphismSpec,
                 limit: int = ISOMORPHISM_ENUMERATION_LIMIT) -> PermutationGroup:
    """G ||_psi H: the diagonal {(g, psi(g))} acting on the disjoint union"""
    check = validate_isomorphism(spec, limit)
    gens = [_juxtapose(g.images, h.images)
            for g, h in zip(spec.source.generators, spec.generator_images)]
    G, H = spec.source, spec.target
    name = f"{G.name}||{H.name}" if G.name and H.name else None
    result = PermutationGroup(gens, degree=G.degree + H.degree, name=name)
    result.unverified = not check.verified
    return result


def parallel_multiple(G: PermutationGroup, k: int) -> PermutationGroup:
    """G^(k): k copies of G linked by the identity isomorphism"""
    if k < 1:
        raise ConstructionError("parallel multiple needs k >= 1")
    gens = []
    for g in G.generators:
        images: Tuple[int, ...] = ()
        for copy in range(k):
            images += tuple(y + copy * G.degree for y in g.images)
        gens.append(Permutation(images, check=False))
    name = f"{G.name}^({k})" if G.name else None
    return PermutationGroup(gens, degree=k * G.degree, name=name)


def fixed_points(G: PermutationGroup) -> List[int]:
    return [x for x in range(G.degree) if all(g.images[x] == x for g in G.generators)]


def strip_fixed_points(G: PermutationGroup) -> Tuple[Optional[PermutationGroup], int, List[int]]:
    """Split G = G_0 ⊕ I_k.

    Returns ``(G_0, k, moved)`` where ``moved[i]`` is the original point that
    becomes point ``i`` of G_0. G_0 is None when every point is fixed.
    """
    fixed = set(fixed_points(G))
    moved = [x for x in range(G.degree) if x not in fixed]
    if not moved:
        return None, len(fixed), []
    index = {x: i for i, x in enumerate(moved)}
    gens = [Permutation([index[g.images[x]] for x in moved], check=False)
            for g in G.nontrivial_generators()]
    return PermutationGroup(gens, degree=len(moved)), len(fixed), moved


def same_group(G: PermutationGroup, H: PermutationGroup) -> bool:
    """Equality as permutation groups on the same point set"""
    if G.degree != H.degree or G.order() != H.order():
        return False
    return all(H.contains(g) for g in G.generators)


def _cycle_type(images: Images) -> Tuple[int, ...]:
    return Permutation(images, check=False).cycle_type()


def _find_relabeling(G: PermutationGroup, gens: List[Images], targets: List[Images],
                     H: PermutationGroup) -> Optional[List[int]]:
    """Find lambda with lambda(x g_i) = lambda(x) h_i for all generators, orbit by orbit"""
    h_orbit_size = {}
    for orb in H.orbits():
        for y in orb:
            h_orbit_size[y] = len(orb)
    g_orbits = G.orbits()
    lam: Dict[int, int] = {}
    used = set()

    def extend(orbit_index: int) -> bool:
        if orbit_index == len(g_orbits):
            return True
        orbit = g_orbits[orbit_index]
        x0 = orbit[0]
        for y0 in range(H.degree):
            if y0 in used or h_orbit_size[y0] != len(orbit):
                continue
            added = {x0: y0}
            ok = True
            queue = deque([x0])
            while queue and ok:
                x = queue.popleft()
                y = added[x]
                for g, h in zip(gens, targets):
                    x2, y2 = g[x], h[y]
                    if x2 in added:
                        if added[x2] != y2:
                            ok = False
                            break
                    elif y2 in used or y2 in added.values():
                        ok = False
                        break
                    else:
                        added[x2] = y2
                        queue.append(x2)
            if not ok:
                continue
            lam.update(added)
            used.update(added.values())
            if extend(orbit_index + 1):
                return True
            for x in added:
                del lam[x]
            used.difference_update(added.values())
        return False

    if extend(0):
        return [lam[x] for x in range(G.degree)]
    return None


def are_permutation_isomorphic(G: PermutationGroup, H: PermutationGroup,
                               budget: int = ISOMORPHISM_ENUMERATION_LIMIT,
                               max_assignments: int = 1_000_000) -> bool:
    """Is there a relabeling of points carrying G onto H?

    Cheap invariants (degree, order, orbit sizes, cycle types of all
    elements) are compared first. Then the images of G's generators are
    chosen among elements of H of matching cycle type and a relabeling is
    propagated along the orbits.
    """
    if G.degree != H.degree or G.order() != H.order():
        return False
    if sorted(map(len, G.orbits())) != sorted(map(len, H.orbits())):
        return False
    g_elements = G.elements(budget)
    h_elements = H.elements(budget)
    if Counter(map(_cycle_type, g_elements)) != Counter(map(_cycle_type, h_elements)):
        return False
    gens = [g.images for g in G.nontrivial_generators()]
    if not gens:
        return True

    by_type: Dict[Tuple[int, ...], List[Images]] = {}
    for h in sorted(h_elements):
        by_type.setdefault(_cycle_type(h), []).append(h)
    candidates = [by_type.get(_cycle_type(g), []) for g in gens]
    chosen: List[Images] = []
    attempts = 0

    def assign(i: int) -> bool:
        nonlocal attempts
        if i == len(gens):
            attempts += 1
            if attempts > max_assignments:
                raise BudgetExceededError("permutation isomorphism search budget exhausted")
            return _find_relabeling(G, gens, chosen, H) is not None
        for h in candidates[i]:
            if any(_cycle_type(compose_images(gens[j], gens[i])) != _cycle_type(compose_images(chosen[j], h))
                   for j in range(i)):
                continue
            chosen.append(h)
            if assign(i + 1):
                return True
            chosen.pop()
        return False

    return assign(0)


def coset_action(G: PermutationGroup, H: PermutationGroup,
                 budget: int = 100_000) -> PermutationGroup:
    """Action of G on the right cosets Hx by right multiplication (coset H first)"""
    if H.degree != G.degree:
        raise DegreeMismatchError(G.degree, H.degree)
    subgroup = sorted(H.elements(budget))

    def key(x: Images) -> Images:
        return min(compose_images(h, x) for h in subgroup)

    start = tuple(range(G.degree))
    reps = [start]
    index = {key(start): 0}
    gens = [g.images for g in G.generators]
    actions: List[List[int]] = [[] for _ in gens]
    i = 0
    while i < len(reps):
        x = reps[i]
        for a, g in enumerate(gens):
            y = compose_images(x, g)
            k = key(y)
            if k not in index:
                index[k] = len(reps)
                reps.append(y)
            actions[a].append(index[k])
        i += 1
    degree = len(reps)
    name = f"{G.name}on{degree}" if G.name else None
    return PermutationGroup([Permutation(a) for a in actions], degree=degree, name=name)
