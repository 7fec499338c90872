"""Conjugacy classes, normal closures, simplicity and subgroup search"""
import logging
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from sympy import isprime, primefactors

from groups.permutation import Permutation, compose_images, invert_images
from groups.perm_group import PermutationGroup, Images
from models.group_models import SearchVerdict, SubgroupSearchBudget
from utils.errors import BudgetExceededError, MembershipError

logger = logging.getLogger(__name__)

Subgroup = FrozenSet[Images]


def element_order(images: Images) -> int:
    return Permutation(images, check=False).order()


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(primefactors(n)) == 1


def conjugacy_classes(G: PermutationGroup, budget: Optional[int] = None) -> List[List[Images]]:
    """Conjugacy classes as sorted lists, ordered by their smallest element"""
    elements = G.elements(budget)
    gens = [(g.images, invert_images(g.images)) for g in G.nontrivial_generators()]
    seen: Set[Images] = set()
    classes = []
    for x in sorted(elements):
        if x in seen:
            continue
        cls = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g, g_inv in gens:
                z = compose_images(compose_images(g_inv, y), g)
                if z not in cls:
                    cls.add(z)
                    queue.append(z)
        seen.update(cls)
        classes.append(sorted(cls))
    return classes


def normal_closure(G: PermutationGroup, g: Permutation) -> PermutationGroup:
    """Smallest normal subgroup of G containing g.

    Starts from <g> and adds conjugates of its generators by the generators
    of G until the generating set is closed under conjugation.
    """
    if not G.contains(g):
        raise MembershipError(f"{g.cycle_string()} is not an element of {G!r}")
    gens: List[Permutation] = [] if g.is_identity() else [g]
    Z = PermutationGroup(gens, degree=G.degree)
    changed = True
    while changed:
        changed = False
        for s in G.nontrivial_generators():
            for z in list(Z.generators):
                c = z.conjugate(s)
                if not Z.contains(c):
                    gens.append(c)
                    Z = PermutationGroup(gens, degree=G.degree)
                    changed = True
    return Z


def is_abelian(G: PermutationGroup) -> bool:
    gens = G.nontrivial_generators()
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def is_simple(G: PermutationGroup, budget: int = 100_000) -> bool:
    """No normal subgroups other than 1 and G; the trivial group is not simple"""
    order = G.order()
    if order == 1:
        return False
    if isprime(order):
        return True
    if is_abelian(G):
        return False
    if order > budget:
        raise BudgetExceededError(f"simplicity test needs |G| <= {budget}, got {order}",
                                  {"order": order, "budget": budget})
    for cls in conjugacy_classes(G, budget):
        rep = Permutation(cls[0], check=False)
        if rep.is_identity():
            continue
        closure = normal_closure(G, rep)
        if closure.order() != order:
            logger.info("%r: normal closure of %s has order %d", G, rep.cycle_string(), closure.order())
            return False
    return True


@dataclass
class SubgroupSearchResult:
    """Subgroups of a requested order found by cyclic extension"""
    order: int
    subgroups: List[Subgroup] = field(default_factory=list)
    complete: bool = True
    explored: int = 0
    whole_group: bool = False

    @property
    def verdict(self) -> SearchVerdict:
        if self.subgroups or self.whole_group:
            return SearchVerdict.EXISTS
        return SearchVerdict.ABSENT if self.complete else SearchVerdict.UNKNOWN


def _generate(gens: Sequence[Images], degree: int, limit: int) -> Optional[Set[Images]]:
    """Closure of ``gens``; None as soon as it exceeds ``limit`` elements"""
    identity = tuple(range(degree))
    found = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose_images(x, g)
            if y not in found:
                found.add(y)
                if len(found) > limit:
                    return None
                queue.append(y)
    return found


def subgroups_of_order(G: PermutationGroup, target: int,
                       budget: SubgroupSearchBudget = SubgroupSearchBudget(),
                       first_only: bool = False) -> SubgroupSearchResult:
    """Find subgroups of order ``target`` by cyclic extension.

    Every subgroup H of order ``target`` contains an element of order p for
    the largest prime p dividing ``target``; up to conjugacy that element is
    a class representative. From each such cyclic seed the search adds one
    cyclic subgroup of prime-power order at a time, keeping only subgroups
    whose order divides ``target``. H is generated by its prime-power
    elements, so every H containing the seed is reached.
    """
    order = G.order()
    result = SubgroupSearchResult(order=target)
    degree = G.degree
    if target < 1 or order % target:
        return result
    if target == order:
        result.whole_group = True
        return result
    if target == 1:
        result.subgroups.append(frozenset([tuple(range(degree))]))
        return result
    if order > budget.max_group_order:
        logger.warning("Subgroup search skipped: |G|=%d exceeds budget %d", order, budget.max_group_order)
        result.complete = False
        return result

    started = time.monotonic()
    elements = sorted(G.elements())
    orders = {x: element_order(x) for x in elements}
    p = primefactors(target)[-1]

    # one generator per cyclic subgroup of prime-power order dividing target
    cyclic: Dict[FrozenSet[Images], Images] = {}
    for x in elements:
        o = orders[x]
        if _is_prime_power(o) and target % o == 0:
            key = frozenset(_generate([x], degree, o))
            cyclic.setdefault(key, x)
    extensions = sorted(cyclic.items(), key=lambda item: item[1])

    seeds = [cls[0] for cls in conjugacy_classes(G) if orders[cls[0]] == p]
    visited: Set[Subgroup] = set()
    found: Set[Subgroup] = set()
    for seed in seeds:
        start = frozenset(_generate([seed], degree, p))
        stack: List[Tuple[Subgroup, List[Images]]] = [(start, [seed])]
        visited.add(start)
        while stack:
            K, gens = stack.pop()
            result.explored += 1
            if result.explored > budget.max_subgroups_explored or \
                    time.monotonic() - started > budget.time_limit:
                logger.warning("Subgroup search for order %d in %r stopped at budget", target, G)
                result.complete = False
                result.subgroups = sorted(found, key=min)
                return result
            if len(K) == target:
                if K not in found:
                    found.add(K)
                    if first_only:
                        result.subgroups = [K]
                        return result
                continue
            for cyc, y in extensions:
                if cyc <= K:
                    continue
                L = _generate(gens + [y], degree, target)
                if L is None or target % len(L):
                    continue
                L = frozenset(L)
                if L not in visited:
                    visited.add(L)
                    stack.append((L, gens + [y]))
    result.subgroups = sorted(found, key=min)
    return result


def find_subgroup_of_index(G: PermutationGroup, d: int,
                           budget: SubgroupSearchBudget = SubgroupSearchBudget()) -> SubgroupSearchResult:
    order = G.order()
    if d < 1 or order % d:
        return SubgroupSearchResult(order=0)
    return subgroups_of_order(G, order // d, budget, first_only=True)


def subgroup_of_index_exists(G: PermutationGroup, d: int,
                             budget: SubgroupSearchBudget = SubgroupSearchBudget()) -> SearchVerdict:
    """Is there a subgroup of index d (order |G|/d)? Incomplete searches answer unknown."""
    return find_subgroup_of_index(G, d, budget).verdict


def transitive_action_exists(G: PermutationGroup, d: int,
                             budget: SubgroupSearchBudget = SubgroupSearchBudget()) -> SearchVerdict:
    """A transitive action on d points is the action on the cosets of an index-d subgroup."""
    return subgroup_of_index_exists(G, d, budget)


def subgroup_to_group(G: PermutationGroup, subgroup: Subgroup) -> PermutationGroup:
    """Turn an element set into a PermutationGroup with a small generating set"""
    gens: List[Images] = []
    current = {tuple(range(G.degree))}
    for x in sorted(subgroup):
        if x not in current:
            gens.append(x)
            current = _generate(gens, G.degree, len(subgroup))
    return PermutationGroup([Permutation(g, check=False) for g in gens], degree=G.degree)


def subgroup_lattice_oracle(G: PermutationGroup, limit: int = 200) -> Set[Subgroup]:
    """All subgroups as joins of cyclic subgroups, closed under pairwise joins.

    Quadratic in the number of subgroups; only meant as an independent check
    for small groups.
    """
    elements = G.elements(limit)
    degree = G.degree
    lattice: Set[Subgroup] = {frozenset(_generate([x], degree, len(elements))) for x in elements}
    frontier = set(lattice)
    while frontier:
        new: Set[Subgroup] = set()
        for A in frontier:
            for B in list(lattice):
                if A <= B or B <= A:
                    continue
                J = frozenset(_generate(sorted(A | B), degree, len(elements)))
                if J not in lattice and J not in new:
                    new.add(J)
        lattice |= new
        frontier = new
    return lattice


def has_subgroup_of_order_oracle(G: PermutationGroup, target: int, limit: int = 200) -> bool:
    return any(len(H) == target for H in subgroup_lattice_oracle(G, limit))
