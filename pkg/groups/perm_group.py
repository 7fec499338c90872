"""Permutation groups given by generators, with a lazily cached stabilizer chain"""
import logging
import threading
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from sympy.combinatorics import PermutationGroup as SympyPermutationGroup

from groups.permutation import Permutation, compose_images, invert_images
from utils.errors import BudgetExceededError, ConstructionError, DegreeMismatchError

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]
ChainLevel = Tuple[int, Dict[int, Images]]


class PermutationGroup:
    """The group generated by ``generators`` acting on points 0..degree-1.

    The base and strong generating set come from sympy's deterministic
    incremental Schreier-Sims. They are computed once, under a lock, the
    first time the order, membership or the stabilizer chain is needed.
    Everything else about the group is immutable.
    """

    def __init__(self, generators: Sequence[Permutation], degree: Optional[int] = None,
                 name: Optional[str] = None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise ConstructionError("degree is required for a group without generators")
            degree = generators[0].degree
        if degree < 1:
            raise ConstructionError("permutation groups need at least one point")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree)
        self._degree = degree
        self._generators = generators
        self.name = name
        self.unverified = False
        self._lock = threading.Lock()
        self._chain: Optional[List[ChainLevel]] = None
        self._order: Optional[int] = None
        self._elements: Optional[Set[Images]] = None

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> Tuple[Permutation, ...]:
        return self._generators

    def __repr__(self) -> str:
        label = self.name or "PermutationGroup"
        return f"<{label} degree={self._degree} generators={len(self._generators)}>"

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def nontrivial_generators(self) -> List[Permutation]:
        return [g for g in self._generators if not g.is_identity()]

    # -- stabilizer chain -------------------------------------------------

    def _compute_chain(self) -> List[ChainLevel]:
        gens = self.nontrivial_generators()
        if not gens:
            return []
        sym = SympyPermutationGroup([g.to_sympy() for g in gens])
        base = list(sym.base)
        strong = []
        for s in sym.strong_gens:
            af = list(s.array_form)
            af.extend(range(len(af), self._degree))
            strong.append(tuple(af))

        chain: List[ChainLevel] = []
        for level, point in enumerate(base):
            fixed = base[:level]
            level_gens = [s for s in strong if all(s[b] == b for b in fixed)]
            transversal: Dict[int, Images] = {point: tuple(range(self._degree))}
            queue = deque([point])
            while queue:
                x = queue.popleft()
                u = transversal[x]
                for s in level_gens:
                    y = s[x]
                    if y not in transversal:
                        transversal[y] = compose_images(u, s)
                        queue.append(y)
            chain.append((point, transversal))
        logger.debug("Stabilizer chain for %r: base %s", self, base)
        return chain

    def stabilizer_chain(self) -> List[ChainLevel]:
        """Base points with transversals: ``chain[i][1][y]`` maps ``base[i]`` to ``y``
        and fixes every earlier base point."""
        with self._lock:
            if self._chain is None:
                self._chain = self._compute_chain()
                order = 1
                for _, transversal in self._chain:
                    order *= len(transversal)
                self._order = order
            return self._chain

    def base(self) -> List[int]:
        return [point for point, _ in self.stabilizer_chain()]

    def order(self) -> int:
        """Exact group order (product of the basic orbit lengths)"""
        self.stabilizer_chain()
        return self._order

    def is_trivial(self) -> bool:
        return not self.nontrivial_generators()

    def sift(self, images: Images) -> Tuple[Images, int]:
        """Strip ``images`` through the chain; returns the residue and the level reached"""
        chain = self.stabilizer_chain()
        h = images
        for level, (point, transversal) in enumerate(chain):
            u = transversal.get(h[point])
            if u is None:
                return h, level
            h = compose_images(h, invert_images(u))
        return h, len(chain)

    def contains(self, p: Permutation) -> bool:
        """True iff ``p`` lies in the group generated by the generators"""
        if p.degree != self._degree:
            raise DegreeMismatchError(self._degree, p.degree)
        residue, level = self.sift(p.images)
        return level == len(self.stabilizer_chain()) and all(x == y for x, y in enumerate(residue))

    # -- orbits and transitivity -----------------------------------------

    def orbit(self, point: int) -> List[int]:
        seen = {point}
        queue = deque([point])
        gens = [g.images for g in self._generators]
        while queue:
            x = queue.popleft()
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self) -> List[List[int]]:
        """Partition of the points into orbits, ordered by smallest point"""
        seen: Set[int] = set()
        out = []
        for x in range(self._degree):
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self._degree

    def stabilizer(self, point: int) -> "PermutationGroup":
        """Point stabilizer, generated by Schreier generators"""
        sym = SympyPermutationGroup([g.to_sympy() for g in self.nontrivial_generators()]
                                    or [self.identity().to_sympy()])
        stab = sym.stabilizer(point)
        gens = []
        for s in stab.generators:
            af = list(s.array_form)
            af.extend(range(len(af), self._degree))
            gens.append(Permutation(af, check=False))
        return PermutationGroup(gens, degree=self._degree)

    def is_2_transitive(self) -> bool:
        """Transitive, and the stabilizer of 0 is transitive on the other points"""
        if not self.is_transitive():
            return False
        if self._degree <= 2:
            return True
        return len(self.stabilizer(0).orbit(1)) == self._degree - 1

    # -- enumeration ----------------------------------------------------

    def elements(self, budget: Optional[int] = None) -> Set[Images]:
        """All elements as image tuples; refuses groups larger than ``budget``"""
        if budget is not None and self.order() > budget:
            raise BudgetExceededError(
                f"{self!r} has order {self.order()} > enumeration budget {budget}",
                {"order": self.order(), "budget": budget},
            )
        with self._lock:
            if self._elements is not None:
                return self._elements
        identity = tuple(range(self._degree))
        gens = [g.images for g in self.nontrivial_generators()]
        found = {identity}
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = compose_images(x, g)
                if y not in found:
                    found.add(y)
                    queue.append(y)
        with self._lock:
            self._elements = found
        return found

    def word(self, indices: Iterable[int]) -> Permutation:
        """Product of generators in the given order"""
        result = self.identity()
        for i in indices:
            result = result * self._generators[i]
        return result


def group_from_images(generators: Iterable[Images], degree: int,
                      name: Optional[str] = None) -> PermutationGroup:
    return PermutationGroup([Permutation(g, check=False) for g in generators], degree=degree, name=name)
