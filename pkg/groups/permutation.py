"""Permutations of the points 0..n-1 and cycle notation"""
import math
import re
from typing import Iterable, List, Sequence, Tuple

from sympy.combinatorics import Permutation as SympyPermutation

from utils.errors import DegreeMismatchError, InvalidPermutationError

ELEMENT_SEP_RE = r' *[, ] *'
CYCLE_RE = rf'\(( *\d+({ELEMENT_SEP_RE}\d+)* *)?\) *'


class Permutation:
    """A bijection on {0, ..., degree-1}; point ``i`` maps to ``images[i]``.

    Products act left to right: ``p * q`` sends ``x`` to ``(x p) q``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise InvalidPermutationError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint or overlapping cycles, applied left to right"""
        images = list(range(degree))
        for cycle in cycles:
            if not cycle:
                continue
            if max(cycle) >= degree or min(cycle) < 0:
                raise InvalidPermutationError(f"cycle {tuple(cycle)} outside 0..{degree - 1}")
            if len(set(cycle)) != len(cycle):
                raise InvalidPermutationError(f"repeated point in cycle {tuple(cycle)}")
            step = list(range(degree))
            for a, b in zip(cycle, cycle[1:]):
                step[a] = b
            step[cycle[-1]] = cycle[0]
            images = [step[x] for x in images]
        return cls(images, check=False)

    @classmethod
    def parse(cls, text: str, degree: int = 0) -> "Permutation":
        """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity"""
        cycles: List[List[int]] = []
        stripped = re.sub(r'\s', ' ', text).strip()
        for match in re.finditer(CYCLE_RE + r'|.', stripped):
            cycle = match.group().strip()
            if len(cycle) == 1:
                raise InvalidPermutationError(f"could not parse permutation {text!r}")
            cycle = cycle[1:-1].strip()
            if cycle:
                cycles.append([int(x) for x in re.split(ELEMENT_SEP_RE, cycle)])
        degree = max(degree, max((max(c) for c in cycles), default=-1) + 1)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv, check=False)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by^-1 * self * by``"""
        return compose(compose(by.inverse(), self), by)

    def power(self, k: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point"""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                seen.add(nxt)
                cycle.append(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        """Sorted cycle lengths including fixed points"""
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed, reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def support(self) -> Tuple[int, ...]:
        return tuple(x for x, y in enumerate(self.images) if x != y)

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def shifted(self, offset: int, degree: int) -> "Permutation":
        """Embed into ``degree`` points, moving point ``x`` to ``x + offset``; other points fixed"""
        images = list(range(degree))
        for x, y in enumerate(self.images):
            images[x + offset] = y + offset
        return Permutation(images, check=False)

    def relabel(self, mapping: Sequence[int]) -> "Permutation":
        """Conjugate by the point bijection ``x -> mapping[x]``"""
        images = [0] * self.degree
        for x, y in enumerate(self.images):
            images[mapping[x]] = mapping[y]
        return Permutation(images, check=False)

    def to_sympy(self) -> SympyPermutation:
        return SympyPermutation(list(self.images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Product ``p * q``: ``x`` maps to ``(x p) q``"""
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)
    qi = q.images
    return Permutation([qi[x] for x in p.images], check=False)


def compose_images(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    """Raw-tuple product used in hot loops"""
    return tuple([q[x] for x in p])


def invert_images(p: Tuple[int, ...]) -> Tuple[int, ...]:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def format_permutation_list(perms: Iterable[Permutation]) -> str:
    return ", ".join(p.cycle_string() for p in perms)
