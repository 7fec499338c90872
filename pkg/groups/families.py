"""Standard permutation group families: S_n, A_n, L2(q), projective linear groups"""
import itertools
from typing import List, Optional, Sequence, Tuple

from groups.fields import finite_field
from groups.permutation import Permutation
from groups.perm_group import PermutationGroup
from utils.errors import ConstructionError


def symmetric_group(n: int) -> PermutationGroup:
    if n < 1:
        raise ConstructionError("S_n needs n >= 1")
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles([[0, 1]], n), Permutation.from_cycles([list(range(n))], n)]
    return PermutationGroup(gens, degree=n, name=f"S_{n}")


def alternating_group(n: int) -> PermutationGroup:
    """A_n from (0 1 2) and an even long cycle: (0 ... n-1) for odd n, (1 ... n-1) for even n"""
    if n < 1:
        raise ConstructionError("A_n needs n >= 1")
    gens = []
    if n >= 3:
        long_cycle = list(range(n)) if n % 2 else list(range(1, n))
        gens = [Permutation.from_cycles([[0, 1, 2]], n), Permutation.from_cycles([long_cycle], n)]
    return PermutationGroup(gens, degree=n, name=f"A_{n}")


def projective_line_group(q: int) -> PermutationGroup:
    """L2(q) on the q+1 points of the projective line; point q is infinity.

    Generated by x -> x+1, x -> w^2 x (w primitive) and x -> -1/x.
    """
    F = finite_field(q)
    inf = q
    translate = [F.add[x][1] for x in range(q)] + [inf]
    w2 = F.mul[F.primitive][F.primitive]
    scale = [F.mul[w2][x] for x in range(q)] + [inf]
    invert = [inf] + [F.neg[F.inv[x]] for x in range(1, q)] + [0]
    gens = [Permutation(translate), Permutation(scale), Permutation(invert)]
    return PermutationGroup(gens, degree=q + 1, name=f"L2({q})")


def projective_points(n: int, p: int) -> List[Tuple[int, ...]]:
    """Normalized nonzero vectors of GF(p)^n (first nonzero coordinate 1), lexicographic"""
    points = []
    for v in itertools.product(range(p), repeat=n):
        nonzero = [c for c in v if c]
        if nonzero and nonzero[0] == 1:
            points.append(v)
    return points


def _normalize(v: Sequence[int], p: int) -> Tuple[int, ...]:
    F = finite_field(p)
    lead = next(c for c in v if c)
    inv = F.inv[lead]
    return tuple(F.mul[inv][c] for c in v)


def _matrix_action(matrix: Sequence[Sequence[int]], points: List[Tuple[int, ...]], p: int) -> Permutation:
    index = {v: i for i, v in enumerate(points)}
    n = len(matrix)
    images = []
    for v in points:
        w = [sum(v[i] * matrix[i][j] for i in range(n)) % p for j in range(n)]
        images.append(index[_normalize(w, p)])
    return Permutation(images)


def projective_linear_group(n: int, p: int, name: Optional[str] = None) -> PermutationGroup:
    """PGL(n, p) on the points of PG(n-1, p), acting on row vectors.

    Generated by the transvection I + E_01, the permutation matrices of
    (0 1) and (0 1 ... n-1), and diag(w, 1, ..., 1). For (n, p) in
    {(3, 2), (4, 2), (3, 3)} this equals L_n(p).
    """
    if n < 2:
        raise ConstructionError("projective linear groups need n >= 2")
    F = finite_field(p)
    if F.k != 1:
        raise ConstructionError("projective linear groups are built over prime fields only")
    points = projective_points(n, p)

    def identity():
        return [[int(i == j) for j in range(n)] for i in range(n)]

    transvection = identity()
    transvection[0][1] = 1
    swap = identity()
    swap[0], swap[1] = swap[1], swap[0]
    cycle = [[int(j == (i + 1) % n) for j in range(n)] for i in range(n)]
    matrices = [transvection, swap, cycle]
    if p > 2:
        diagonal = identity()
        diagonal[0][0] = F.primitive
        matrices.append(diagonal)
    gens = [_matrix_action(m, points, p) for m in matrices]
    return PermutationGroup(gens, degree=len(points), name=name or f"L{n}({p})")
