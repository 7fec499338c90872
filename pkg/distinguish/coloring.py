"""Color-preserving elements and distinguishing colorings"""
import logging
from typing import List, Optional, Sequence, Tuple

from groups.permutation import Permutation, compose_images
from groups.perm_group import ChainLevel, PermutationGroup, Images
from models.distinguish_models import Coloring
from utils.errors import DegreeMismatchError

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 10_000


def preserves(g: Permutation, coloring: Coloring) -> bool:
    """color(x g) == color(x) for every point x"""
    if g.degree != coloring.degree:
        raise DegreeMismatchError(g.degree, coloring.degree)
    colors = coloring.colors
    return all(colors[y] == colors[x] for x, y in enumerate(g.images))


def preserving_element(chain: List[ChainLevel], degree: int,
                       classes: Sequence[int]) -> Optional[Images]:
    """A non-identity element of the group with this stabilizer chain that preserves ``classes``.

    Elements are built as products of transversal elements, deepest level
    first. Choosing the level-i factor fixes the image of the i-th base
    point, so every choice whose base point image changes color is cut.
    """
    identity = tuple(range(degree))
    depth = len(chain)

    def search(level: int, suffix: Images, moved: bool) -> Optional[Images]:
        if level == depth:
            if not moved:
                return None
            if all(classes[suffix[x]] == classes[x] for x in range(degree)):
                return suffix
            return None
        point, transversal = chain[level]
        wanted = classes[point]
        for y, u in transversal.items():
            image = suffix[u[point]]
            if classes[image] != wanted:
                continue
            found = search(level + 1, compose_images(u, suffix), moved or y != point)
            if found is not None:
                return found
        return None

    return search(0, identity, False)


def is_distinguishing(G: PermutationGroup, coloring: Coloring, method: str = "backtrack") -> bool:
    """Only the identity preserves the coloring.

    ``method="enumerate"`` checks every element instead; it is limited to
    groups of order at most 10^4.
    """
    if G.degree != coloring.degree:
        raise DegreeMismatchError(G.degree, coloring.degree)
    classes = coloring.classes()
    if method == "enumerate":
        for g in G.elements(ENUMERATION_LIMIT):
            if any(g[x] != x for x in range(G.degree)) and \
                    all(classes[g[x]] == classes[x] for x in range(G.degree)):
                return False
        return True
    return preserving_element(G.stabilizer_chain(), G.degree, classes) is None


def restricted_growth_strings(length: int, d: int, prefix: Tuple[int, ...] = ()):
    """Colorings with at most d colors, one per renaming of colors.

    Each string uses color k only after colors 0..k-1 have appeared.
    """
    if len(prefix) > length:
        return
    values = list(prefix)
    top = max(values, default=-1)

    def extend(position: int, top: int):
        if position == length:
            yield tuple(values)
            return
        for c in range(min(top + 2, d)):
            values.append(c)
            yield from extend(position + 1, max(top, c))
            values.pop()

    yield from extend(len(prefix), top)


def growth_prefixes(length: int, d: int, prefix_length: int) -> List[Tuple[int, ...]]:
    return list(restricted_growth_strings(min(prefix_length, length), d))
