"""Exception hierarchy for the symmetry toolkit"""
from typing import Any, Dict, Optional


class SymmetryToolkitError(Exception):
    """Base class for all toolkit errors"""


class DegreeMismatchError(SymmetryToolkitError, ValueError):
    """Two permutations (or a permutation and a group) act on different point counts"""

    def __init__(self, left: int, right: int):
        super().__init__(f"Degree mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class InvalidPermutationError(SymmetryToolkitError, ValueError):
    """Images are not a bijection, or cycle notation could not be parsed"""


class BudgetExceededError(SymmetryToolkitError):
    """An enumeration or search ran past its configured budget"""

    def __init__(self, message: str, partial: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.partial = partial or {}


class MembershipError(SymmetryToolkitError, ValueError):
    """An element was expected to lie in a group but does not"""


class IsomorphismSpecError(SymmetryToolkitError, ValueError):
    """Generator images do not describe an isomorphism"""


class GraphFormatError(SymmetryToolkitError, ValueError):
    """Malformed graph6 or edge-list input"""


class ConstructionError(SymmetryToolkitError, ValueError):
    """Invalid parameters for a graph or group construction"""


class CatalogError(SymmetryToolkitError, KeyError):
    """Unknown catalog name"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown catalog entry"
