"""Small finite fields as lookup tables"""
from functools import lru_cache
from typing import List, Tuple

from sympy import isprime

from utils.errors import ConstructionError

# modulus coefficients, lowest degree first, monic
IRREDUCIBLE_POLYNOMIALS = {
    4: (2, (1, 1, 1)),      # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),   # x^3 + x + 1
    9: (3, (1, 0, 1)),      # x^2 + 1
}


class FiniteField:
    """GF(q) with elements 0..q-1; 0 and 1 are the field's zero and one."""

    def __init__(self, q: int):
        if isprime(q):
            p, k, modulus = q, 1, None
        elif q in IRREDUCIBLE_POLYNOMIALS:
            p, modulus = IRREDUCIBLE_POLYNOMIALS[q]
            k = len(modulus) - 1
        else:
            raise ConstructionError(f"no field table for q={q}")
        self.q, self.p, self.k = q, p, k
        digits = [self._digits(a) for a in range(q)]
        self.add: List[List[int]] = [[self._number([(x + y) % p for x, y in zip(da, db)])
                                      for db in digits] for da in digits]
        self.mul: List[List[int]] = [[self._number(self._poly_mul(da, db, modulus))
                                      for db in digits] for da in digits]
        self.neg = [row.index(0) for row in self.add]
        self.inv = [0] + [self.mul[a].index(1) for a in range(1, q)]
        self.primitive = self._find_primitive()

    def _digits(self, a: int) -> List[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _number(self, digits: List[int]) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _poly_mul(self, a: List[int], b: List[int], modulus) -> List[int]:
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        if modulus is None:
            return prod[:1]
        for deg in range(len(prod) - 1, k - 1, -1):
            c = prod[deg]
            if c:
                for i, m in enumerate(modulus):
                    prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
        return prod[:k]

    def _find_primitive(self) -> int:
        for a in range(2 if self.q > 2 else 1, self.q):
            x, seen = a, 1
            while x != 1:
                x = self.mul[x][a]
                seen += 1
            if seen == self.q - 1:
                return a
        raise ConstructionError(f"GF({self.q}) has no primitive element")

    def power(self, a: int, e: int) -> int:
        result = 1
        for _ in range(e):
            result = self.mul[result][a]
        return result

    def squares(self) -> Tuple[int, ...]:
        return tuple(sorted({self.mul[a][a] for a in range(1, self.q)}))


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    return FiniteField(q)
