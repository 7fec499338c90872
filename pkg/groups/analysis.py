"""Divisor lemma checks and the A_n index-2n arithmetic"""
import logging
import time
from math import comb, factorial
from typing import Optional

from groups.catalog import NamedGroupCatalog, default_catalog
from groups.subgroups import find_subgroup_of_index
from models.group_models import (
    DivisorVerdict, IndexConditionTrace, LemmaDivisorReport, SearchVerdict, SubgroupSearchBudget,
)

logger = logging.getLogger(__name__)

# (n, index) pairs of subgroups of A_n outside the intransitive and imprimitive cases
EXCEPTIONAL_INDEX_PAIRS = frozenset({(6, 15), (5, 6), (6, 6), (7, 15), (8, 15), (9, 120)})


def proper_divisors(m: int):
    return [d for d in range(2, m) if m % d == 0]


def lemma_divisor_check(name: str, n: int,
                        budget: SubgroupSearchBudget = SubgroupSearchBudget(),
                        catalog: Optional[NamedGroupCatalog] = None) -> LemmaDivisorReport:
    """For each proper divisor d of 2n, does the group act transitively on d points?

    Only d = n may admit such an action. Any divisor whose search ran out of
    budget is reported unknown and leaves ``holds`` undecided.
    """
    catalog = catalog or default_catalog()
    G = catalog.group(name)
    started = time.monotonic()
    report = LemmaDivisorReport(group=name, group_order=G.order(), orbit_size=n)
    undecided = False
    holds = True
    for d in proper_divisors(2 * n):
        result = find_subgroup_of_index(G, d, budget)
        verdict = result.verdict if G.order() % d == 0 else SearchVerdict.ABSENT
        expected = None if d == n else SearchVerdict.ABSENT
        agrees = expected is None or verdict in (expected, SearchVerdict.UNKNOWN)
        if verdict == SearchVerdict.UNKNOWN:
            undecided = True
        elif not agrees:
            holds = False
            logger.error("%s acts transitively on %d points", name, d)
        report.divisors.append(DivisorVerdict(
            divisor=d, subgroup_order=G.order() // d if G.order() % d == 0 else 0,
            verdict=verdict, expected=expected, agrees=agrees,
            explored=result.explored,
        ))
    report.holds = None if undecided and holds else holds
    report.elapsed_seconds = round(time.monotonic() - started, 3)
    logger.info("Divisor check for %s (n=%d): holds=%s", name, n, report.holds)
    return report


def largest_r(n: int, index: int) -> int:
    """Largest r <= n/2 (0 when none) with index < C(n, r)"""
    for r in range(n // 2, 0, -1):
        if index < comb(n, r):
            return r
    return 0


def an_index_2n_feasible(n: int) -> IndexConditionTrace:
    """Can a subgroup of A_n have index 2n, judged by the index conditions alone?

    A subgroup of index below C(n, r) for some r <= n/2 must satisfy one of:
    (i) C(n, s) <= index <= C(n, s) s! for some s < r, (ii) n = 2m and
    index = C(n, m)/2, or (iii) (n, index) is an exceptional pair.
    """
    if n < 5:
        raise ValueError("an_index_2n_feasible needs n >= 5")
    index = 2 * n
    r_max = largest_r(n, index)
    hypothesis = r_max > 0
    if not hypothesis:
        r_max = n // 2
    detail = []
    condition_i = False
    for s in range(r_max):
        low, high = comb(n, s), comb(n, s) * factorial(s)
        if low <= index <= high:
            condition_i = True
            detail.append({"s": s, "low": low, "high": high})
    condition_ii_value = comb(n, n // 2) // 2 if n % 2 == 0 else None
    condition_ii = condition_ii_value is not None and condition_ii_value == index
    condition_iii = (n, index) in EXCEPTIONAL_INDEX_PAIRS
    return IndexConditionTrace(
        n=n, index=index, hypothesis_holds=hypothesis, r_max=r_max,
        condition_i=condition_i, condition_i_detail=detail,
        condition_ii=condition_ii, condition_ii_value=condition_ii_value,
        condition_iii=condition_iii,
        feasible=condition_i or condition_ii or condition_iii,
    )
