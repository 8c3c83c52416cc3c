"""
Enumeration of the mu-admissible set of GSp_2g and per-stratum statistics
"""
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Set, Tuple

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, GenusOutOfRangeError, IndexOutOfRangeError
from app.models.group import ExtAffineElement, GroupContext
from app.models.stratum import StratumRecord
from app.services.alcove_model import alcove_from_raised_sets
from app.services.weyl_core import reduced_word, subword_products, translation

logger = logging.getLogger(__name__)

RaisedChain = Tuple[Tuple[int, ...], ...]


def _check_genus(g: int, cap: int) -> None:
    if not 1 <= g <= cap:
        raise GenusOutOfRangeError(f"genus must lie in 1..{cap}, got {g}")


def _balanced_starts(g: int) -> List[FrozenSet[int]]:
    """Subsets of {1..2g} holding exactly one of k, 2g+1-k for every k <= g"""
    n = 2 * g
    return [
        frozenset(k if pick else n + 1 - k for k, pick in zip(range(1, g + 1), picks))
        for picks in product((True, False), repeat=g)
    ]


def _half_chains(g: int, start: FrozenSet[int]) -> Iterator[Tuple[FrozenSet[int], ...]]:
    """Raised-set chains S_0 -> ... -> S_g of permissible alcoves.

    Position p = i+1 may enter at step i -> i+1, pushing one element out. A
    pair {k, 2g+1-k} with k <= p can no longer gain a member, so it must keep
    at least one; the second half of the alcove is forced by duality.
    """
    n = 2 * g
    stack = [(start,)]
    while stack:
        chain = stack.pop()
        i = len(chain) - 1
        current = chain[-1]
        if i == g:
            if all((k in current) != (n + 1 - k in current) for k in range(1, g + 1)):
                yield chain
            continue
        p = i + 1
        options = [current]
        if p not in current:
            options.extend((current - {j}) | {p} for j in sorted(current))
        for option in options:
            if any(k not in option and n + 1 - k not in option for k in range(1, p + 1)):
                continue
            stack.append(chain + (option,))


def _full_chain(g: int, half: Tuple[FrozenSet[int], ...]) -> List[FrozenSet[int]]:
    """S_{2g-i} = theta(complement of S_i)"""
    n = 2 * g
    sets = list(half)
    for i in range(g - 1, 0, -1):
        sets.append(frozenset(n + 1 - k for k in range(1, n + 1) if k not in half[i]))
    return sets


def _chains_from_start(g: int, start: Tuple[int, ...]) -> List[RaisedChain]:
    """Worker entry point: every full chain growing from one starting set"""
    return [
        tuple(tuple(sorted(s)) for s in _full_chain(g, half))
        for half in _half_chains(g, frozenset(start))
    ]


def enumerate_permissible_chains(g: int) -> List[RaisedChain]:
    starts = [tuple(sorted(s)) for s in _balanced_starts(g)]
    workers = max(1, settings.ENUMERATION_WORKERS)
    if workers == 1 or len(starts) == 1:
        batches: Iterable[List[RaisedChain]] = (_chains_from_start(g, s) for s in starts)
        return [chain for batch in batches for chain in batch]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        batches = list(pool.map(_chains_from_start, [g] * len(starts), starts))
    return [chain for batch in batches for chain in batch]


@lru_cache(maxsize=None)
def _enumerate_admissible(g: int) -> Tuple[StratumRecord, ...]:
    started = time.perf_counter()
    ctx = GroupContext.symplectic(g)
    alcoves = [
        alcove_from_raised_sets(ctx, [frozenset(s) for s in chain])
        for chain in enumerate_permissible_chains(g)
    ]
    alcoves.sort()
    records = tuple(StratumRecord(a) for a in alcoves)
    logger.info(f"g={g}: {len(records)} admissible elements in {time.perf_counter() - started:.2f}s")
    return records


def enumerate_admissible(g: int) -> List[StratumRecord]:
    """Adm(mu) for GSp_2g as permissible alcoves, lexicographic in alcove coordinates"""
    _check_genus(g, settings.MAX_GENUS)
    return list(_enumerate_admissible(g))


def maximal_elements(g: int) -> List[ExtAffineElement]:
    """The translations t^{w(mu)}: 0/1 vectors with nu_j + nu_{2g+1-j} = 1"""
    ctx = GroupContext.symplectic(g)
    result = []
    for picks in product((1, 0), repeat=g):
        nu = list(picks) + [1 - p for p in reversed(picks)]
        result.append(translation(ctx, nu))
    return result


def enumerate_admissible_oracle(g: int) -> Set[ExtAffineElement]:
    """Union of the Bruhat lower intervals of all t^{w(mu)} via subwords"""
    if g > settings.ORACLE_MAX_GENUS:
        raise BudgetExceededError(
            f"subword oracle is limited to g <= {settings.ORACLE_MAX_GENUS}, got {g}"
        )
    _check_genus(g, settings.ORACLE_MAX_GENUS)
    found: Set[ExtAffineElement] = set()
    for m in maximal_elements(g):
        found |= subword_products(reduced_word(m))
    logger.info(f"g={g}: oracle produced {len(found)} elements")
    return found


def p_rank(x: ExtAffineElement) -> int:
    """Half the number of fixed points of the finite part"""
    fixed = sum(1 for i, wi in enumerate(x.w, start=1) if wi == i)
    return fixed // 2


def component_count_A_J(g: int, J: Iterable[int]) -> int:
    """(k_0+1)...(k_r+1) with k_0 = 0 and k_j = i_j - i_{j-1}"""
    indices = sorted(set(J))
    if not indices:
        raise IndexOutOfRangeError("J must be non-empty")
    if indices[0] < 0 or indices[-1] > g:
        raise IndexOutOfRangeError(f"J must be a subset of 0..{g}, got {indices}")
    count = 1
    for prev, cur in zip(indices, indices[1:]):
        count *= cur - prev + 1
    return count


def length_histogram(g: int) -> List[int]:
    """Number of admissible elements of each length 0..g(g+1)/2"""
    counts = Counter(rec.dim for rec in enumerate_admissible(g))
    return [counts.get(k, 0) for k in range(g * (g + 1) // 2 + 1)]


def p_rank_histogram(g: int) -> Dict[int, int]:
    counts = Counter(rec.p_rank for rec in enumerate_admissible(g))
    return {k: counts.get(k, 0) for k in range(g + 1)}


def prank_zero_dimension(g: int) -> int:
    """Dimension of the p-rank 0 locus: the longest p-rank 0 admissible element"""
    return max(rec.dim for rec in enumerate_admissible(g) if rec.p_rank == 0)
