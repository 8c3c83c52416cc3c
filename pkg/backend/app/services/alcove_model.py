"""
Extended alcoves: coordinates, step condition, duality and mu-permissibility
"""
import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from app.core.exceptions import AlcoveError, KRStrataError
from app.models.alcove import ExtendedAlcove
from app.models.group import ExtAffineElement, GroupContext

logger = logging.getLogger(__name__)


def omega_vector(n: int, i: int) -> Tuple[int, ...]:
    """omega_i = (-1^(i), 0^(n-i)) for 0 <= i <= n"""
    return (-1,) * i + (0,) * (n - i)


def standard_alcove(ctx: GroupContext) -> ExtendedAlcove:
    n = ctx.rank
    return ExtendedAlcove(tuple(omega_vector(n, i) for i in range(n)), ctx)


def alcove_of(x: ExtAffineElement) -> ExtendedAlcove:
    """Apply x entrywise to the standard alcove"""
    n = x.ctx.rank
    return ExtendedAlcove(tuple(x.act(omega_vector(n, i)) for i in range(n)), x.ctx)


def extend_indices(a: ExtendedAlcove, i: int) -> Tuple[int, ...]:
    """x_i for arbitrary i, with x_{i+kn} = x_i - k(1,...,1)"""
    return a.vertex(i)


def step_coordinates(a: ExtendedAlcove) -> Optional[List[int]]:
    """For each step x_{i-1} -> x_i (i = 1..n) the coordinate that drops by one.

    None if some step does not lower exactly one coordinate by exactly one.
    """
    steps = []
    for i in range(1, a.n + 1):
        before, after = a.vertex(i - 1), a.vertex(i)
        diff = [b - c for b, c in zip(before, after)]
        if sorted(diff) != [0] * (a.n - 1) + [1]:
            return None
        steps.append(diff.index(1) + 1)
    return steps


def step_condition_holds(a: ExtendedAlcove) -> bool:
    steps = step_coordinates(a)
    return steps is not None and sorted(steps) == list(range(1, a.n + 1))


def element_of(a: ExtendedAlcove) -> ExtAffineElement:
    """Inverse of alcove_of: nu = x_0 and w(i) is the coordinate dropping at step i"""
    steps = step_coordinates(a)
    if steps is None or sorted(steps) != list(range(1, a.n + 1)):
        raise AlcoveError("tuple violates the alcove step condition")
    try:
        return ExtAffineElement(a.ctx, a.x[0], tuple(steps))
    except KRStrataError as e:
        raise AlcoveError(f"alcove does not come from {a.ctx}: {e}") from e


def duality_constant(a: ExtendedAlcove) -> Optional[int]:
    """c with x_i(j) + x_{2g-i}(2g+1-j) = c - 1 for all i, j; None if it fails"""
    if not a.ctx.is_symplectic:
        return None
    n = a.n
    c = None
    for i in range(n):
        xi, dual = a.vertex(i), a.vertex(n - i)
        for j in range(n):
            value = xi[j] + dual[n - 1 - j] + 1
            if c is None:
                c = value
            elif value != c:
                return None
    return c


def raised_sets(a: ExtendedAlcove) -> Tuple[FrozenSet[int], ...]:
    """S_i = {k : x_i(k) = omega_i(k) + 1}"""
    n = a.n
    return tuple(
        frozenset(k + 1 for k, (c, o) in enumerate(zip(a.x[i], omega_vector(n, i))) if c - o == 1)
        for i in range(n)
    )


def alcove_from_raised_sets(ctx: GroupContext, sets: Sequence[FrozenSet[int]]) -> ExtendedAlcove:
    n = ctx.rank
    return ExtendedAlcove(
        tuple(
            tuple(o + (1 if k + 1 in sets[i] else 0) for k, o in enumerate(omega_vector(n, i)))
            for i in range(n)
        ),
        ctx,
    )


def is_mu_permissible(a: ExtendedAlcove) -> bool:
    """omega_i <= x_i <= omega_i + 1 and sum(x_i) = n - r - i for all i, plus duality for GSp"""
    n, r = a.n, a.ctx.r
    for i in range(n):
        for c, o in zip(a.x[i], omega_vector(n, i)):
            if not o <= c <= o + 1:
                return False
        if sum(a.x[i]) != n - r - i:
            return False
    if not step_condition_holds(a):
        return False
    if a.ctx.is_symplectic:
        c = duality_constant(a)
        if c is None:
            return False
        if c != 1:
            raise AlcoveError(f"permissible symplectic alcove with c(x) = {c}, expected 1")
    return True


def r_row(a: ExtendedAlcove, i: int) -> List[int]:
    """[r_i0, ..., r_i,n-1]: r_ij = sum over k = j+1, ..., i in Z/n of omega_i(k) - x_i(k) + 1.

    Indices are read modulo n; for i = j the sum runs over the full cycle.
    """
    n = a.n
    i = i % n
    xi, oi = a.x[i], omega_vector(n, i)
    prefix = [0]
    for c, o in zip(xi, oi):
        prefix.append(prefix[-1] + o - c + 1)
    row = []
    for j in range(n):
        end = j + ((i - j) % n or n)
        if end <= n:
            row.append(prefix[end] - prefix[j])
        else:
            row.append(prefix[n] - prefix[j] + prefix[end - n])
    return row


def r_value(a: ExtendedAlcove, i: int, j: int) -> int:
    return r_row(a, i)[j % a.n]


def linear_r_table(a: ExtendedAlcove) -> Dict[Tuple[int, int], int]:
    """All r_ij, 0 <= i, j < n (r_ii is the full-cycle sum, equal to r)"""
    table = {}
    for i in range(a.n):
        for j, value in enumerate(r_row(a, i)):
            table[(i, j)] = value
    return table


def alcove_from_r_table(ctx: GroupContext, r: Dict[Tuple[int, int], int]) -> ExtendedAlcove:
    """Recover x from its r_ij via x_i(j) = r_ij - r_{i,j-1} + omega_i(j) + 1.

    In the difference r_ii is the empty sum 0, not the stored full-cycle value.
    """
    n = ctx.rank
    vectors = []
    for i in range(n):
        oi = omega_vector(n, i)
        vectors.append(tuple(
            (0 if j % n == i else r[(i, j % n)]) - r[(i, (j - 1) % n)] + oi[j - 1] + 1
            for j in range(1, n + 1)
        ))
    return ExtendedAlcove(tuple(vectors), ctx)


def _closing_chains(n: int, start: FrozenSet[int]) -> Iterator[Tuple[FrozenSet[int], ...]]:
    """Chains S_0 = start -> ... -> S_n = start of raised sets obeying the step rule.

    At step i -> i+1 the position p = i+1 may enter the set, pushing one
    element out; once p is passed, members of `start` that left can never
    return, so such branches are cut.
    """
    stack = [(0, (start,))]
    while stack:
        i, chain = stack.pop()
        if i == n:
            if chain[-1] == start:
                yield chain[:-1]
            continue
        current = chain[-1]
        p = i + 1
        options = [current]
        if p not in current:
            options.extend((current - {j}) | {p} for j in sorted(current))
        for option in options:
            if any(k <= p and k not in option for k in start):
                continue
            stack.append((i + 1, chain + (option,)))


def enumerate_permissible_linear(n: int, r: int) -> List[ExtendedAlcove]:
    """All mu-permissible alcoves of GL_n for mu = (1^(r), 0^(n-r)), sorted"""
    ctx = GroupContext.general_linear(n, r)
    found = []
    for start in combinations(range(1, n + 1), n - r):
        for chain in _closing_chains(n, frozenset(start)):
            found.append(alcove_from_raised_sets(ctx, chain))
    found.sort()
    logger.info(f"{ctx}: {len(found)} permissible alcoves")
    return found
