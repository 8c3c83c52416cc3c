"""
Numerical invariants of KR strata and the superspecial classification
"""
import logging
from typing import Dict, FrozenSet, List, Tuple

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, IndexOutOfRangeError, NotPermissibleError
from app.models.alcove import ExtendedAlcove
from app.models.group import ExtAffineElement, GroupContext
from app.models.stratum import InvariantTable
from app.services import weyl_core
from app.services.admissible_enum import enumerate_admissible
from app.services.alcove_model import alcove_of, is_mu_permissible, r_row

logger = logging.getLogger(__name__)


def r_table(a: ExtendedAlcove) -> InvariantTable:
    """r_ij for g <= i <= 2g (r_{2g,j} := r_{0,j}) and the sigma, sigma', d derived from them"""
    if not a.ctx.is_symplectic or not is_mu_permissible(a):
        raise NotPermissibleError("r-table is only defined for permissible symplectic alcoves")
    g = a.ctx.r
    n = 2 * g
    # rows are read mod 2g, so row 2g is row 0
    rows = {i % n: r_row(a, i) for i in range(g, n + 1)}

    def r(i: int, j: int) -> int:
        return rows[i % n][j % n]

    table = {
        (i, j): r(i, j)
        for i in range(g, n + 1)
        for j in range(n)
        if i != j and not (i == n and j == 0)
    }
    sigma, sigma_prime, d = {}, {}, {}
    for i in range(g + 1):
        for j in range(g + 1):
            back = r(n - i, n - j)
            if j < i:
                sigma[(j, i)] = g - back
            elif i < j:
                sigma_prime[(i, j)] = j - i - back
            d[(i, j)] = r(n - i, j) + j
    return InvariantTable(g=g, r=table, sigma=sigma, sigma_prime=sigma_prime, d=d)


def invariants_separate_strata(g: int) -> bool:
    """True iff x -> r_table(x) is injective on Adm(mu)"""
    if g > settings.INVARIANT_CHECK_MAX_GENUS:
        raise BudgetExceededError(
            f"injectivity check is limited to g <= {settings.INVARIANT_CHECK_MAX_GENUS}"
        )
    records = enumerate_admissible(g)
    keys = {rec.r_table.key() for rec in records}
    logger.info(f"g={g}: {len(keys)} distinct r-tables for {len(records)} strata")
    return len(keys) == len(records)


def superspecial_indices(x: ExtAffineElement) -> FrozenSet[int]:
    """{i <= g/2 : x_i = tau_i and x_{g-i} = tau_{g-i}} on alcove coordinates"""
    g = x.ctx.r
    mine = alcove_of(x)
    ref = alcove_of(weyl_core.tau(x.ctx))
    return frozenset(
        i for i in range(g // 2 + 1)
        if mine.x[i] == ref.x[i] and mine.x[g - i] == ref.x[g - i]
    )


def superspecial_indices_by_support(x: ExtAffineElement) -> FrozenSet[int]:
    """{i : support(x tau^-1) avoids s_i and s_{g-i}}"""
    g = x.ctx.r
    w = weyl_core.compose(x, weyl_core.inverse(weyl_core.tau(x.ctx)))
    supp = weyl_core.support(w)
    return frozenset(i for i in range(g // 2 + 1) if i not in supp and g - i not in supp)


def is_supersingular(x: ExtAffineElement) -> bool:
    # supersingular KR strata are exactly the superspecial ones
    return bool(superspecial_indices(x))


def superspecial_dimension_at(g: int, i: int) -> int:
    """Length of the longest element of W_{i,g-i}: 2i^2 + (g-2i)(g-2i-1)/2"""
    return 2 * i * i + (g - 2 * i) * (g - 2 * i - 1) // 2


def superspecial_union_dimension(g: int) -> Tuple[int, FrozenSet[int]]:
    if g < 1:
        raise IndexOutOfRangeError(f"genus must be positive, got {g}")
    values = {i: superspecial_dimension_at(g, i) for i in range(g // 2 + 1)}
    best = max(values.values())
    return best, frozenset(i for i, v in values.items() if v == best)


def parabolic_generators(g: int, i: int) -> List[int]:
    """Simple reflections generating W_{i,g-i}: all except s_i and s_{g-i}"""
    if not 0 <= i <= g // 2:
        raise IndexOutOfRangeError(f"i must lie in 0..{g // 2}, got {i}")
    return [j for j in range(g + 1) if j not in (i, g - i)]


def longest_element(g: int, i: int) -> ExtAffineElement:
    """Longest element of W_{i,g-i}, times tau"""
    ctx = GroupContext.symplectic(g)
    elements = weyl_core.parabolic_elements(ctx, parabolic_generators(g, i))
    top = max(elements.values())
    longest = [w for w, l in elements.items() if l == top]
    if len(longest) != 1:
        raise IndexOutOfRangeError(f"W_{{{i},{g - i}}} has {len(longest)} elements of maximal length")
    return weyl_core.compose(longest[0], weyl_core.tau(ctx))


def maximal_superspecial_strata(g: int) -> List[Dict]:
    """The stratum of maximal dimension inside each W_{i,g-i} tau"""
    strata = []
    for i in range(g // 2 + 1):
        w = longest_element(g, i)
        strata.append({"i": i, "element": w, "dimension": weyl_core.length(w)})
    return strata
